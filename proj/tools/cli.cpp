#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <tuple>
#include <ostream>
#include <sstream>

#include "renitent/envelope.hpp"
#include "renitent/generators.hpp"
#include "renitent/io.hpp"
#include "renitent/szw.hpp"

namespace renitent::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string field;
  std::string in;
  std::string out;
  unsigned lambda = 0;
  std::string c = "scan";
  std::string theorem = "regular";
  std::string bound = "deficiency";
  std::uint64_t seed = 1;
  double density = 0.5;
  bool json = false;
  // gen
  std::string kind;
  std::string points;
  std::string weights;
  std::string lines;
  unsigned weight = 1;
};

// Thrown when a verification or bound fails after the report is produced.
struct Outcome {
  json report;
  int code = kPass;
  std::string summary;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::HypothesisViolation:
    case ErrorCode::HypothesisNotMet:
    case ErrorCode::VerticalDirectionPresent:
    case ErrorCode::LambdaCapExceeded:
    case ErrorCode::TotalSizeDivisibleByP:
    case ErrorCode::InconsistentLambda:
    case ErrorCode::NoSharpDirection:
    case ErrorCode::TooManyDirections:
    case ErrorCode::DegenerateCurve:
    case ErrorCode::LambdaTooLarge:
    case ErrorCode::LambdaGEp:
    case ErrorCode::ZeroDifference:
    case ErrorCode::FewerThanTwoLines:
      return kHypothesisRejected;
    default:
      return kInputError;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::uint64_t to_uint(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) fail(ErrorCode::ParseError, "bad " + what + " '" + s + "'");
  return v;
}

Elem to_elem(const FieldCtx& f, const std::string& s) {
  const auto v = to_uint(s, "element");
  if (v >= f.q()) fail(ErrorCode::ParseError, "element " + s + " outside 0.." + std::to_string(f.q() - 1));
  return Elem{static_cast<std::uint32_t>(v)};
}

void validate_lambda(const FieldCtx& f, unsigned lambda) {
  const unsigned cap = max_classify_lambda(f.q());
  if (lambda == 0 || lambda > cap) {
    fail(ErrorCode::LambdaOutOfRange, "--lambda must lie in 1.." + std::to_string(cap) + " for q = " +
                                          std::to_string(f.q()));
  }
}

json monomials_json(const TriHomPoly& g) {
  json arr = json::array();
  for (const auto& m : g.monomials()) arr.push_back({{"i", m.i}, {"j", m.j}, {"k", m.k}, {"coeff", idx(m.coeff)}});
  return arr;
}

json report_json(const FieldCtx& f, std::uint32_t q, Direction d, const std::optional<DirectionReport>& r) {
  json j;
  j["direction"] = format_direction(d);
  j["index"] = d.index(q);
  j["uniform"] = r.has_value();
  if (!r) return j;
  j["m_d"] = r->m_d;
  j["lambda_d"] = r->lambda_d();
  j["sharp"] = r->sharp;
  json ren = json::array();
  for (const auto& l : r->renitent) {
    ren.push_back({{"line", format_line(l.line)}, {"alpha", idx(l.alpha)}, {"t", l.t}, {"count", l.count}});
  }
  j["renitent"] = std::move(ren);
  (void)f;
  return j;
}

json verification_json(const VerificationReport& v, std::uint32_t q) {
  json dirs = json::array();
  for (const auto& d : v.directions) {
    json roots = json::array();
    for (const auto& r : d.roots) roots.push_back({{"root", idx(r.root)}, {"multiplicity", r.multiplicity}});
    dirs.push_back({{"direction", format_direction(d.direction)},
                    {"index", d.direction.index(q)},
                    {"ok", d.ok},
                    {"expected_pencil", d.expected_pencil},
                    {"pencil_contained", d.pencil_contained},
                    {"roots_ok", d.roots_ok},
                    {"factors_exactly", d.factors_exactly},
                    {"roots", std::move(roots)}});
  }
  return {{"pass", v.pass}, {"directions", std::move(dirs)}};
}

json curve_json(const EnvelopeCurve& c) {
  return {{"class", c.nominal_class},
          {"actual_degree", c.actual_degree},
          {"provenance", std::string(to_string(c.provenance))},
          {"render", c.g.render()},
          {"monomials", monomials_json(c.g)}};
}

json header(const std::string& command, const FieldCtx& f) {
  return {{"schema", 1}, {"command", command}, {"field", f.spec_string()}};
}

std::vector<DirectionReport> slope_only(const std::vector<DirectionReport>& e, json& excluded) {
  std::vector<DirectionReport> out;
  for (const auto& r : e) {
    if (r.direction.is_vertical()) {
      excluded.push_back(format_direction(r.direction));
    } else {
      out.push_back(r);
    }
  }
  return out;
}

// Largest set of directions sharing (lambda_d, t, t - m_d), ties to larger
// lambda_d then smaller t. The others go to `excluded`.
std::vector<DirectionReport> regular_group(const std::vector<DirectionReport>& e, std::uint32_t p, std::uint32_t q,
                                          json& excluded) {
  using Key = std::tuple<unsigned, std::uint32_t, std::uint32_t>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& r = e[i];
    if (r.renitent.empty()) continue;
    const std::uint32_t t0 = r.renitent.front().t;
    const bool same = std::all_of(r.renitent.begin(), r.renitent.end(), [&](const RenitentLine& l) { return l.t == t0; });
    if (!same) continue;
    groups[{r.lambda_d(), t0, (t0 + p - r.m_d % p) % p}].push_back(i);
  }
  if (groups.empty()) fail(ErrorCode::HypothesisViolation, "no direction has renitent lines with a common t");
  const auto* best = &*groups.begin();
  for (const auto& g : groups) {
    const auto better = g.second.size() != best->second.size()
                            ? g.second.size() > best->second.size()
                            : std::get<0>(g.first) != std::get<0>(best->first)
                                  ? std::get<0>(g.first) > std::get<0>(best->first)
                                  : std::get<1>(g.first) < std::get<1>(best->first);
    if (better) best = &g;
  }
  std::vector<DirectionReport> out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (next < best->second.size() && best->second[next] == i) {
      out.push_back(e[i]);
      ++next;
    } else {
      excluded.push_back(format_direction(e[i].direction));
    }
  }
  if (out.size() < q + 1 && !out.empty() && out.back().direction.is_vertical()) {
    excluded.push_back(format_direction(out.back().direction));
    out.pop_back();
  }
  return out;
}

Outcome cmd_analyze(const Options& o, const Field& field) {
  const auto& f = *field;
  validate_lambda(f, o.lambda);
  const Plane plane(field);
  const auto t = read_point_set_file(field, o.in);
  const auto scan = scan_directions(plane, t, o.lambda);

  json j = header("analyze", f);
  j["lambda"] = o.lambda;
  j["total"] = t.total();
  j["distinct"] = t.distinct();
  json dirs = json::array();
  std::size_t uniform = 0, renitent = 0;
  std::vector<DirectionReport> reports;
  for (std::uint32_t k = 0; k <= f.q(); ++k) {
    const auto& r = scan[k];
    dirs.push_back(report_json(f, f.q(), Direction::from_index(k, f.q()), r));
    if (r) {
      ++uniform;
      renitent += r->lambda_d();
      reports.push_back(*r);
    }
  }
  j["uniform_count"] = uniform;
  j["renitent_count"] = renitent;
  j["directions"] = std::move(dirs);
  const auto lines = renitent_lines(reports);
  json conc = nullptr;
  if (lines.size() >= 2) {
    try {
      if (auto p = concurrency_point(plane, lines)) conc = format_point(f, *p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FewerThanTwoLines) throw;
    }
  }
  j["concurrent_at"] = conc;

  std::ostringstream s;
  s << "field " << f.spec_string() << ", |T| = " << t.total() << ", lambda = " << o.lambda << "\n";
  s << uniform << " uniform directions, " << renitent << " renitent lines\n";
  for (const auto& r : reports) {
    s << "  " << format_direction(r.direction) << "  m_d=" << r.m_d << "  lambda_d=" << r.lambda_d()
      << (r.sharp ? "  sharp" : "") << "\n";
    for (const auto& l : r.renitent) s << "    " << format_line(l.line) << "  t=" << l.t << "\n";
  }
  if (!conc.is_null()) s << "renitent lines concurrent at " << conc.get<std::string>() << "\n";
  return {std::move(j), kPass, s.str()};
}

struct ScanRow {
  std::uint32_t c;
  bool consistent;
  bool feasible;
  std::vector<std::uint64_t> per_direction;
};

Outcome cmd_envelope(const Options& o, const Field& field) {
  const auto& f = *field;
  validate_lambda(f, o.lambda);
  const Plane plane(field);
  const auto t = read_point_set_file(field, o.in);
  const auto e = uniform_directions(plane, t, o.lambda);
  if (e.empty()) fail(ErrorCode::HypothesisNotMet, "no (q - lambda)-uniform direction");

  json j = header("envelope", f);
  j["theorem"] = o.theorem;
  j["lambda"] = o.lambda;
  j["total"] = t.total();
  j["directions_used"] = e.size();
  json excluded = json::array();
  VerificationReport ver;

  if (o.theorem == "regular") {
    const auto used = regular_group(e, f.p(), f.q(), excluded);
    j["directions_used"] = used.size();
    const auto curve = envelope_regular(t, used);
    ver = verify_envelope(curve, used);
    j["curve"] = curve_json(curve);
  } else if (o.theorem == "weighted") {
    const std::uint32_t p = f.p();
    std::uint32_t c = 0;
    if (o.c == "scan") {
      if (t.total() % p == 0) {
        envelope_weighted(t, e, 1);  // raises the divisibility rejection
      }
      std::uint64_t cap = std::min<std::uint64_t>(f.q() - 2, p - 1);
      json rows = json::array();
      std::optional<std::pair<std::uint64_t, std::uint32_t>> best;
      for (std::uint32_t cc = 1; cc < p; ++cc) {
        ScanRow row{cc, true, false, {}};
        for (const auto& r : e) row.per_direction.push_back(lambda_weights(r, p, cc).Lambda);
        row.consistent = std::adjacent_find(row.per_direction.begin(), row.per_direction.end(),
                                            std::not_equal_to<>()) == row.per_direction.end();
        const std::uint64_t L = row.per_direction.front();
        row.feasible = row.consistent && L <= cap;
        json jr = {{"c", cc}, {"consistent", row.consistent}, {"feasible", row.feasible}};
        jr["Lambda"] = row.consistent ? json(L) : json(nullptr);
        jr["per_direction"] = row.per_direction;
        rows.push_back(std::move(jr));
        if (row.feasible && (!best || L < best->first)) best = std::pair{L, cc};
      }
      j["scan"] = std::move(rows);
      if (!best) fail(ErrorCode::InconsistentLambda, "no c in 1..p-1 gives a consistent Lambda within the cap");
      c = best->second;
    } else {
      const auto v = to_uint(o.c, "--c");
      if (v == 0 || v >= p) fail(ErrorCode::CZero, "--c must lie in 1..p-1");
      c = static_cast<std::uint32_t>(v);
    }
    const auto w = envelope_weighted(t, e, c);
    ver = verify_envelope(w.curve, e, &w.multiplicities);
    j["c"] = c;
    j["Lambda"] = w.Lambda;
    json weights = json::array();
    for (const auto& we : w.weights) {
      weights.push_back({{"direction", format_direction(we.direction)}, {"weights", we.weights}, {"Lambda", we.Lambda}});
    }
    j["weights"] = std::move(weights);
    if (w.excluded) excluded.push_back(format_direction(*w.excluded));
    j["curve"] = curve_json(w.curve);
  } else {
    const auto used = slope_only(e, excluded);
    if (used.empty()) fail(ErrorCode::HypothesisNotMet, "no uniform slope direction");
    const auto curve = envelope_general(t, used, o.lambda);
    ver = verify_envelope(curve, used);
    j["curve"] = curve_json(curve);
  }
  j["excluded"] = std::move(excluded);
  j["verification"] = verification_json(ver, f.q());

  std::ostringstream s;
  s << "class " << j["curve"]["class"].get<unsigned>() << " envelope (" << o.theorem << "): "
    << j["curve"]["render"].get<std::string>() << "\n";
  if (j.contains("scan")) {
    for (const auto& r : j["scan"]) {
      s << "  c=" << r["c"].get<unsigned>() << "  Lambda=";
      if (r["Lambda"].is_null()) {
        s << "inconsistent";
      } else {
        s << r["Lambda"].get<std::uint64_t>();
      }
      s << "\n";
    }
    s << "selected c=" << j["c"].get<unsigned>() << ", Lambda=" << j["Lambda"].get<std::uint64_t>() << "\n";
  }
  s << "verification " << (ver.pass ? "pass" : "FAIL") << " on " << ver.directions.size() << " directions\n";
  return {std::move(j), ver.pass ? kPass : kVerificationFailed, s.str()};
}

json index_json(const FieldCtx& f, const IndexReport& r) {
  json lines = json::array();
  for (const auto& l : r.lines) lines.push_back(format_line(l));
  return {{"point", format_point(f, r.point)}, {"index", r.index}, {"lines", std::move(lines)}};
}

Outcome cmd_check(const Options& o, const Field& field) {
  const auto& f = *field;
  validate_lambda(f, o.lambda);
  const Plane plane(field);
  const auto t = read_point_set_file(field, o.in);
  const auto all = uniform_directions(plane, t, o.lambda);

  json j = header("check", f);
  j["theorem"] = o.bound;
  j["lambda"] = o.lambda;
  json hyp;
  json witnesses = json::array();
  bool pass = false;
  json excluded = json::array();

  if (o.bound == "deficiency") {
    const auto e = all.size() == f.q() + 1 ? slope_only(all, excluded) : all;
    const auto r = deficiency_bound_check(e, o.lambda);
    hyp = {{"directions", e.size()}, {"sharp_direction", true}};
    j["lhs"] = r.sum;
    j["rhs"] = r.bound;
    for (const auto& [d, l] : r.certificate) witnesses.push_back({{"direction", format_direction(d)}, {"lambda_d", l}});
    pass = r.pass;
  } else if (o.bound == "szw") {
    const auto e = slope_only(all, excluded);
    if (e.empty()) fail(ErrorCode::HypothesisNotMet, "no uniform slope direction");
    const auto fg = build_fg_thm42(t, e);
    const auto prof = gcd_profile(fg.f, fg.g);
    hyp = {{"directions", e.size()}, {"deg_f", fg.f.total_degree()}, {"deg_g", fg.g.total_degree()}};
    pass = true;
    std::int64_t min_slack = -1;
    std::optional<SzwCheck> tight;
    for (Elem y0 : f.elements()) {
      const auto r = szw_inequality_check(prof, y0);
      const std::int64_t slack = r.rhs - r.lhs;
      witnesses.push_back({{"y0", idx(y0)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", slack}, {"pass", r.pass}});
      pass = pass && r.pass;
      if (!tight || slack < min_slack) {
        tight = r;
        min_slack = slack;
      }
    }
    j["lhs"] = tight->lhs;
    j["rhs"] = tight->rhs;
    j["slack"] = min_slack;
  } else if (o.bound == "renitent") {
    const auto e = slope_only(all, excluded);
    if (e.empty()) fail(ErrorCode::HypothesisNotMet, "no uniform slope direction");
    const auto r = renitent_lower_bound_check(t, e);
    hyp = {{"directions", r.directions}, {"deficiency", r.deficiency}};
    j["lhs"] = r.count;
    j["rhs"] = r.bound;
    witnesses.push_back({{"gcd_count", r.gcd_count},
                         {"counts_agree", r.counts_agree},
                         {"szw_lhs", r.szw.lhs},
                         {"szw_rhs", r.szw.rhs},
                         {"szw_y0", idx(r.szw.y0)}});
    pass = r.pass;
  } else if (o.bound == "dichotomy") {
    const auto r = dichotomy_check(plane, t, o.lambda);
    hyp = {{"directions", r.directions}, {"low", r.low}, {"high", r.high}};
    j["lhs"] = r.worst ? r.worst->index : 0;
    j["rhs"] = r.low;
    j["points_checked"] = r.points_checked;
    if (r.worst) j["worst"] = index_json(f, *r.worst);
    for (const auto& h : r.high_points) witnesses.push_back(index_json(f, h));
    pass = r.pass;
  } else {  // frame
    const auto e = slope_only(all, excluded);
    if (e.empty()) fail(ErrorCode::HypothesisNotMet, "no uniform slope direction");
    hyp = {{"directions", e.size()}};
    std::uint64_t failures = 0, checked = 0;
    for (Elem a : f.elements()) {
      for (Elem b : f.elements()) {
        const auto r = frame_check(plane, t, e, plane.affine(a, b));
        ++checked;
        if (!r.pass) {
          ++failures;
          witnesses.push_back({{"point", format_point(f, plane.affine(a, b))},
                               {"k_identity", r.k_identity},
                               {"szw_lhs", r.szw.lhs},
                               {"szw_rhs", r.szw.rhs}});
        }
      }
    }
    j["lhs"] = failures;
    j["rhs"] = 0;
    j["points_checked"] = checked;
    pass = failures == 0;
  }
  j["hypotheses"] = std::move(hyp);
  j["excluded"] = std::move(excluded);
  j["pass"] = pass;
  j["witnesses"] = std::move(witnesses);

  std::ostringstream s;
  s << o.bound << ": lhs = " << j["lhs"].dump() << ", rhs = " << j["rhs"].dump() << " -> "
    << (pass ? "pass" : "VIOLATED") << "\n";
  if (j.contains("slack")) s << "minimum slack " << j["slack"].dump() << "\n";
  if (o.bound == "dichotomy") {
    for (const auto& w : j["witnesses"]) {
      s << "  " << w["point"].get<std::string>() << " on " << w["index"].dump() << " renitent lines\n";
    }
  }
  return {std::move(j), pass ? kPass : kVerificationFailed, s.str()};
}

std::vector<std::pair<Elem, Elem>> parse_points(const FieldCtx& f, const std::string& s) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& item : split(s, ';')) {
    const auto xy = split(item, ',');
    if (xy.size() != 2) fail(ErrorCode::ParseError, "point '" + item + "' is not 'a,b'");
    out.emplace_back(to_elem(f, xy[0]), to_elem(f, xy[1]));
  }
  return out;
}

ProjLine parse_line(const Plane& plane, const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') body.erase(0, 1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  const auto abc = split(body, ':');
  if (abc.size() != 3) fail(ErrorCode::ParseError, "line '" + s + "' is not '[a:b:c]'");
  const auto& f = *plane.field();
  return plane.line(to_elem(f, abc[0]), to_elem(f, abc[1]), to_elem(f, abc[2]));
}

Outcome cmd_gen(const Options& o, const Field& field) {
  const auto& f = *field;
  const Plane plane(field);
  json truth = header("gen", f);
  truth["kind"] = o.kind;
  std::optional<PointMultiset> t;

  if (o.kind == "planted") {
    std::vector<std::pair<Elem, Elem>> pts;
    if (!o.points.empty()) {
      pts = parse_points(f, o.points);
    } else {
      if (o.lambda == 0) fail(ErrorCode::InvalidArgument, "planted needs --points or --lambda");
      pts = random_points(field, o.lambda, o.seed);
      truth["seed"] = o.seed;
    }
    std::vector<std::uint64_t> w(pts.size(), o.weight);
    if (!o.weights.empty()) {
      w.clear();
      for (const auto& s : split(o.weights, ',')) w.push_back(to_uint(s, "weight"));
    }
    const auto inst = gen_planted(field, pts, w);
    json planted = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) planted.push_back({idx(pts[i].first), idx(pts[i].second), w[i]});
    truth["planted"] = std::move(planted);
    truth["oracle"] = {{"render", inst.oracle.render()}, {"monomials", monomials_json(inst.oracle)}};
    json gen = json::array();
    for (const auto& d : inst.generic) gen.push_back(format_direction(d));
    truth["generic_directions"] = std::move(gen);
    t = inst.points;
  } else if (o.kind == "norm_conic") {
    const auto c = gen_norm_conic(field);
    truth["delta"] = idx(c.delta);
    truth["nucleus"] = format_point(f, c.nucleus);
    t = c.points;
  } else if (o.kind == "random") {
    truth["seed"] = o.seed;
    truth["density"] = o.density;
    t = gen_random(field, o.seed, o.density);
  } else {
    std::vector<ProjLine> lines;
    json jl = json::array();
    for (const auto& s : split(o.lines, ';')) {
      lines.push_back(parse_line(plane, s));
      jl.push_back(format_line(lines.back()));
    }
    if (lines.empty()) fail(ErrorCode::InvalidArgument, "union_lines needs --lines");
    truth["lines"] = std::move(jl);
    t = gen_union_lines(plane, lines);
  }
  truth["total"] = t->total();
  truth["distinct"] = t->distinct();

  std::ostringstream pts;
  write_point_set(pts, *t);
  Outcome res{std::move(truth), kPass, pts.str()};
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Renitent lines in AG(2,q): generate, analyze, construct envelopes, check bounds", "renitent"};
  app.require_subcommand(1);

  const auto common = [&](CLI::App* s, bool needs_in) {
    s->add_option("--field", o.field, "field order: p, p^e, p^e:m=c0,...,ce")->required();
    if (needs_in) s->add_option("--in", o.in, "point-set file")->required();
    s->add_option("--out", o.out, "write the report (atomically) to this path");
    s->add_flag("--json", o.json, "print the JSON report to stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "classify every direction");
  common(analyze, true);
  analyze->add_option("--lambda", o.lambda, "uniformity parameter")->required();

  auto* envelope = app.add_subcommand("envelope", "build and verify a dual envelope");
  common(envelope, true);
  envelope->add_option("--lambda", o.lambda, "uniformity parameter")->required();
  envelope->add_option("--theorem", o.theorem, "regular | weighted | general")
      ->check(CLI::IsMember({"regular", "weighted", "general"}));
  envelope->add_option("--c", o.c, "weighted: constant in 1..p-1, or 'scan'");

  auto* check = app.add_subcommand("check", "evaluate a bound");
  common(check, true);
  check->add_option("--lambda", o.lambda, "uniformity parameter")->required();
  check->add_option("--bound", o.bound, "deficiency | szw | renitent | dichotomy | frame")
      ->check(CLI::IsMember({"deficiency", "szw", "renitent", "dichotomy", "frame"}));

  auto* gen = app.add_subcommand("gen", "generate a point set");
  common(gen, false);
  gen->add_option("kind", o.kind, "planted | norm_conic | random | union_lines")
      ->required()
      ->check(CLI::IsMember({"planted", "norm_conic", "random", "union_lines"}));
  gen->add_option("--lambda", o.lambda, "planted: number of random points");
  gen->add_option("--c", o.weight, "planted: common weight");
  gen->add_option("--points", o.points, "planted: 'a,b;a,b;...'");
  gen->add_option("--weights", o.weights, "planted: 'w,w,...'");
  gen->add_option("--lines", o.lines, "union_lines: '[a:b:c];...'");
  gen->add_option("--seed", o.seed, "PRNG seed");
  gen->add_option("--density", o.density, "random: inclusion probability");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto emit_error = [&](const std::string& code, const std::string& detail, int exit) {
    err << "error: " << code << ": " << detail << "\n";
    if (o.json) {
      json j = {{"schema", 1}, {"error", {{"code", code}, {"detail", detail}}}, {"exit", exit}};
      out << j.dump(2) << "\n";
    }
    return exit;
  };

  try {
    const Field field = parse_field_spec(o.field);
    Outcome res;
    if (gen->parsed()) {
      res = cmd_gen(o, field);
      if (o.out.empty()) {
        out << res.summary;
        if (o.json) out << res.report.dump(2) << "\n";
      } else {
        write_file_atomic(o.out, res.summary);
        write_file_atomic(o.out + ".truth.json", res.report.dump(2) + "\n");
        if (o.json) out << res.report.dump(2) << "\n";
      }
      return res.code;
    }
    if (analyze->parsed()) res = cmd_analyze(o, field);
    if (envelope->parsed()) res = cmd_envelope(o, field);
    if (check->parsed()) res = cmd_check(o, field);
    res.report["exit"] = res.code;
    const std::string text = res.report.dump(2) + "\n";
    if (!o.out.empty()) write_file_atomic(o.out, text);
    if (o.json) {
      out << text;
    } else {
      out << res.summary;
    }
    return res.code;
  } catch (const Error& e) {
    return emit_error(std::string(to_string(e.code())), e.detail(), exit_code_for(e.code()));
  } catch (const std::exception& e) {
    return emit_error("Internal", e.what(), kVerificationFailed);
  }
}

}  // namespace renitent::cli
