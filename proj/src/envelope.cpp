#include "renitent/envelope.hpp"

#include <algorithm>
#include <set>

namespace renitent {
namespace {

std::uint32_t newton_cap(const FieldCtx& f) noexcept {
  return std::min<std::uint32_t>(f.q() >= 2 ? f.q() - 2 : 0, f.p() - 1);
}

std::string dir_name(Direction d) { return format_direction(d); }

// Reports used for the construction. The vertical direction is dropped when
// all q+1 directions are present and rejected otherwise.
std::vector<const DirectionReport*> construction_set(std::span<const DirectionReport> reports, std::uint32_t q,
                                                     std::optional<Direction>& excluded) {
  std::set<std::uint32_t> seen;
  for (const auto& r : reports) {
    if (!seen.insert(r.direction.index(q)).second) {
      fail(ErrorCode::InvalidArgument, "direction " + dir_name(r.direction) + " listed twice");
    }
  }
  std::vector<const DirectionReport*> out;
  for (const auto& r : reports) {
    if (!r.direction.is_vertical()) {
      out.push_back(&r);
      continue;
    }
    if (reports.size() != q + 1) {
      fail(ErrorCode::VerticalDirectionPresent,
           "the vertical direction is only accepted together with all other directions");
    }
    excluded = r.direction;
  }
  return out;
}

EnvelopeCurve newton_curve(const PointMultiset& t, unsigned n, std::uint32_t c, Provenance prov) {
  const auto pi = power_sum_polys(t, n);
  const auto sigma = newton_sigma(pi, n, c);
  TriHomPoly g = monic_envelope(t.field(), sigma);
  const int actual = g.dehomogenize().total_degree();
  return {std::move(g), prov, n, actual, 0};
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Regular: return "regular";
    case Provenance::Weighted: return "weighted";
    case Provenance::General: return "general";
  }
  return "unknown";
}

UniPoly EnvelopeCurve::restrict_to(Direction d) const {
  const auto& f = *g.field();
  const unsigned n = g.degree();
  std::vector<Elem> c(n + 1, Elem{0});
  if (d.is_vertical()) {
    for (unsigned i = 0; i <= n; ++i) {
      const Elem a = g.coeff(i, n - i);
      c[i] = (i % 2 == 0) ? a : f.neg(a);
    }
  } else {
    for (unsigned i = 0; i <= n; ++i) {
      Elem acc = f.zero();
      for (unsigned j = n - i + 1; j-- > 0;) acc = f.add(f.mul(acc, d.slope_value()), g.coeff(i, j));
      c[i] = acc;
    }
  }
  return UniPoly(g.field(), std::move(c));
}

std::vector<UniPoly> power_sum_polys(const PointMultiset& t, unsigned k_max) {
  const Field& field = t.field();
  const auto& f = *field;
  if (k_max + 2 > f.q()) {
    fail(ErrorCode::KMaxTooLarge, "k_max = " + std::to_string(k_max) + " exceeds q-2 = " + std::to_string(f.q() - 2));
  }
  std::vector<UniPoly> pi(k_max + 1, UniPoly(field));
  for (std::size_t i = 0; i < t.distinct(); ++i) {
    const Elem m = f.from_int(static_cast<std::int64_t>(t.mults()[i] % f.p()));
    if (idx(m) == 0) continue;
    const UniPoly line = UniPoly::linear(field, t.ys()[i], f.neg(t.xs()[i]));
    UniPoly power = UniPoly::constant(field, m);
    for (unsigned k = 0; k <= k_max; ++k) {
      pi[k] += power;
      if (k < k_max) power *= line;
    }
  }
  return pi;
}

std::vector<UniPoly> newton_sigma(std::span<const UniPoly> pi, unsigned lambda, std::uint32_t c) {
  if (pi.empty()) fail(ErrorCode::InsufficientPowerSums, "no power sums given");
  const Field& field = pi.front().field();
  const auto& f = *field;
  if (c % f.p() == 0) fail(ErrorCode::CZero, "c must be nonzero mod p");
  if (lambda > newton_cap(f)) {
    fail(ErrorCode::LambdaTooLarge,
         "class " + std::to_string(lambda) + " exceeds min(q-2, p-1) = " + std::to_string(newton_cap(f)));
  }
  if (pi.size() < lambda + 1) fail(ErrorCode::InsufficientPowerSums, "need power sums up to degree lambda");

  const Elem c_inv = f.inv(f.from_int(c));
  std::vector<UniPoly> p;
  p.reserve(lambda + 1);
  for (unsigned i = 0; i <= lambda; ++i) p.push_back(pi[i].scale(c_inv));

  std::vector<UniPoly> sigma{UniPoly::constant(field, f.one())};
  for (unsigned j = 1; j <= lambda; ++j) {
    UniPoly acc(field);
    for (unsigned i = 1; i <= j; ++i) {
      const UniPoly term = sigma[j - i] * p[i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    sigma.push_back(acc.scale(f.inv(f.from_int(j))));
  }
  sigma.erase(sigma.begin());
  return sigma;
}

TriHomPoly monic_envelope(const Field& field, std::span<const UniPoly> sigma) {
  const auto& f = *field;
  const auto n = static_cast<unsigned>(sigma.size());
  BiPoly poly = BiPoly::monomial(field, f.one(), n, 0);
  for (unsigned j = 1; j <= n; ++j) {
    const Elem sign = (j % 2 == 0) ? f.one() : f.neg(f.one());
    poly += BiPoly::from_second(sigma[j - 1]) * BiPoly::monomial(field, sign, n - j, 0);
  }
  return TriHomPoly::homogenize(poly, n);
}

EnvelopeCurve envelope_regular(const PointMultiset& t, std::span<const DirectionReport> e) {
  const auto& f = *t.field();
  const std::uint32_t p = f.p();
  if (e.empty()) fail(ErrorCode::InvalidArgument, "no directions given");

  std::optional<std::uint32_t> residue;
  for (const auto& r : e) {
    if (r.renitent.empty()) {
      fail(ErrorCode::HypothesisViolation, "(ii) direction " + dir_name(r.direction) + " has no renitent lines");
    }
    if (r.lambda_d() > newton_cap(f)) {
      fail(ErrorCode::HypothesisViolation, "(i) " + std::to_string(r.lambda_d()) +
                                               " renitent lines exceed min(q-2, p-1) = " +
                                               std::to_string(newton_cap(f)));
    }
    const std::uint32_t t_d = r.renitent.front().t;
    for (const auto& l : r.renitent) {
      if (l.t != t_d) {
        fail(ErrorCode::HypothesisViolation,
             "(ii) renitent lines of direction " + dir_name(r.direction) + " meet T in different residues");
      }
    }
    const std::uint32_t diff = (t_d + p - r.m_d) % p;
    if (residue && *residue != diff) {
      fail(ErrorCode::HypothesisViolation, "(iii) t_d - m_d is " + std::to_string(*residue) + " and " +
                                               std::to_string(diff) + " on different directions");
    }
    residue = diff;
  }
  const unsigned n = e.front().lambda_d();
  for (const auto& r : e) {
    if (r.lambda_d() != n) {
      fail(ErrorCode::InconsistentLambda, "directions carry " + std::to_string(n) + " and " +
                                              std::to_string(r.lambda_d()) + " renitent lines");
    }
  }
  std::optional<Direction> excluded;
  construction_set(e, f.q(), excluded);
  return newton_curve(t, n, *residue, Provenance::Regular);
}

std::vector<std::uint32_t> lambda_weights(std::uint32_t p, std::uint32_t m, std::span<const std::uint32_t> ts,
                                          std::uint32_t c) {
  if (c % p == 0) fail(ErrorCode::CZero, "c must be nonzero mod p");
  // c^{-1} mod p by Fermat.
  std::uint64_t c_inv = 1, base = c % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) c_inv = c_inv * base % p;
    base = base * base % p;
  }
  std::vector<std::uint32_t> out;
  out.reserve(ts.size());
  for (auto t : ts) {
    const std::uint64_t diff = (t % p + p - m % p) % p;
    if (diff == 0) fail(ErrorCode::ZeroDifference, "renitent residue equals the typical one");
    out.push_back(static_cast<std::uint32_t>(diff * c_inv % p));
  }
  return out;
}

WeightEntry lambda_weights(const DirectionReport& report, std::uint32_t p, std::uint32_t c) {
  std::vector<std::uint32_t> ts;
  for (const auto& l : report.renitent) ts.push_back(l.t);
  WeightEntry w{report.direction, lambda_weights(p, report.m_d, ts, c), 0};
  for (auto x : w.weights) w.Lambda += x;
  return w;
}

WeightedEnvelope envelope_weighted(const PointMultiset& t, std::span<const DirectionReport> fset, std::uint32_t c) {
  const auto& f = *t.field();
  const std::uint32_t p = f.p();
  if (fset.empty()) fail(ErrorCode::InvalidArgument, "no directions given");
  if (c % p == 0) fail(ErrorCode::CZero, "c must be nonzero mod p");
  if (t.total() % p == 0) {
    fail(ErrorCode::TotalSizeDivisibleByP,
         "|T| = " + std::to_string(t.total()) + " is divisible by p; the weighted envelope does not apply");
  }

  std::vector<WeightEntry> weights;
  for (const auto& r : fset) {
    if (r.renitent.empty()) {
      fail(ErrorCode::InconsistentLambda, "direction " + dir_name(r.direction) + " has no renitent lines");
    }
    weights.push_back(lambda_weights(r, p, c));
  }
  const std::uint32_t cap = newton_cap(f);
  for (const auto& w : weights) {
    if (w.Lambda > cap) {
      fail(ErrorCode::LambdaCapExceeded, "Lambda = " + std::to_string(w.Lambda) + " at " + dir_name(w.direction) +
                                             " exceeds min(q-2, p-1) = " + std::to_string(cap));
    }
  }
  const std::uint64_t Lambda = weights.front().Lambda;
  for (const auto& w : weights) {
    if (w.Lambda != Lambda) {
      fail(ErrorCode::InconsistentLambda,
           "Lambda differs between directions: " + std::to_string(Lambda) + " and " + std::to_string(w.Lambda));
    }
  }

  std::optional<Direction> excluded;
  construction_set(fset, f.q(), excluded);
  EnvelopeCurve curve = newton_curve(t, static_cast<unsigned>(Lambda), c, Provenance::Weighted);

  MultiplicityMap mult;
  for (std::size_t k = 0; k < fset.size(); ++k) {
    for (std::size_t i = 0; i < fset[k].renitent.size(); ++i) {
      mult[{fset[k].direction.index(f.q()), idx(fset[k].renitent[i].alpha)}] = weights[k].weights[i];
    }
  }
  return {std::move(curve), Lambda, std::move(weights), std::move(mult), excluded};
}

bool weighted_power_recursion_check(const Field& field, std::span<const Elem> cs, std::span<const Elem> xs,
                                    unsigned j) {
  const auto& f = *field;
  if (cs.size() != xs.size()) fail(ErrorCode::InvalidArgument, "c and x lists differ in length");
  const std::size_t l = xs.size();
  std::vector<Elem> sigma(l + 1, f.zero());
  sigma[0] = f.one();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = i + 1; k > 0; --k) sigma[k] = f.add(sigma[k], f.mul(sigma[k - 1], xs[i]));
  }
  auto power_sum = [&](std::size_t k) {
    Elem acc = f.zero();
    for (std::size_t i = 0; i < l; ++i) acc = f.add(acc, f.mul(cs[i], f.pow(xs[i], k)));
    return acc;
  };
  Elem rhs = f.zero();
  for (std::size_t i = 1; i <= l; ++i) {
    const Elem term = f.mul(power_sum(l + j - i), sigma[i]);
    rhs = (i % 2 == 1) ? f.add(rhs, term) : f.sub(rhs, term);
  }
  return power_sum(l + j) == rhs;
}

PolyMatrix hankel_matrix(std::span<const UniPoly> pi, unsigned lambda) {
  if (lambda == 0) fail(ErrorCode::InvalidArgument, "lambda must be positive");
  if (pi.size() < 2 * lambda - 1) {
    fail(ErrorCode::InsufficientPowerSums, "need pi_0 .. pi_" + std::to_string(2 * lambda - 2));
  }
  PolyMatrix h(pi.front().field(), lambda);
  for (unsigned r = 0; r < lambda; ++r) {
    for (unsigned c = 0; c < lambda; ++c) h.at(r, c) = pi[lambda - 1 + r - c];
  }
  return h;
}

Elem hankel_det_closed_form(const FieldCtx& field, std::span<const Elem> cs, std::span<const Elem> xs) {
  if (cs.size() != xs.size()) fail(ErrorCode::InvalidArgument, "c and x lists differ in length");
  const std::size_t l = xs.size();
  Elem acc = field.one();
  for (auto c : cs) acc = field.mul(acc, c);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      const Elem d = field.sub(xs[i], xs[j]);
      acc = field.mul(acc, field.mul(d, d));
    }
  }
  return ((l * (l - 1) / 2) % 2 == 1) ? field.neg(acc) : acc;
}

EnvelopeCurve envelope_general(const PointMultiset& t, std::span<const DirectionReport> e, unsigned lambda) {
  const Field& field = t.field();
  const auto& f = *field;
  if (lambda == 0 || lambda > max_classify_lambda(f.q())) {
    fail(ErrorCode::LambdaOutOfRange, "lambda = " + std::to_string(lambda) + " must satisfy 0 < lambda <= " +
                                          std::to_string(max_classify_lambda(f.q())));
  }
  if (e.size() > f.q()) fail(ErrorCode::TooManyDirections, "at most q directions are allowed");
  for (const auto& r : e) {
    if (r.direction.is_vertical()) {
      fail(ErrorCode::VerticalDirectionPresent, "the vertical direction must not be among the directions");
    }
    if (r.lambda_d() > lambda) {
      fail(ErrorCode::HypothesisViolation,
           "direction " + dir_name(r.direction) + " has more than " + std::to_string(lambda) + " renitent lines");
    }
  }

  const auto pi = power_sum_polys(t, 2 * lambda - 1);
  const PolyMatrix h = hankel_matrix(pi, lambda);
  const std::vector<UniPoly> column(pi.begin() + lambda, pi.begin() + 2 * lambda);

  BiPoly poly = BiPoly::from_second(poly_det(h)) * BiPoly::monomial(field, f.one(), lambda, 0);
  for (unsigned i = 1; i <= lambda; ++i) {
    const UniPoly mi = poly_det(h.with_column(i - 1, column));
    poly = poly - BiPoly::from_second(mi) * BiPoly::monomial(field, f.one(), lambda - i, 0);
  }
  if (poly.is_zero()) fail(ErrorCode::DegenerateCurve, "the determinantal curve vanishes identically");

  const int actual = poly.total_degree();
  return {TriHomPoly::homogenize(poly, lambda * lambda), Provenance::General, lambda * lambda, actual, lambda};
}

DeficiencyCheck deficiency_bound_check(std::span<const DirectionReport> e, unsigned lambda) {
  DeficiencyCheck out{false, 0, std::uint64_t{lambda} * lambda - lambda, {}};
  bool any_sharp = false;
  for (const auto& r : e) {
    if (r.lambda_d() > lambda) {
      fail(ErrorCode::HypothesisViolation,
           "direction " + dir_name(r.direction) + " has more than " + std::to_string(lambda) + " renitent lines");
    }
    any_sharp = any_sharp || r.lambda_d() == lambda;
    out.sum += lambda - r.lambda_d();
    out.certificate.emplace_back(r.direction, r.lambda_d());
  }
  if (!any_sharp) fail(ErrorCode::NoSharpDirection, "no direction carries exactly lambda renitent lines");
  out.pass = out.sum <= out.bound;
  return out;
}

VerificationReport verify_envelope(const EnvelopeCurve& curve, std::span<const DirectionReport> reports,
                                   const MultiplicityMap* mult) {
  const Field& field = curve.g.field();
  const auto& f = *field;
  VerificationReport out;
  for (const auto& r : reports) {
    DirectionVerification v{r.direction, false, false, false, false, {}, false};
    v.expected_pencil = curve.provenance == Provenance::General && r.lambda_d() < curve.lambda;
    const UniPoly restricted = curve.restrict_to(r.direction);
    if (restricted.is_zero()) {
      v.pencil_contained = true;
      v.ok = v.expected_pencil;
      out.pass = out.pass && v.ok;
      out.directions.push_back(std::move(v));
      continue;
    }
    v.roots = roots_with_multiplicity(restricted);
    v.roots_ok = true;
    UniPoly expected = UniPoly::constant(field, restricted.leading());
    for (const auto& l : r.renitent) {
      std::uint32_t want = 1;
      if (mult) {
        const auto it = mult->find({r.direction.index(f.q()), idx(l.alpha)});
        if (it == mult->end()) {
          v.roots_ok = false;
          continue;
        }
        want = it->second;
      }
      const auto found = std::find_if(v.roots.begin(), v.roots.end(),
                                      [&](const RootMultiplicity& rm) { return rm.root == l.alpha; });
      const std::uint32_t have = found == v.roots.end() ? 0 : found->multiplicity;
      if (mult ? have != want : have < want) v.roots_ok = false;
      expected *= UniPoly::linear(field, f.neg(l.alpha), f.one()).pow(want);
    }
    v.factors_exactly = expected == restricted;
    v.ok = !v.expected_pencil && v.roots_ok && v.factors_exactly;
    out.pass = out.pass && v.ok;
    out.directions.push_back(std::move(v));
  }
  return out;
}

}  // namespace renitent
