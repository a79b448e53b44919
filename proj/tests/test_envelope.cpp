#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace renitent;
using th::code_of;
using th::E;

namespace {

// Generic directions of a planted instance as reports, leaving out the
// vertical direction unless every direction is generic.
std::vector<DirectionReport> generic_reports(const Plane& pl, const PlantedInstance& inst, unsigned lambda) {
  std::vector<Direction> dirs;
  for (Direction d : inst.generic) {
    if (!d.is_vertical() || inst.generic.size() == pl.q() + 1) dirs.push_back(d);
  }
  return th::reports_on(pl, inst.points, lambda, dirs);
}

TriHomPoly dual_lines(const Field& f, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pts,
                      const std::vector<unsigned>& w) {
  TriHomPoly g(f, 0);
  g.set(0, 0, 0, f->one());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    g = g * TriHomPoly::linear(f, f->one(), E(pts[i].first), f->neg(E(pts[i].second))).pow(w[i]);
  }
  return g;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> distinct_points(const Field& f, std::mt19937_64& rng,
                                                                     std::size_t n) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> s;
  while (s.size() < n) {
    s.insert({static_cast<std::uint32_t>(rng() % f->q()), static_cast<std::uint32_t>(rng() % f->q())});
  }
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("power sums") {
  const auto f = FieldCtx::create(7);
  const auto origin = power_sum_polys(th::ms(f, {{0, 0, 1}}), 5);
  REQUIRE(origin.size() == 6);
  CHECK(origin[0] == UniPoly::constant(f, E(1)));
  for (std::size_t k = 1; k < origin.size(); ++k) CHECK(origin[k].is_zero());

  const auto one = power_sum_polys(th::ms(f, {{1, 2, 1}}), 5);
  const auto base = UniPoly::linear(f, E(2), f->neg(E(1)));
  for (unsigned k = 0; k <= 5; ++k) CHECK(one[k] == base.pow(k));

  CHECK(code_of([&] { power_sum_polys(th::ms(f, {{0, 0, 1}}), 6); }) == ErrorCode::KMaxTooLarge);

  std::mt19937_64 rng(1);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{11, 1}, {3, 2}, {2, 4}}) {
    const auto fl = FieldCtx::create(p, e);
    const oracle::Field o(p, e);
    for (int r = 0; r < 10; ++r) {
      std::vector<PointEntry> en;
      for (int i = 0; i < 6; ++i) {
        en.push_back({E(static_cast<std::uint32_t>(rng() % o.q)), E(static_cast<std::uint32_t>(rng() % o.q)), 1 + rng() % 3});
      }
      const PointMultiset t(fl, en);
      const auto pi = power_sum_polys(t, o.q - 2);
      for (std::uint32_t d = 0; d < o.q; ++d) {
        const auto prof = oracle::class_counts(o, th::pts(t), d);
        for (unsigned k = 0; k + 2 <= o.q; ++k) {
          std::uint32_t want = 0;
          for (std::uint32_t icpt = 0; icpt < o.q; ++icpt) {
            want = o.add(want, o.mul(o.from_int(static_cast<std::int64_t>(prof[icpt] % p)), o.pow(icpt, k)));
          }
          REQUIRE(idx(pi[k].eval(E(d))) == want);
        }
      }
    }
  }
}

TEST_CASE("Newton recursion") {
  const auto f = FieldCtx::create(11);
  const auto t = th::ms(f, {{1, 2, 3}, {4, 0, 3}, {5, 5, 3}});
  const auto pi = power_sum_polys(t, 4);
  const Elem ic = f->inv(E(3));
  const auto m1 = newton_sigma(pi, 1, 3);
  CHECK(m1[0] == pi[1].scale(ic));
  const auto m2 = newton_sigma(pi, 2, 3);
  const auto p1 = pi[1].scale(ic), p2 = pi[2].scale(ic);
  CHECK(m2[1] == (p1 * p1 - p2).scale(f->inv(E(2))));
  CHECK(code_of([&] { newton_sigma(pi, 1, 11); }) == ErrorCode::CZero);
  CHECK(code_of([&] { newton_sigma(pi, 10, 1); }) == ErrorCode::LambdaTooLarge);
  CHECK(code_of([&] { newton_sigma(std::span(pi).first(2), 3, 1); }) == ErrorCode::InsufficientPowerSums);

  const auto f5 = FieldCtx::create(5);
  const auto single = power_sum_polys(th::ms(f5, {{3, 1, 1}}), 1);
  const auto s = newton_sigma(single, 1, 1);
  CHECK(s[0] == UniPoly::linear(f5, E(1), f5->neg(E(3))));
  CHECK(monic_envelope(f5, s) == TriHomPoly::linear(f5, E(1), E(3), f5->neg(E(1))));
}

TEST_CASE("regular envelope of a single point") {
  const auto f = FieldCtx::create(7);
  const Plane pl(f);
  const auto t = th::ms(f, {{2, 5, 1}});
  const auto e = uniform_directions(pl, t, 1);
  REQUIRE(e.size() == 8);
  const auto curve = envelope_regular(t, e);
  CHECK(curve.nominal_class == 1);
  CHECK(curve.g.proportional_to(TriHomPoly::linear(f, E(1), E(2), f->neg(E(5)))));
  CHECK(verify_envelope(curve, e).pass);
}

TEST_CASE("regular envelope equals the product of dual lines") {
  std::mt19937_64 rng(2);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {11, 1}, {13, 1}, {3, 2}}) {
    const auto f = FieldCtx::create(p, e);
    const Plane pl(f);
    for (unsigned lambda = 1; lambda <= 3 && lambda < p && lambda <= max_classify_lambda(f->q()); ++lambda) {
      for (int r = 0; r < 4; ++r) {
        const auto pts = distinct_points(f, rng, lambda);
        const std::uint64_t c = 1 + rng() % (p - 1);
        const auto inst = th::planted(f, pts, std::vector<std::uint64_t>(lambda, c));
        const auto reports = generic_reports(pl, inst, lambda);
        REQUIRE(!reports.empty());
        const auto curve = envelope_regular(inst.points, reports);
        CHECK(curve.nominal_class == lambda);
        CHECK(curve.g.proportional_to(dual_lines(f, pts, std::vector<unsigned>(lambda, 1))));
        CHECK(verify_envelope(curve, reports).pass);
      }
    }
  }
}

TEST_CASE("regular hypotheses") {
  const auto f = FieldCtx::create(7);
  const Plane pl(f);
  // slope 1 carries one renitent line with t = 2, the others two with t = 1
  const auto inst = th::planted(f, {{0, 0}, {1, 1}}, {1, 1});
  const auto all = uniform_directions(pl, inst.points, 2);
  std::vector<DirectionReport> mixed;
  for (const auto& r : all) {
    if (!r.direction.is_vertical()) mixed.push_back(r);
  }
  CHECK(code_of([&] { envelope_regular(inst.points, mixed); }) == ErrorCode::HypothesisViolation);

  const auto good = generic_reports(pl, inst, 2);
  std::vector<DirectionReport> with_vertical = good;
  with_vertical.push_back(*classify_direction(pl, inst.points, Direction::vertical(), 2));
  CHECK(code_of([&] { envelope_regular(inst.points, with_vertical); }) == ErrorCode::VerticalDirectionPresent);

  const auto empty_dir = classify_direction(pl, PointMultiset(f), Direction::slope(E(0)), 1);
  std::vector<DirectionReport> none = {*empty_dir};
  CHECK(code_of([&] { envelope_regular(PointMultiset(f), none); }) == ErrorCode::HypothesisViolation);
}

TEST_CASE("Lambda arithmetic") {
  const std::vector<std::uint32_t> t335 = {3, 3, 5};
  for (std::uint32_t p : {7u, 11u, 13u, 17u}) {
    const auto w = lambda_weights(p, 1, t335, 2);
    CHECK(w == std::vector<std::uint32_t>{1, 1, 2});
  }
  const std::vector<std::uint32_t> t28 = {2, 8};
  CHECK(lambda_weights(13, 1, t28, 1) == std::vector<std::uint32_t>{1, 7});
  CHECK(lambda_weights(13, 1, t28, 7) == std::vector<std::uint32_t>{2, 1});
  const std::vector<std::uint32_t> t11 = {1, 1}, t34 = {3, 4};
  CHECK(lambda_weights(5, 0, t11, 1) == std::vector<std::uint32_t>{1, 1});
  CHECK(lambda_weights(5, 0, t34, 1) == std::vector<std::uint32_t>{3, 4});
  CHECK(lambda_weights(5, 0, t34, 3) == std::vector<std::uint32_t>{1, 3});
  CHECK(lambda_weights(5, 0, t11, 3) == std::vector<std::uint32_t>{2, 2});
  CHECK(code_of([&] { lambda_weights(5, 0, t11, 5); }) == ErrorCode::CZero);
  const std::vector<std::uint32_t> same = {1};
  CHECK(code_of([&] { lambda_weights(5, 1, same, 2); }) == ErrorCode::ZeroDifference);

  std::mt19937_64 rng(3);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int r = 0; r < 200; ++r) {
      const std::uint32_t m = rng() % p, c = 1 + rng() % (p - 1);
      std::vector<std::uint32_t> ts;
      for (int i = 0; i < 4; ++i) {
        std::uint32_t t = rng() % p;
        if (t == m) t = (t + 1) % p;
        ts.push_back(t);
      }
      const auto w = lambda_weights(p, m, ts, c);
      for (std::size_t i = 0; i < ts.size(); ++i) REQUIRE(w[i] == oracle::weight(p, m, ts[i], c));
    }
  }
}

TEST_CASE("weighted envelope of the p = 13 profile") {
  // the full line y = 0, (0,1) once and (1,3) seven times
  const auto f = FieldCtx::create(13);
  const Plane pl(f);
  std::vector<PointEntry> en;
  for (Elem a : f->elements()) en.push_back({a, E(0), 1});
  en.push_back({E(0), E(1), 1});
  en.push_back({E(1), E(3), 7});
  const PointMultiset t(f, en);
  CHECK(t.total() == 21);
  const auto e = uniform_directions(pl, t, 2);
  REQUIRE(e.size() == 14);
  for (const auto& r : e) {
    // lines of slope 0 miss or contain y = 0; the rest meet it once
    CHECK(r.m_d == (r.direction == Direction::slope(E(0)) ? 0u : 1u));
  }
  std::multiset<std::uint32_t> ts;
  for (const auto& l : e[1].renitent) ts.insert(l.t);
  CHECK(ts == std::multiset<std::uint32_t>{2, 8});
  // (0,1) and (1,3) share the slope-2 line, which meets T in 9 points
  REQUIRE(e[2].renitent.size() == 1);
  CHECK(e[2].renitent[0].t == 9);
  const auto w1 = envelope_weighted(t, e, 1);
  CHECK(w1.Lambda == 8);
  const auto w7 = envelope_weighted(t, e, 7);
  CHECK(w7.Lambda == 3);
  CHECK(w7.curve.nominal_class == 3);
  CHECK(w7.excluded == Direction::vertical());
  CHECK(verify_envelope(w7.curve, e, &w7.multiplicities).pass);
  CHECK(verify_envelope(w1.curve, e, &w1.multiplicities).pass);
  // c = 2 puts Lambda = 17 on slope 0, over the cap of 11
  CHECK(code_of([&] { envelope_weighted(t, e, 2); }) == ErrorCode::LambdaCapExceeded);

  const auto pair = th::planted(f, {{0, 0}, {1, 5}}, {1, 1});
  auto reps = th::reports_on(pl, pair.points, 2, {Direction::slope(E(0)), Direction::slope(E(1))});
  reps[1].renitent[0].t = 2;
  CHECK(code_of([&] { envelope_weighted(pair.points, reps, 1); }) == ErrorCode::InconsistentLambda);
}

TEST_CASE("weighted envelope of planted multisets") {
  std::mt19937_64 rng(4);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {11, 1}, {13, 1}, {5, 2}}) {
    const auto f = FieldCtx::create(p, e);
    const Plane pl(f);
    const std::uint64_t cap = std::min<std::uint64_t>(f->q() - 2, p - 1);
    for (int r = 0; r < 6; ++r) {
      const std::size_t n = 1 + rng() % 3;
      const auto pts = distinct_points(f, rng, n);
      std::vector<unsigned> w;
      std::uint64_t Lambda = 0;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(1 + static_cast<unsigned>(rng() % 3));
        Lambda += w.back();
      }
      if (Lambda > cap) continue;
      const std::uint32_t c = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
      std::vector<std::uint64_t> mult;
      for (unsigned wi : w) mult.push_back(std::uint64_t{c} * wi);
      const auto inst = th::planted(f, pts, mult);
      if (inst.points.total() % p == 0) {
        CHECK(code_of([&] { envelope_weighted(inst.points, generic_reports(pl, inst, 3), c); }) ==
              ErrorCode::TotalSizeDivisibleByP);
        continue;
      }
      // every direction is uniform: merged lines carry the summed weight
      const auto all = uniform_directions(pl, inst.points, std::min<unsigned>(3, max_classify_lambda(f->q())));
      REQUIRE(all.size() == f->q() + 1);
      const auto we = envelope_weighted(inst.points, all, c);
      CHECK(we.Lambda == Lambda);
      CHECK(we.curve.g.proportional_to(dual_lines(f, pts, w)));
      const auto v = verify_envelope(we.curve, all, &we.multiplicities);
      CHECK(v.pass);
      for (const auto& d : v.directions) {
        for (const auto& root : d.roots) {
          const auto it = we.multiplicities.find({d.direction.index(f->q()), idx(root.root)});
          REQUIRE(it != we.multiplicities.end());
          CHECK(it->second == root.multiplicity);
        }
      }
    }
  }
}

TEST_CASE("weighted with unit weights reduces to the regular envelope") {
  const auto f = FieldCtx::create(11);
  const Plane pl(f);
  const auto inst = th::planted(f, {{1, 2}, {3, 7}}, {4, 4});
  const auto reports = generic_reports(pl, inst, 2);
  const auto reg = envelope_regular(inst.points, reports);
  const auto wei = envelope_weighted(inst.points, reports, 4);
  CHECK(wei.Lambda == 2);
  CHECK(wei.curve.g.proportional_to(reg.g));
}

TEST_CASE("weighted hypotheses") {
  const auto f = FieldCtx::create(5);
  const Plane pl(f);
  const auto line = th::ms(f, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}, {4, 0, 1}});
  const auto e = uniform_directions(pl, line, 1);
  CHECK(code_of([&] { envelope_weighted(line, e, 1); }) == ErrorCode::TotalSizeDivisibleByP);
  CHECK(code_of([&] { envelope_weighted(line, e, 0); }) == ErrorCode::CZero);
  const std::vector<DirectionReport> none;
  CHECK(code_of([&] { envelope_weighted(line, none, 1); }) == ErrorCode::InvalidArgument);

  const auto f7 = FieldCtx::create(7);
  const Plane p7(f7);
  const auto heavy = th::planted(f7, {{0, 0}, {1, 3}}, {3, 3});
  const auto reps = generic_reports(p7, heavy, 2);
  CHECK(code_of([&] { envelope_weighted(heavy.points, reps, 1); }) == ErrorCode::LambdaCapExceeded);
}

TEST_CASE("power recursion lemma") {
  std::mt19937_64 rng(5);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 1}, {7, 1}, {3, 2}}) {
    const auto f = FieldCtx::create(p, e);
    const std::vector<Elem> x1 = {E(3)}, c1 = {E(2)};
    for (unsigned j = 0; j < 5; ++j) CHECK(weighted_power_recursion_check(f, c1, x1, j));
    const std::vector<Elem> zero = {E(0), E(0)}, xs = {E(1), E(2)};
    CHECK(weighted_power_recursion_check(f, zero, xs, 2));
    for (int r = 0; r < 200; ++r) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<Elem> cs, xv;
      for (std::size_t i = 0; i < n; ++i) {
        cs.push_back(E(static_cast<std::uint32_t>(rng() % f->q())));
        xv.push_back(E(static_cast<std::uint32_t>(rng() % f->q())));
      }
      REQUIRE(weighted_power_recursion_check(f, cs, xv, static_cast<unsigned>(rng() % 6)));
    }
  }
}

TEST_CASE("Hankel matrices") {
  const auto f = FieldCtx::create(11);
  const auto pi = power_sum_polys(th::ms(f, {{1, 2, 1}, {3, 4, 2}}), 3);
  const auto h1 = hankel_matrix(pi, 1);
  CHECK(h1.size() == 1);
  CHECK(h1.at(0, 0) == pi[0]);
  const auto h2 = hankel_matrix(pi, 2);
  CHECK(h2.at(0, 0) == pi[1]);
  CHECK(h2.at(0, 1) == pi[0]);
  CHECK(h2.at(1, 0) == pi[2]);
  CHECK(h2.at(1, 1) == pi[1]);
  CHECK(code_of([&] { hankel_matrix(std::span(pi).first(2), 2); }) == ErrorCode::InsufficientPowerSums);
}

TEST_CASE("Hankel determinant closed form") {
  std::mt19937_64 rng(6);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{11, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const auto f = FieldCtx::create(p, e);
    const oracle::Field o(p, e);
    const std::vector<Elem> c1 = {E(4 % o.q)}, x1 = {E(2)};
    CHECK(hankel_det_closed_form(*f, c1, x1) == E(4 % o.q));
    const std::vector<Elem> cs2 = {E(1), E(2)}, rep = {E(3), E(3)};
    CHECK(hankel_det_closed_form(*f, cs2, rep) == f->zero());
    for (int r = 0; r < 500; ++r) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<Elem> cs, xs;
      for (std::size_t i = 0; i < n; ++i) {
        cs.push_back(E(static_cast<std::uint32_t>(rng() % o.q)));
        xs.push_back(E(static_cast<std::uint32_t>(rng() % o.q)));
      }
      std::vector<std::uint32_t> P(2 * n, 0);
      for (std::size_t k = 0; k < 2 * n; ++k) {
        for (std::size_t i = 0; i < n; ++i) P[k] = o.add(P[k], o.mul(idx(cs[i]), o.pow(idx(xs[i]), k)));
      }
      std::vector<std::vector<std::uint32_t>> H(n, std::vector<std::uint32_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) H[a][b] = P[n - 1 + a - b];
      }
      REQUIRE(idx(hankel_det_closed_form(*f, cs, xs)) == oracle::det(o, H));
    }
  }
}

TEST_CASE("general envelope for lambda = 1 has the regular shape") {
  const auto f = FieldCtx::create(7);
  const Plane pl(f);
  const auto t = th::ms(f, {{2, 3, 2}});
  std::vector<DirectionReport> e;
  for (const auto& r : uniform_directions(pl, t, 1)) {
    if (!r.direction.is_vertical()) e.push_back(r);
  }
  const auto g = envelope_general(t, e, 1);
  CHECK(g.nominal_class == 1);
  const auto pi = power_sum_polys(t, 1);
  const auto shape = BiPoly::from_second(pi[0]) * BiPoly::monomial(f, E(1), 1, 0) - BiPoly::from_second(pi[1]);
  CHECK(g.g.proportional_to(TriHomPoly::homogenize(shape, 1)));
  CHECK(g.g.proportional_to(TriHomPoly::linear(f, E(1), E(2), f->neg(E(3)))));
}

TEST_CASE("general envelope contains merged pencils") {
  for (std::uint32_t p : {11u, 13u}) {
    const auto f = FieldCtx::create(p);
    const Plane pl(f);
    // (0,0), (1,1) share the slope-1 line; (2,5) is off it
    const auto inst = th::planted(f, {{0, 0}, {1, 1}, {2, 5}}, {1, 2, 1});
    std::vector<DirectionReport> e;
    for (const auto& r : uniform_directions(pl, inst.points, 3)) {
      if (!r.direction.is_vertical()) e.push_back(r);
    }
    const auto curve = envelope_general(inst.points, e, 3);
    CHECK(curve.nominal_class == 9);
    bool saw_merged = false;
    for (const auto& r : e) {
      const auto restricted = curve.restrict_to(r.direction);
      if (r.lambda_d() < 3) {
        saw_merged = true;
        CHECK(restricted.is_zero());
      }
      for (const auto& l : r.renitent) {
        const auto dp = pl.dual_point(l.line);
        CHECK(curve.g.eval(dp.x, dp.y, dp.z) == f->zero());
      }
    }
    CHECK(saw_merged);
    CHECK(verify_envelope(curve, e).pass);
    const auto def = deficiency_bound_check(e, 3);
    CHECK(def.pass);
    CHECK(def.sum <= def.bound);
  }
}

TEST_CASE("general envelope on a generic planted family over GF(11)") {
  const auto f = FieldCtx::create(11);
  const Plane pl(f);
  std::mt19937_64 rng(7);
  for (int r = 0; r < 5; ++r) {
    const auto pts = distinct_points(f, rng, 2);
    const auto inst = th::planted(f, pts, {1 + rng() % 3, 1 + rng() % 3});
    std::vector<DirectionReport> e;
    for (Direction d : inst.generic) {
      if (d.is_vertical()) continue;
      if (auto rep = classify_direction(pl, inst.points, d, 2)) e.push_back(*rep);
    }
    const auto curve = envelope_general(inst.points, e, 2);
    for (const auto& rep : e) {
      for (const auto& l : rep.renitent) {
        const auto dp = pl.dual_point(l.line);
        REQUIRE(curve.g.eval(dp.x, dp.y, dp.z) == f->zero());
      }
    }
  }
}

TEST_CASE("general envelope hypotheses") {
  const auto f = FieldCtx::create(7);
  const Plane pl(f);
  const auto t = th::ms(f, {{0, 0, 1}});
  const auto all = uniform_directions(pl, t, 1);
  CHECK(code_of([&] { envelope_general(t, all, 1); }) == ErrorCode::TooManyDirections);
  std::vector<DirectionReport> vert = {all.back()};
  CHECK(code_of([&] { envelope_general(t, vert, 1); }) == ErrorCode::VerticalDirectionPresent);
  CHECK(code_of([&] { envelope_general(t, vert, 4); }) == ErrorCode::LambdaOutOfRange);
  const auto two = th::ms(f, {{0, 0, 1}, {1, 3, 1}});
  std::vector<DirectionReport> wide = {*classify_direction(pl, two, Direction::slope(E(0)), 2)};
  CHECK(code_of([&] { envelope_general(two, wide, 1); }) == ErrorCode::HypothesisViolation);
}

TEST_CASE("deficiency bound") {
  const auto f = FieldCtx::create(7);
  const Plane pl(f);
  const auto inst = th::planted(f, {{0, 0}, {1, 1}}, {1, 1});
  const auto sharp = generic_reports(pl, inst, 2);
  const auto d0 = deficiency_bound_check(sharp, 2);
  CHECK(d0.pass);
  CHECK(d0.sum == 0);
  CHECK(d0.bound == 2);

  const auto single = uniform_directions(pl, th::ms(f, {{3, 3, 1}}), 1);
  const auto d1 = deficiency_bound_check(single, 1);
  CHECK(d1.bound == 0);
  CHECK(d1.pass);

  std::vector<DirectionReport> merged_only;
  for (const auto& r : uniform_directions(pl, inst.points, 2)) {
    if (r.lambda_d() < 2) merged_only.push_back(r);
  }
  REQUIRE(!merged_only.empty());
  CHECK(code_of([&] { deficiency_bound_check(merged_only, 2); }) == ErrorCode::NoSharpDirection);
}

TEST_CASE("verification localizes wrong curves") {
  const auto f = FieldCtx::create(7);
  const Plane pl(f);
  const auto inst = th::planted(f, {{1, 2}, {3, 5}}, {1, 1});
  const auto reports = generic_reports(pl, inst, 2);
  EnvelopeCurve wrong{dual_lines(f, {{1, 2}, {4, 4}}, {1, 1}), Provenance::Regular, 2, 2};
  const auto v = verify_envelope(wrong, reports);
  CHECK(!v.pass);
  // (4,4) and (3,5) share their slope-6 line, so only that direction agrees
  for (const auto& d : v.directions) CHECK(d.ok == (d.direction == Direction::slope(E(6))));
  EnvelopeCurve right{dual_lines(f, {{1, 2}, {3, 5}}, {1, 1}), Provenance::Regular, 2, 2};
  CHECK(verify_envelope(right, reports).pass);
}
