#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace renitent;
using th::code_of;
using th::E;

namespace {

Field field_of(std::uint32_t p, unsigned e) { return FieldCtx::create(p, e); }

PointMultiset random_multiset(const Field& f, std::mt19937_64& rng, std::size_t n, std::uint64_t max_mult) {
  std::vector<PointEntry> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back({E(static_cast<std::uint32_t>(rng() % f->q())), E(static_cast<std::uint32_t>(rng() % f->q())),
                 1 + rng() % max_mult});
  }
  return PointMultiset(f, e);
}

}  // namespace

TEST_CASE("multisets merge repeated points") {
  const auto f = field_of(5, 1);
  const auto t = th::ms(f, {{1, 2, 1}, {0, 0, 2}, {1, 2, 3}});
  CHECK(t.distinct() == 2);
  CHECK(t.total() == 6);
  CHECK(t.multiplicity(E(1), E(2)) == 4);
  CHECK(t.multiplicity(E(4), E(4)) == 0);
  CHECK(idx(t.xs()[0]) == 0);
  CHECK(code_of([&] { th::ms(f, {{1, 1, 0}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { th::ms(f, {{7, 1, 1}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("line counts") {
  const auto f = field_of(5, 1);
  const Plane pl(f);
  CHECK(line_count(pl, th::ms(f, {{0, 0, 1}}), pl.y_axis()) == 1);
  const PointMultiset empty(f);
  for (const auto& l : pl.all_lines()) {
    if (l == pl.line_at_infinity()) continue;
    CHECK(line_count(pl, empty, l) == 0);
  }
  CHECK(code_of([&] { line_count(pl, empty, pl.line_at_infinity()); }) == ErrorCode::LineAtInfinity);

  std::mt19937_64 rng(1);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 1}, {2, 3}, {3, 2}}) {
    const auto fl = field_of(p, e);
    const oracle::Field o(p, e);
    const Plane plane(fl);
    for (int t = 0; t < 10; ++t) {
      const auto ms = random_multiset(fl, rng, 12, 4);
      for (const auto& l : plane.all_lines()) {
        if (l == plane.line_at_infinity()) continue;
        std::uint64_t n = 0;
        for (const auto& pt : th::pts(ms)) n += oracle::on(o, {idx(l.a), idx(l.b), idx(l.c)}, pt.a, pt.b, 1) ? pt.m : 0;
        REQUIRE(line_count(plane, ms, l) == n);
      }
    }
  }
}

TEST_CASE("intercept profiles") {
  const auto f = field_of(5, 1);
  const auto t = th::ms(f, {{1, 2, 1}, {0, 2, 1}});
  CHECK(intercept_profile(t, Direction::slope(E(0))) == std::vector<std::uint64_t>{0, 0, 2, 0, 0});
  CHECK(intercept_profile(t, Direction::slope(E(1))) == std::vector<std::uint64_t>{0, 1, 1, 0, 0});

  std::mt19937_64 rng(2);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {2, 4}, {3, 2}, {13, 1}}) {
    const auto fl = field_of(p, e);
    const oracle::Field o(p, e);
    const Plane plane(fl);
    for (int r = 0; r < 5; ++r) {
      const auto ms = random_multiset(fl, rng, 30, 5);
      for (std::uint32_t k = 0; k <= o.q; ++k) {
        const auto d = Direction::from_index(k, o.q);
        const auto prof = intercept_profile(ms, d);
        REQUIRE(prof == oracle::class_counts(o, th::pts(ms), k));
        const auto cls = plane.parallel_class(d);
        for (std::uint32_t i = 0; i < o.q; ++i) REQUIRE(prof[i] == line_count(plane, ms, cls[i]));
      }
    }
  }
}

TEST_CASE("classification of a single point") {
  const auto f = field_of(5, 1);
  const Plane pl(f);
  const auto r = classify_direction(pl, th::ms(f, {{0, 0, 1}}), Direction::slope(E(1)), 1);
  REQUIRE(r);
  CHECK(r->m_d == 0);
  REQUIRE(r->renitent.size() == 1);
  CHECK(r->renitent[0].line == pl.line(E(1), f->neg(E(1)), E(0)));
  CHECK(r->renitent[0].t == 1);
  CHECK(r->renitent[0].count == 1);
  CHECK(r->sharp);

  const auto all = scan_directions(pl, th::ms(f, {{0, 0, 1}}), 1);
  REQUIRE(all.size() == 6);
  for (const auto& rep : all) {
    REQUIRE(rep);
    REQUIRE(rep->renitent.size() == 1);
    CHECK(pl.incident(pl.affine(E(0), E(0)), rep->renitent[0].line));
  }
}

TEST_CASE("classification of the empty set and the full plane") {
  const auto f = field_of(5, 1);
  const Plane pl(f);
  const PointMultiset empty(f);
  for (const auto& r : scan_directions(pl, empty, 2)) {
    REQUIRE(r);
    CHECK(r->m_d == 0);
    CHECK(r->lambda_d() == 0);
    CHECK(!r->sharp);
  }
  std::vector<PointEntry> full;
  for (Elem a : f->elements()) {
    for (Elem b : f->elements()) full.push_back({a, b, 1});
  }
  for (const auto& r : scan_directions(pl, PointMultiset(f, full), 1)) {
    REQUIRE(r);
    CHECK(r->m_d == 0);
    CHECK(r->renitent.empty());
  }
}

TEST_CASE("three points over GF(5) at slope 0") {
  // heights 0, 1, 4: three lines meet T once and two miss it
  const auto f = field_of(5, 1);
  const Plane pl(f);
  const auto t = th::ms(f, {{0, 0, 1}, {1, 1, 1}, {2, 4, 1}});
  const auto r = classify_direction(pl, t, Direction::slope(E(0)), 2);
  REQUIRE(r);
  CHECK(r->m_d == 1);
  REQUIRE(r->renitent.size() == 2);
  CHECK(r->renitent[0].alpha == E(2));
  CHECK(r->renitent[1].alpha == E(3));
  CHECK(r->renitent[0].t == 0);
  CHECK(!classify_direction(pl, t, Direction::slope(E(0)), 1));
}

TEST_CASE("lambda range") {
  const auto f = field_of(7, 1);
  const Plane pl(f);
  CHECK(max_classify_lambda(7) == 3);
  CHECK(code_of([&] { scan_directions(pl, PointMultiset(f), 0); }) == ErrorCode::LambdaOutOfRange);
  CHECK(code_of([&] { scan_directions(pl, PointMultiset(f), 4); }) == ErrorCode::LambdaOutOfRange);
}

TEST_CASE("classification agrees with the brute-force oracle") {
  std::mt19937_64 rng(3);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}}) {
    const auto fl = field_of(p, e);
    const oracle::Field o(p, e);
    const Plane pl(fl);
    for (int r = 0; r < 40; ++r) {
      // few points so that uniform directions actually occur
      const auto ms = random_multiset(fl, rng, 1 + rng() % 4, p);
      for (unsigned lambda = 1; lambda <= max_classify_lambda(o.q); ++lambda) {
        const auto scan = scan_directions(pl, ms, lambda);
        for (std::uint32_t k = 0; k <= o.q; ++k) {
          const auto want = oracle::classify(o, oracle::class_counts(o, th::pts(ms), k), lambda);
          REQUIRE(scan[k].has_value() == want.has_value());
          if (!want) continue;
          CHECK(scan[k]->m_d == want->m);
          REQUIRE(scan[k]->renitent.size() == want->renitent.size());
          CHECK(scan[k]->sharp == (want->renitent.size() == lambda));
          for (std::size_t i = 0; i < want->renitent.size(); ++i) {
            const auto& l = scan[k]->renitent[i];
            CHECK(idx(l.alpha) == want->renitent[i]);
            CHECK(l.t == l.count % p);
            CHECK(l.line == pl.class_line(Direction::from_index(k, o.q), l.alpha));
          }
        }
      }
    }
  }
}

TEST_CASE("norm conic tangents are the renitent lines") {
  for (unsigned e : {2u, 3u}) {
    const auto f = field_of(2, e);
    const Plane pl(f);
    const auto conic = gen_norm_conic(f);
    std::set<ProjLine> tangents;
    for (const auto& l : pl.all_lines()) {
      if (l == pl.line_at_infinity()) continue;
      std::uint64_t n = 0;
      for (const auto& en : conic.points.entries()) n += pl.incident(pl.affine(en.a, en.b), l);
      if (n == 1) tangents.insert(l);
    }
    const auto reports = uniform_directions(pl, conic.points, 1);
    CHECK(reports.size() == f->q() + 1);
    const auto lines = renitent_lines(reports);
    CHECK(std::set<ProjLine>(lines.begin(), lines.end()) == tangents);
    CHECK(concurrency_point(pl, lines) == conic.nucleus);
  }
}

TEST_CASE("concurrency") {
  const auto f = field_of(5, 1);
  const Plane pl(f);
  const std::vector<ProjLine> triangle = {pl.x_axis(), pl.y_axis(), pl.line(E(1), E(1), E(4))};
  CHECK(!concurrency_point(pl, triangle));

  const auto reports = uniform_directions(pl, th::ms(f, {{2, 3, 1}}), 1);
  CHECK(concurrency_point(pl, renitent_lines(reports)) == pl.affine(E(2), E(3)));

  const std::vector<ProjLine> same = {pl.x_axis(), pl.x_axis()};
  CHECK(code_of([&] { concurrency_point(pl, same); }) == ErrorCode::FewerThanTwoLines);
}
