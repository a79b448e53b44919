#include "renitent/generators.hpp"

#include <algorithm>
#include <set>

namespace renitent {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PlantedInstance gen_planted(const Field& field, std::span<const std::pair<Elem, Elem>> points,
                            std::span<const std::uint64_t> weights) {
  const auto& f = *field;
  if (points.size() != weights.size()) fail(ErrorCode::InvalidArgument, "one weight per point is required");
  if (points.size() >= f.p()) {
    fail(ErrorCode::LambdaGEp, std::to_string(points.size()) + " points, p = " + std::to_string(f.p()));
  }
  std::set<std::pair<Elem, Elem>> seen;
  std::vector<PointEntry> entries;
  TriHomPoly oracle(field, 0);
  oracle.set(0, 0, 0, f.one());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [a, b] = points[i];
    if (!seen.insert(points[i]).second) fail(ErrorCode::DuplicatePoints, "planted points must be distinct");
    if (weights[i] == 0) fail(ErrorCode::InvalidArgument, "weights must be positive");
    entries.push_back({a, b, weights[i]});
    oracle = oracle * TriHomPoly::linear(field, f.one(), a, f.neg(b)).pow(static_cast<unsigned>(weights[i]));
  }

  std::vector<Direction> generic;
  for (std::uint32_t k = 0; k <= f.q(); ++k) {
    const Direction d = Direction::from_index(k, f.q());
    std::set<std::uint32_t> keys;
    bool ok = true;
    for (const auto& [a, b] : points) {
      const Elem key = d.is_vertical() ? a : f.sub(b, f.mul(a, d.slope_value()));
      ok = ok && keys.insert(idx(key)).second;
    }
    if (ok) generic.push_back(d);
  }
  return {PointMultiset(field, entries), std::move(oracle), std::move(generic)};
}

std::vector<std::pair<Elem, Elem>> random_points(const Field& field, std::size_t n, std::uint64_t seed) {
  const std::uint64_t q = field->q();
  if (n > q * q) fail(ErrorCode::InvalidArgument, "more points requested than the plane has");
  SplitMix64 rng(seed);
  std::set<std::pair<Elem, Elem>> seen;
  std::vector<std::pair<Elem, Elem>> out;
  while (out.size() < n) {
    const Elem a{static_cast<std::uint32_t>(rng.next() % q)};
    const Elem b{static_cast<std::uint32_t>(rng.next() % q)};
    if (seen.insert({a, b}).second) out.emplace_back(a, b);
  }
  return out;
}

NormConic gen_norm_conic(const Field& field) {
  const auto& f = *field;
  if (f.p() != 2) fail(ErrorCode::NotEvenCharacteristic, "the norm conic needs q even");
  if (f.e() < 2) fail(ErrorCode::InvalidArgument, "the norm conic needs q >= 4");
  Elem delta = f.zero();
  for (Elem x : f.elements()) {
    if (f.trace(x) == f.one()) {
      delta = x;
      break;
    }
  }
  std::vector<PointEntry> entries;
  for (Elem x : f.elements()) {
    for (Elem y : f.elements()) {
      const Elem v = f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(delta, f.mul(y, y)));
      if (v == f.one()) entries.push_back({x, y, 1});
    }
  }
  return {PointMultiset(field, entries), ProjPoint{f.zero(), f.zero(), f.one()}, delta};
}

PointMultiset gen_random(const Field& field, std::uint64_t seed, double density) {
  if (!(density > 0.0 && density <= 1.0)) fail(ErrorCode::InvalidArgument, "density must lie in (0, 1]");
  SplitMix64 rng(seed);
  std::vector<PointEntry> entries;
  for (Elem a : field->elements()) {
    for (Elem b : field->elements()) {
      if (rng.uniform() < density) entries.push_back({a, b, 1});
    }
  }
  return PointMultiset(field, entries);
}

PointMultiset gen_union_lines(const Plane& plane, std::span<const ProjLine> lines) {
  const auto& f = *plane.field();
  std::vector<PointEntry> entries;
  for (const auto& l : lines) {
    if (idx(l.a) == 0 && idx(l.b) == 0) fail(ErrorCode::LineAtInfinity, "the line at infinity has no affine points");
    for (Elem a : f.elements()) {
      for (Elem b : f.elements()) {
        if (plane.incident(plane.affine(a, b), l)) entries.push_back({a, b, 1});
      }
    }
  }
  return PointMultiset(plane.field(), entries);
}

}  // namespace renitent
