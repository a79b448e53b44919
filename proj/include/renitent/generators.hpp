#pragma once

// Deterministic test instances with known ground truth.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "renitent/poly.hpp"
#include "renitent/uniformity.hpp"

namespace renitent {

/// splitmix64. Every generator draws from this and nothing else.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// (next() >> 11) * 2^-53, in [0, 1).
  double uniform() noexcept;

 private:
  std::uint64_t state_;
};

struct PlantedInstance {
  PointMultiset points;
  /// prod (U + a_i V - b_i W)^{w_i}
  TriHomPoly oracle;
  /// Directions (index order, vertical last) on which no two planted
  /// points share a line.
  std::vector<Direction> generic;
};

/// Throws LambdaGEp when there are p or more points, DuplicatePoints,
/// InvalidArgument for length mismatch or zero weights.
PlantedInstance gen_planted(const Field& field, std::span<const std::pair<Elem, Elem>> points,
                            std::span<const std::uint64_t> weights);

/// n distinct affine points drawn with the generator: a = next() % q,
/// b = next() % q, repeats skipped.
std::vector<std::pair<Elem, Elem>> random_points(const Field& field, std::size_t n, std::uint64_t seed);

struct NormConic {
  PointMultiset points;
  ProjPoint nucleus;
  Elem delta;
};

/// {(x,y) : x^2 + xy + delta y^2 = 1}, delta the smallest-index element of
/// trace 1. Its nucleus is the origin. Throws NotEvenCharacteristic for odd
/// q and InvalidArgument for q = 2.
NormConic gen_norm_conic(const Field& field);

/// Each affine point, visited row-major by (a, b), is kept when
/// uniform() < density. Throws InvalidArgument unless 0 < density <= 1.
PointMultiset gen_random(const Field& field, std::uint64_t seed, double density);

/// Multiset sum of the affine points of the lines. Throws LineAtInfinity.
PointMultiset gen_union_lines(const Plane& plane, std::span<const ProjLine> lines);

}  // namespace renitent
