#pragma once

// Dual algebraic envelopes containing renitent lines. A renitent line
// [d:-1:alpha] corresponds to the dual point (alpha:d:1) and a vertical line
// [1:0:-t] to (-t:1:0).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "renitent/poly.hpp"
#include "renitent/uniformity.hpp"

namespace renitent {

enum class Provenance { Regular, Weighted, General };

std::string_view to_string(Provenance p) noexcept;

struct EnvelopeCurve {
  TriHomPoly g;
  Provenance provenance;
  /// Class claimed by the construction (degree of g).
  unsigned nominal_class;
  /// Total degree of the affine part actually built.
  int actual_degree;
  /// Classification bound the curve was built for (General only).
  unsigned lambda = 0;

  /// g restricted to the pencil of d: g(U, d, 1) for a slope, and
  /// g(-T, 1, 0) as a polynomial in T for the vertical direction.
  UniPoly restrict_to(Direction d) const;
};

/// (direction index, intercept index) -> expected multiplicity.
using MultiplicityMap = std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>;

/// pi_k(V) = sum over T of mult * (b - aV)^k for k = 0..k_max. Throws
/// KMaxTooLarge when k_max > q-2.
std::vector<UniPoly> power_sum_polys(const PointMultiset& t, unsigned k_max);

/// Elementary symmetric polynomials M_1..M_lambda (entry j-1 holds M_j) from
/// the power sums pi_k / c by the Newton recursion. Throws LambdaTooLarge
/// when lambda > min(q-2, p-1), CZero, InsufficientPowerSums.
std::vector<UniPoly> newton_sigma(std::span<const UniPoly> pi, unsigned lambda, std::uint32_t c);

/// U^n - M_1 U^{n-1} + ... + (-1)^n M_n, homogenized to degree n.
TriHomPoly monic_envelope(const Field& field, std::span<const UniPoly> sigma);

/// Class-lambda envelope from directions with equal renitent counts t_d and
/// constant t_d - m_d. The vertical direction is accepted only when all
/// q+1 directions are given; it is then left out of the construction and
/// only verified. Throws HypothesisViolation, VerticalDirectionPresent,
/// InconsistentLambda.
EnvelopeCurve envelope_regular(const PointMultiset& t, std::span<const DirectionReport> e);

struct WeightEntry {
  Direction direction;
  std::vector<std::uint32_t> weights; // lambda_{d,i}(c) per renitent line
  std::uint64_t Lambda = 0;           // natural-number sum
};

/// weights[i] in 1..p-1 with c * weights[i] = t_i - m (mod p). Throws CZero,
/// ZeroDifference.
std::vector<std::uint32_t> lambda_weights(std::uint32_t p, std::uint32_t m, std::span<const std::uint32_t> ts,
                                          std::uint32_t c);
WeightEntry lambda_weights(const DirectionReport& report, std::uint32_t p, std::uint32_t c);

struct WeightedEnvelope {
  EnvelopeCurve curve;
  std::uint64_t Lambda;
  std::vector<WeightEntry> weights;
  MultiplicityMap multiplicities;
  /// Direction left out of the construction when all q+1 were given.
  std::optional<Direction> excluded;
};

/// Class-Lambda(c) envelope with multiplicities. Throws CZero,
/// TotalSizeDivisibleByP, LambdaCapExceeded, InconsistentLambda,
/// VerticalDirectionPresent.
WeightedEnvelope envelope_weighted(const PointMultiset& t, std::span<const DirectionReport> f, std::uint32_t c);

/// Lemma identity P_{l+j} = P_{l+j-1} s_1 - ... + (-1)^{l+1} P_j s_l with
/// P_k = sum c_i x_i^k. Returns whether it holds.
bool weighted_power_recursion_check(const Field& field, std::span<const Elem> cs, std::span<const Elem> xs,
                                    unsigned j);

/// Entry (r, c) = pi_{lambda-1+r-c}. Throws InsufficientPowerSums.
PolyMatrix hankel_matrix(std::span<const UniPoly> pi, unsigned lambda);

/// (-1)^{l(l-1)/2} c_1...c_l prod_{i<j} (x_i - x_j)^2
Elem hankel_det_closed_form(const FieldCtx& field, std::span<const Elem> cs, std::span<const Elem> xs);

/// Class-lambda^2 envelope for arbitrary uniform directions. Throws
/// LambdaOutOfRange, TooManyDirections, VerticalDirectionPresent,
/// HypothesisViolation, DegenerateCurve.
EnvelopeCurve envelope_general(const PointMultiset& t, std::span<const DirectionReport> e, unsigned lambda);

struct DeficiencyCheck {
  bool pass;
  std::uint64_t sum;
  std::uint64_t bound;
  std::vector<std::pair<Direction, unsigned>> certificate;
};

/// sum (lambda - lambda_d) <= lambda^2 - lambda. Throws NoSharpDirection.
DeficiencyCheck deficiency_bound_check(std::span<const DirectionReport> e, unsigned lambda);

struct DirectionVerification {
  Direction direction;
  bool pencil_contained = false;
  bool expected_pencil = false;
  /// Every renitent intercept is a root with the expected multiplicity.
  bool roots_ok = false;
  /// The restriction equals its leading coefficient times the product of
  /// (U - alpha)^w over the renitent lines.
  bool factors_exactly = false;
  std::vector<RootMultiplicity> roots;
  bool ok = false;
};

struct VerificationReport {
  bool pass = true;
  std::vector<DirectionVerification> directions;
};

/// Checks the curve against every report. Multiplicities are exact when a
/// map is given and at least 1 otherwise. A General curve is expected to
/// contain the pencil of each non-sharp direction.
VerificationReport verify_envelope(const EnvelopeCurve& curve, std::span<const DirectionReport> reports,
                                   const MultiplicityMap* mult = nullptr);

}  // namespace renitent
