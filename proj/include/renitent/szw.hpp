#pragma once

// Gcd-degree profiles of specialized bivariate polynomials and the renitent
// line counts built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "renitent/poly.hpp"
#include "renitent/uniformity.hpp"

namespace renitent {

/// f and g in X (first variable) and Y (second); k[y] = deg gcd(f(X,y), g(X,y)).
struct GcdProfile {
  BiPoly f;
  BiPoly g;
  std::vector<int> k;
};

/// Throws BadLeadingCoefficient unless the leading X-coefficient of f is a
/// nonzero constant. When g(X,y) vanishes, k[y] = deg f(X,y).
GcdProfile gcd_profile(const BiPoly& f, const BiPoly& g);

struct SzwCheck {
  bool pass;
  std::int64_t lhs;
  std::int64_t rhs;
  Elem y0;
};

/// sum_y (k_y - k_y0)^+ <= (deg f - k_y0)(deg g - k_y0), total degrees.
SzwCheck szw_inequality_check(const GcdProfile& profile, Elem y0);

struct FgPair {
  BiPoly f;
  BiPoly g;
  UniPoly h;
};

/// f = X^q - X, g = sum mult (X + aY - b)^{q-1} - |T| + h(Y) with
/// h(Y) = sum m_d (1 - (Y - d)^{q-1}). Throws TooManyDirections,
/// VerticalDirectionPresent.
FgPair build_fg_thm42(const PointMultiset& t, std::span<const DirectionReport> e);

struct LowerBoundCheck {
  bool pass;
  unsigned lambda;
  std::size_t directions;
  std::uint64_t count;       // sum of lambda_d over the directions
  std::int64_t bound;        // lambda (|E| + 1 - lambda)
  std::uint64_t gcd_count;   // sum of q - k_d
  bool counts_agree;         // q - k_d = lambda_d for every direction
  std::uint64_t deficiency;  // sum of lambda - lambda_d
  SzwCheck szw;              // at a sharp direction
};

/// Throws NoSharpDirection, TooManyDirections, VerticalDirectionPresent.
LowerBoundCheck renitent_lower_bound_check(const PointMultiset& t, std::span<const DirectionReport> e);

struct IndexReport {
  ProjPoint point;
  unsigned index;
  std::vector<ProjLine> lines;
};

/// Renitent lines of the reports through r.
IndexReport index_of_point(const Plane& plane, std::span<const DirectionReport> f, const ProjPoint& r);

struct DichotomyCheck {
  bool pass;
  unsigned lambda;
  std::size_t directions;
  unsigned low;   // lambda
  unsigned high;  // |F| + 1 - lambda
  std::uint64_t points_checked;
  /// Point with the largest index strictly between low and high.
  std::optional<IndexReport> worst;
  /// Points meeting at least `high` renitent lines.
  std::vector<IndexReport> high_points;
};

/// Every point of PG(2,q) meets at most lambda or at least |F|+1-lambda
/// renitent lines, F the set of all uniform directions. Throws
/// HypothesisNotMet when q <= 2 or |F| <= lambda^2 + lambda.
DichotomyCheck dichotomy_check(const Plane& plane, const PointMultiset& t, unsigned lambda);

struct FgFrame {
  BiPoly f;
  BiPoly g;
  UniPoly h;
  Collineation map;
  /// Images (0:c_k:1) of the directions, in report order.
  std::vector<Elem> c;
  /// T(R) = (1:y0:0).
  Elem y0;
};

/// Builds the frame polynomials after moving the line at infinity onto the
/// Y-axis and R onto (1:y0:0). Throws TooManyDirections, PointAtInfinity.
FgFrame build_fg_thm43(const Plane& plane, const PointMultiset& t, std::span<const DirectionReport> e,
                          const ProjPoint& r);

struct FrameCheck {
  bool pass;
  /// k_y = |E| - ind(preimage of (1:y:0)) for every y.
  bool k_identity;
  std::vector<int> k;
  std::vector<unsigned> index;
  SzwCheck szw;
};

FrameCheck frame_check(const Plane& plane, const PointMultiset& t, std::span<const DirectionReport> e,
                             const ProjPoint& r);

}  // namespace renitent
