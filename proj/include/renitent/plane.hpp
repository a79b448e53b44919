#pragma once

// Incidence geometry of PG(2,q). Affine points are (a:b:1), the line at
// infinity is [0:0:1], the X-axis [0:1:0] and the Y-axis [1:0:0]. The
// direction of slope d is (1:d:0); the vertical direction is (0:1:0).

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renitent/gf.hpp"

namespace renitent {

/// Homogeneous triple, canonical: the last nonzero coordinate is 1.
struct ProjPoint {
  Elem x, y, z;
  auto operator<=>(const ProjPoint&) const = default;
  bool is_affine() const noexcept { return idx(z) == 1; }
};

/// Homogeneous line coordinates [a:b:c], same canonical form as points.
struct ProjLine {
  Elem a, b, c;
  auto operator<=>(const ProjLine&) const = default;
};

/// A point of the line at infinity, addressed by slope or as the vertical
/// direction. Index order: slopes 0..q-1, then vertical at index q.
class Direction {
 public:
  static Direction slope(Elem d) noexcept { return Direction(false, d); }
  static Direction vertical() noexcept { return Direction(true, Elem{0}); }
  /// Index 0..q-1 gives a slope, index q the vertical direction.
  static Direction from_index(std::uint32_t index, std::uint32_t q) noexcept {
    return index >= q ? vertical() : slope(Elem{index});
  }

  bool is_vertical() const noexcept { return vertical_; }
  /// Slope value; meaningless for the vertical direction.
  Elem slope_value() const noexcept { return slope_; }
  std::uint32_t index(std::uint32_t q) const noexcept { return vertical_ ? q : idx(slope_); }

  auto operator<=>(const Direction&) const = default;

 private:
  Direction(bool vertical, Elem slope) : vertical_(vertical), slope_(slope) {}
  bool vertical_;
  Elem slope_;
};

using Matrix3 = std::array<std::array<Elem, 3>, 3>;

class Plane;

/// Invertible 3x3 matrix acting on points by M*P and on lines by M^{-T}*l.
class Collineation {
 public:
  /// Throws SingularMatrix.
  Collineation(Field field, const Matrix3& m);

  const Matrix3& matrix() const noexcept { return m_; }
  const Matrix3& inverse_transpose() const noexcept { return inv_t_; }
  ProjPoint apply(const ProjPoint& p) const;
  ProjLine apply(const ProjLine& l) const;
  Collineation inverse() const;
  /// (*this) after (first): P -> this(first(P)).
  Collineation after(const Collineation& first) const;

 private:
  Field field_;
  Matrix3 m_;
  Matrix3 inv_t_;
};

class Plane {
 public:
  explicit Plane(Field field);

  const Field& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_->q(); }

  /// Canonicalizing constructors; throw InvalidArgument for (0:0:0).
  ProjPoint point(Elem x, Elem y, Elem z) const;
  ProjLine line(Elem a, Elem b, Elem c) const;
  ProjPoint affine(Elem a, Elem b) const { return point(a, b, field_->one()); }
  ProjPoint direction_point(Direction d) const;
  /// Throws NotADirection for points off the line at infinity.
  Direction direction_of(const ProjPoint& p) const;

  ProjLine line_at_infinity() const { return {Elem{0}, Elem{0}, Elem{1}}; }
  ProjLine y_axis() const { return {Elem{1}, Elem{0}, Elem{0}}; }
  ProjLine x_axis() const { return {Elem{0}, Elem{1}, Elem{0}}; }

  bool incident(const ProjPoint& p, const ProjLine& l) const noexcept;
  /// Throws EqualPoints.
  ProjLine line_through(const ProjPoint& p, const ProjPoint& r) const;
  /// Throws EqualPoints (for equal lines).
  ProjPoint meet(const ProjLine& l, const ProjLine& m) const;

  /// The affine line with the given direction and intercept: [d:-1:t] for a
  /// slope d (meets the Y-axis at (0:t:1)), [1:0:-t] (X = t) for vertical.
  ProjLine class_line(Direction d, Elem intercept) const;
  /// The q affine lines through the direction, in intercept order.
  std::vector<ProjLine> parallel_class(Direction d) const;
  /// Direction of an affine line (its point at infinity). Throws
  /// LineAtInfinity for [0:0:1].
  Direction direction_of_line(const ProjLine& l) const;
  /// Intercept of an affine line within its parallel class.
  Elem intercept_of_line(const ProjLine& l) const;

  /// All q^2+q+1 points: affine points (a,b) row-major by a, then the q+1
  /// directions in index order.
  std::vector<ProjPoint> all_points() const;
  std::vector<ProjLine> all_lines() const;

  /// Renitent line [d:-1:alpha] corresponds to the dual point (alpha:d:1);
  /// in general [a:b:c] -> (c:a:-b).
  ProjPoint dual_point(const ProjLine& l) const;

  Collineation collineation(const Matrix3& m) const { return Collineation(field_, m); }
  Collineation identity() const;

 private:
  Field field_;
};

/// Finds a collineation mapping the line at infinity onto the Y-axis, the
/// affine point R to a point (1:y0:0), and no direction of `avoid` to
/// (0:1:0). Deterministic search over a coordinate permutation, a shear and
/// the translation moving R to the origin. Throws PointAtInfinity when R is
/// not affine and TooManyDirections when |avoid| > q.
Collineation pick_collineation_for_thm43(const Plane& plane, std::span<const Direction> avoid,
                                         const ProjPoint& r);

std::string format_point(const FieldCtx& field, const ProjPoint& p);
std::string format_line(const ProjLine& l);
std::string format_direction(Direction d);

}  // namespace renitent
