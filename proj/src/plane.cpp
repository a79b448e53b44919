#include "renitent/plane.hpp"

#include <algorithm>

namespace renitent {
namespace {

std::array<Elem, 3> canonical(const FieldCtx& f, Elem x, Elem y, Elem z) {
  Elem pivot = idx(z) != 0 ? z : idx(y) != 0 ? y : x;
  if (idx(pivot) == 0) fail(ErrorCode::InvalidArgument, "homogeneous triple (0:0:0)");
  const Elem s = f.inv(pivot);
  return {f.mul(x, s), f.mul(y, s), f.mul(z, s)};
}

std::array<Elem, 3> cross(const FieldCtx& f, const std::array<Elem, 3>& u, const std::array<Elem, 3>& v) {
  return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])), f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
          f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

bool all_zero(const std::array<Elem, 3>& v) { return idx(v[0]) == 0 && idx(v[1]) == 0 && idx(v[2]) == 0; }

std::array<Elem, 3> apply_matrix(const FieldCtx& f, const Matrix3& m, const std::array<Elem, 3>& v) {
  std::array<Elem, 3> out{};
  for (int r = 0; r < 3; ++r) {
    Elem acc = f.zero();
    for (int c = 0; c < 3; ++c) acc = f.add(acc, f.mul(m[r][c], v[c]));
    out[r] = acc;
  }
  return out;
}

Matrix3 multiply(const FieldCtx& f, const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      Elem acc = f.zero();
      for (int k = 0; k < 3; ++k) acc = f.add(acc, f.mul(a[r][k], b[k][c]));
      out[r][c] = acc;
    }
  }
  return out;
}

Elem det3(const FieldCtx& f, const Matrix3& m) {
  auto minor = [&](int r1, int c1, int r2, int c2) {
    return f.sub(f.mul(m[r1][c1], m[r2][c2]), f.mul(m[r1][c2], m[r2][c1]));
  };
  Elem d = f.mul(m[0][0], minor(1, 1, 2, 2));
  d = f.sub(d, f.mul(m[0][1], minor(1, 0, 2, 2)));
  return f.add(d, f.mul(m[0][2], minor(1, 0, 2, 1)));
}

}  // namespace

// ---------------------------------------------------------------- Collineation

Collineation::Collineation(Field field, const Matrix3& m) : field_(std::move(field)), m_(m) {
  const auto& f = *field_;
  const Elem det = det3(f, m_);
  if (idx(det) == 0) fail(ErrorCode::SingularMatrix, "collineation matrix is singular");
  const Elem det_inv = f.inv(det);
  // inverse = adj / det; inverse-transpose = cofactor matrix / det.
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      const Elem cof = f.sub(f.mul(m_[r1][c1], m_[r2][c2]), f.mul(m_[r1][c2], m_[r2][c1]));
      inv_t_[r][c] = f.mul(cof, det_inv);
    }
  }
}

ProjPoint Collineation::apply(const ProjPoint& p) const {
  const auto v = apply_matrix(*field_, m_, {p.x, p.y, p.z});
  const auto c = canonical(*field_, v[0], v[1], v[2]);
  return {c[0], c[1], c[2]};
}

ProjLine Collineation::apply(const ProjLine& l) const {
  const auto v = apply_matrix(*field_, inv_t_, {l.a, l.b, l.c});
  const auto c = canonical(*field_, v[0], v[1], v[2]);
  return {c[0], c[1], c[2]};
}

Collineation Collineation::inverse() const {
  Matrix3 inv{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) inv[r][c] = inv_t_[c][r];
  }
  return Collineation(field_, inv);
}

Collineation Collineation::after(const Collineation& first) const {
  require_same_field(field_, first.field_);
  return Collineation(field_, multiply(*field_, m_, first.m_));
}

// ---------------------------------------------------------------- Plane

Plane::Plane(Field field) : field_(std::move(field)) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
}

ProjPoint Plane::point(Elem x, Elem y, Elem z) const {
  for (Elem v : {x, y, z}) {
    if (!field_->contains(v)) fail(ErrorCode::InvalidArgument, "coordinate out of range");
  }
  const auto c = canonical(*field_, x, y, z);
  return {c[0], c[1], c[2]};
}

ProjLine Plane::line(Elem a, Elem b, Elem c) const {
  const auto p = point(a, b, c);
  return {p.x, p.y, p.z};
}

ProjPoint Plane::direction_point(Direction d) const {
  if (d.is_vertical()) return {Elem{0}, Elem{1}, Elem{0}};
  return point(field_->one(), d.slope_value(), field_->zero());
}

Direction Plane::direction_of(const ProjPoint& p) const {
  if (idx(p.z) != 0) fail(ErrorCode::NotADirection, "point is not on the line at infinity");
  if (idx(p.x) == 0) return Direction::vertical();
  return Direction::slope(field_->div(p.y, p.x));
}

bool Plane::incident(const ProjPoint& p, const ProjLine& l) const noexcept {
  const auto& f = *field_;
  return idx(f.add(f.add(f.mul(l.a, p.x), f.mul(l.b, p.y)), f.mul(l.c, p.z))) == 0;
}

ProjLine Plane::line_through(const ProjPoint& p, const ProjPoint& r) const {
  const auto v = cross(*field_, {p.x, p.y, p.z}, {r.x, r.y, r.z});
  if (all_zero(v)) fail(ErrorCode::EqualPoints, "a line needs two distinct points");
  return line(v[0], v[1], v[2]);
}

ProjPoint Plane::meet(const ProjLine& l, const ProjLine& m) const {
  const auto v = cross(*field_, {l.a, l.b, l.c}, {m.a, m.b, m.c});
  if (all_zero(v)) fail(ErrorCode::EqualPoints, "equal lines have no single meeting point");
  return point(v[0], v[1], v[2]);
}

ProjLine Plane::class_line(Direction d, Elem intercept) const {
  const auto& f = *field_;
  if (d.is_vertical()) return line(f.one(), f.zero(), f.neg(intercept));
  return line(d.slope_value(), f.neg(f.one()), intercept);
}

std::vector<ProjLine> Plane::parallel_class(Direction d) const {
  std::vector<ProjLine> out;
  out.reserve(q());
  for (std::uint32_t t = 0; t < q(); ++t) out.push_back(class_line(d, Elem{t}));
  return out;
}

Direction Plane::direction_of_line(const ProjLine& l) const {
  if (idx(l.a) == 0 && idx(l.b) == 0) fail(ErrorCode::LineAtInfinity, "the line at infinity has no direction");
  // Meets [0:0:1] in (b : -a : 0).
  if (idx(l.b) == 0) return Direction::vertical();
  return Direction::slope(field_->div(field_->neg(l.a), l.b));
}

Elem Plane::intercept_of_line(const ProjLine& l) const {
  const auto& f = *field_;
  if (idx(l.a) == 0 && idx(l.b) == 0) fail(ErrorCode::LineAtInfinity, "the line at infinity has no intercept");
  if (idx(l.b) != 0) return f.neg(f.div(l.c, l.b));
  return f.neg(f.div(l.c, l.a));
}

std::vector<ProjPoint> Plane::all_points() const {
  std::vector<ProjPoint> out;
  out.reserve(std::size_t{q()} * q() + q() + 1);
  for (std::uint32_t a = 0; a < q(); ++a) {
    for (std::uint32_t b = 0; b < q(); ++b) out.push_back({Elem{a}, Elem{b}, Elem{1}});
  }
  for (std::uint32_t d = 0; d <= q(); ++d) out.push_back(direction_point(Direction::from_index(d, q())));
  return out;
}

std::vector<ProjLine> Plane::all_lines() const {
  std::vector<ProjLine> out;
  for (const auto& p : all_points()) out.push_back({p.x, p.y, p.z});
  return out;
}

ProjPoint Plane::dual_point(const ProjLine& l) const { return point(l.c, l.a, field_->neg(l.b)); }

Collineation Plane::identity() const {
  const Elem o = field_->one(), z = field_->zero();
  return Collineation(field_, Matrix3{{{o, z, z}, {z, o, z}, {z, z, o}}});
}

Collineation pick_collineation_for_thm43(const Plane& plane, std::span<const Direction> avoid, const ProjPoint& r) {
  const auto& f = *plane.field();
  if (!r.is_affine()) fail(ErrorCode::PointAtInfinity, "R must be an affine point");
  if (avoid.size() > plane.q()) {
    fail(ErrorCode::TooManyDirections, "at most q directions can avoid (0:1:0)");
  }
  const Elem o = f.one(), z = f.zero();
  const Matrix3 translate{{{o, z, f.neg(r.x)}, {z, o, f.neg(r.y)}, {z, z, o}}};
  const Matrix3 swap_xz{{{z, z, o}, {z, o, z}, {o, z, z}}};
  const std::array<Matrix3, 2> perms{Matrix3{{{o, z, z}, {z, o, z}, {z, z, o}}},
                                     Matrix3{{{z, o, z}, {o, z, z}, {z, z, o}}}};
  const ProjPoint vertical = plane.direction_point(Direction::vertical());
  for (const auto& perm : perms) {
    for (std::uint32_t k = 0; k < f.q(); ++k) {
      const Matrix3 shear{{{o, Elem{k}, z}, {z, o, z}, {z, z, o}}};
      const Matrix3 m = multiply(f, swap_xz, multiply(f, shear, multiply(f, perm, translate)));
      const Collineation t(plane.field(), m);
      if (t.apply(plane.line_at_infinity()) != plane.y_axis()) continue;
      const ProjPoint image_r = t.apply(r);
      if (idx(image_r.z) != 0 || idx(image_r.x) == 0) continue;
      const bool clear = std::none_of(avoid.begin(), avoid.end(), [&](Direction d) {
        return t.apply(plane.direction_point(d)) == vertical;
      });
      if (clear) return t;
    }
  }
  fail(ErrorCode::CollineationFailure, "no permutation-shear collineation satisfies the constraints");
}

std::string format_point(const FieldCtx& field, const ProjPoint& p) {
  if (p.is_affine()) return std::to_string(idx(p.x)) + "," + std::to_string(idx(p.y));
  if (idx(p.x) == 0) return "inf:vert";
  return "inf:" + std::to_string(idx(field.div(p.y, p.x)));
}

std::string format_line(const ProjLine& l) {
  return "[" + std::to_string(idx(l.a)) + ":" + std::to_string(idx(l.b)) + ":" + std::to_string(idx(l.c)) + "]";
}

std::string format_direction(Direction d) {
  if (d.is_vertical()) return "inf:vert";
  return "inf:" + std::to_string(idx(d.slope_value()));
}

}  // namespace renitent
