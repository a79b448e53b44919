#include "renitent/szw.hpp"

#include <algorithm>

namespace renitent {
namespace {

Elem reduce(const FieldCtx& f, std::uint64_t n) { return f.from_int(static_cast<std::int64_t>(n % f.p())); }

// 1 - (Z - z)^{q-1}: the indicator of z.
UniPoly indicator(const Field& field, Elem z) {
  const auto& f = *field;
  return UniPoly::constant(field, f.one()) - UniPoly::linear(field, f.neg(z), f.one()).pow(f.q() - 1);
}

// sum over T of mult * (X + aY - b)^{q-1}
BiPoly line_indicator_sum(const Field& field, std::span<const Elem> xs, std::span<const Elem> ys,
                          std::span<const std::uint64_t> mults) {
  const auto& f = *field;
  BiPoly acc(field);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Elem m = reduce(f, mults[i]);
    if (idx(m) == 0) continue;
    BiPoly lin = BiPoly::monomial(field, f.one(), 1, 0) + BiPoly::monomial(field, xs[i], 0, 1) +
                 BiPoly::monomial(field, f.neg(ys[i]), 0, 0);
    acc += lin.pow(f.q() - 1).scale(m);
  }
  return acc;
}

void require_slopes(std::span<const DirectionReport> e, std::uint32_t q) {
  if (e.size() > q) fail(ErrorCode::TooManyDirections, "at most q directions are allowed");
  for (const auto& r : e) {
    if (r.direction.is_vertical()) {
      fail(ErrorCode::VerticalDirectionPresent, "directions must be given by slopes");
    }
  }
}

}  // namespace

GcdProfile gcd_profile(const BiPoly& f, const BiPoly& g) {
  require_same_field(f.field(), g.field());
  if (f.is_zero() || f.coeff_of_first(f.degree_first()).degree() != 0) {
    fail(ErrorCode::BadLeadingCoefficient, "the leading X-coefficient of f must be a nonzero constant");
  }
  const auto& F = *f.field();
  GcdProfile out{f, g, std::vector<int>(F.q(), 0)};
  for (std::uint32_t y = 0; y < F.q(); ++y) {
    const UniPoly fy = f.eval_second(Elem{y});
    const UniPoly gy = g.eval_second(Elem{y});
    out.k[y] = gy.is_zero() ? fy.degree() : gcd(fy, gy).degree();
  }
  return out;
}

SzwCheck szw_inequality_check(const GcdProfile& profile, Elem y0) {
  const std::int64_t k0 = profile.k.at(idx(y0));
  std::int64_t lhs = 0;
  for (int k : profile.k) lhs += std::max<std::int64_t>(0, k - k0);
  const std::int64_t rhs = (profile.f.total_degree() - k0) * (profile.g.total_degree() - k0);
  return {lhs <= rhs, lhs, rhs, y0};
}

FgPair build_fg_thm42(const PointMultiset& t, std::span<const DirectionReport> e) {
  const Field& field = t.field();
  const auto& f = *field;
  require_slopes(e, f.q());
  UniPoly h(field);
  for (const auto& r : e) {
    h += indicator(field, r.direction.slope_value()).scale(reduce(f, r.m_d));
  }
  BiPoly g = line_indicator_sum(field, t.xs(), t.ys(), t.mults());
  g = g - BiPoly::monomial(field, reduce(f, t.total()), 0, 0) + BiPoly::from_second(h);
  return {BiPoly::from_first(field_vanishing_poly(field)), std::move(g), std::move(h)};
}

LowerBoundCheck renitent_lower_bound_check(const PointMultiset& t, std::span<const DirectionReport> e) {
  const auto& f = *t.field();
  require_slopes(e, f.q());
  if (e.empty()) fail(ErrorCode::NoSharpDirection, "no directions given");
  const unsigned lambda = e.front().lambda;
  for (const auto& r : e) {
    if (r.lambda != lambda) fail(ErrorCode::InvalidArgument, "reports were classified with different bounds");
  }
  const auto sharp = std::find_if(e.begin(), e.end(), [](const DirectionReport& r) { return r.sharp; });
  if (sharp == e.end()) fail(ErrorCode::NoSharpDirection, "no direction carries exactly lambda renitent lines");

  LowerBoundCheck out{};
  out.lambda = lambda;
  out.directions = e.size();
  out.bound = static_cast<std::int64_t>(lambda) * (static_cast<std::int64_t>(e.size()) + 1 - lambda);
  for (const auto& r : e) {
    out.count += r.lambda_d();
    out.deficiency += lambda - r.lambda_d();
  }

  const FgPair fg = build_fg_thm42(t, e);
  const GcdProfile profile = gcd_profile(fg.f, fg.g);
  out.counts_agree = true;
  for (const auto& r : e) {
    const auto ind = static_cast<unsigned>(f.q() - profile.k[idx(r.direction.slope_value())]);
    out.gcd_count += ind;
    out.counts_agree = out.counts_agree && ind == r.lambda_d();
  }
  out.szw = szw_inequality_check(profile, sharp->direction.slope_value());
  out.pass = static_cast<std::int64_t>(out.count) >= out.bound && out.counts_agree && out.szw.pass;
  return out;
}

IndexReport index_of_point(const Plane& plane, std::span<const DirectionReport> f, const ProjPoint& r) {
  IndexReport out{r, 0, {}};
  for (const auto& rep : f) {
    for (const auto& l : rep.renitent) {
      if (plane.incident(r, l.line)) out.lines.push_back(l.line);
    }
  }
  out.index = static_cast<unsigned>(out.lines.size());
  return out;
}

DichotomyCheck dichotomy_check(const Plane& plane, const PointMultiset& t, unsigned lambda) {
  if (plane.q() <= 2) fail(ErrorCode::HypothesisNotMet, "q must exceed 2");
  const auto reports = uniform_directions(plane, t, lambda);
  const std::size_t n = reports.size();
  if (n <= std::size_t{lambda} * lambda + lambda) {
    fail(ErrorCode::HypothesisNotMet, std::to_string(n) + " uniform directions, need more than " +
                                          std::to_string(lambda * lambda + lambda));
  }
  DichotomyCheck out{true, lambda, n, lambda, static_cast<unsigned>(n + 1 - lambda), 0, std::nullopt, {}};
  for (const auto& pt : plane.all_points()) {
    ++out.points_checked;
    IndexReport ind = index_of_point(plane, reports, pt);
    if (ind.index >= out.high) {
      out.high_points.push_back(std::move(ind));
    } else if (ind.index > out.low) {
      out.pass = false;
      if (!out.worst || ind.index > out.worst->index) out.worst = std::move(ind);
    }
  }
  return out;
}

namespace {

// z for a point (1:z:0), which is stored as (1/z:1:0) when z != 0.
Elem second_over_first(const FieldCtx& f, const ProjPoint& p) {
  if (idx(p.x) == 0) fail(ErrorCode::CollineationFailure, "point (0:1:0) has no form (1:z:0)");
  return f.div(p.y, p.x);
}

}  // namespace

FgFrame build_fg_thm43(const Plane& plane, const PointMultiset& t, std::span<const DirectionReport> e,
                          const ProjPoint& r) {
  const Field& field = plane.field();
  const auto& f = *field;
  if (e.size() > f.q()) fail(ErrorCode::TooManyDirections, "at most q directions are allowed");
  std::vector<Direction> dirs;
  for (const auto& rep : e) dirs.push_back(rep.direction);
  Collineation map = pick_collineation_for_thm43(plane, dirs, r);

  std::vector<Elem> c;
  UniPoly h(field);
  BiPoly fx = BiPoly::monomial(field, f.one(), 0, 0);
  for (const auto& rep : e) {
    const ProjPoint img = map.apply(plane.direction_point(rep.direction));
    if (idx(img.x) != 0 || idx(img.z) != 1) fail(ErrorCode::CollineationFailure, "direction image off the Y-axis");
    c.push_back(img.y);
    h += indicator(field, img.y).scale(reduce(f, rep.m_d));
    fx = fx * (BiPoly::monomial(field, f.one(), 1, 0) + BiPoly::monomial(field, f.neg(img.y), 0, 0));
  }

  std::vector<Elem> xs, ys;
  std::vector<std::uint64_t> affine_mults;
  UniPoly at_infinity(field);
  for (std::size_t i = 0; i < t.distinct(); ++i) {
    const ProjPoint img = map.apply(plane.affine(t.xs()[i], t.ys()[i]));
    if (img.is_affine()) {
      xs.push_back(img.x);
      ys.push_back(img.y);
      affine_mults.push_back(t.mults()[i]);
    } else {
      // (0:1:0) is the image of a direction, not of an affine point.
      const Elem z = second_over_first(f, img);
      at_infinity += UniPoly::linear(field, f.neg(z), f.one()).pow(f.q() - 1).scale(reduce(f, t.mults()[i]));
    }
  }
  BiPoly g = line_indicator_sum(field, xs, ys, affine_mults) + BiPoly::from_second(at_infinity) -
             BiPoly::monomial(field, reduce(f, t.total()), 0, 0) + BiPoly::from_first(h);

  const ProjPoint r_img = map.apply(r);
  return {std::move(fx), std::move(g), std::move(h), std::move(map), std::move(c), second_over_first(f, r_img)};
}

FrameCheck frame_check(const Plane& plane, const PointMultiset& t, std::span<const DirectionReport> e,
                             const ProjPoint& r) {
  const auto& f = *plane.field();
  const FgFrame frame = build_fg_thm43(plane, t, e, r);
  const GcdProfile profile = gcd_profile(frame.f, frame.g);
  const Collineation back = frame.map.inverse();
  FrameCheck out{true, true, profile.k, {}, szw_inequality_check(profile, frame.y0)};
  for (std::uint32_t y = 0; y < f.q(); ++y) {
    const ProjPoint pre = back.apply(ProjPoint{f.one(), Elem{y}, f.zero()});
    const unsigned ind = index_of_point(plane, e, pre).index;
    out.index.push_back(ind);
    if (profile.k[y] != static_cast<int>(e.size()) - static_cast<int>(ind)) out.k_identity = false;
  }
  out.pass = out.k_identity && out.szw.pass;
  return out;
}

}  // namespace renitent
