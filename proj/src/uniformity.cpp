#include "renitent/uniformity.hpp"

#include <algorithm>
#include <map>

#include "renitent/simd.hpp"

namespace renitent {

PointMultiset::PointMultiset(Field field) : field_(std::move(field)) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
}

PointMultiset::PointMultiset(Field field, std::span<const PointEntry> entries) : PointMultiset(std::move(field)) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> merged;
  for (const auto& e : entries) {
    if (!field_->contains(e.a) || !field_->contains(e.b)) {
      fail(ErrorCode::InvalidArgument, "point coordinate outside the field");
    }
    if (e.mult == 0) fail(ErrorCode::InvalidArgument, "multiplicities must be positive");
    merged[{idx(e.a), idx(e.b)}] += e.mult;
  }
  xs_.reserve(merged.size());
  ys_.reserve(merged.size());
  mult_.reserve(merged.size());
  for (const auto& [key, m] : merged) {
    xs_.push_back(Elem{key.first});
    ys_.push_back(Elem{key.second});
    mult_.push_back(m);
    total_ += m;
  }
}

std::vector<PointEntry> PointMultiset::entries() const {
  std::vector<PointEntry> out;
  out.reserve(xs_.size());
  for (std::size_t i = 0; i < xs_.size(); ++i) out.push_back({xs_[i], ys_[i], mult_[i]});
  return out;
}

std::uint64_t PointMultiset::multiplicity(Elem a, Elem b) const noexcept {
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (xs_[i] == a && ys_[i] == b) return mult_[i];
  }
  return 0;
}

std::uint64_t line_count(const Plane& plane, const PointMultiset& t, const ProjLine& l) {
  require_same_field(plane.field(), t.field());
  if (idx(l.a) == 0 && idx(l.b) == 0) fail(ErrorCode::LineAtInfinity, "the line at infinity has no affine points");
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < t.distinct(); ++i) {
    if (plane.incident(plane.affine(t.xs()[i], t.ys()[i]), l)) n += t.mults()[i];
  }
  return n;
}

std::vector<std::uint64_t> intercept_profile(const PointMultiset& t, Direction d) {
  const auto& f = *t.field();
  std::vector<std::uint64_t> counts(f.q(), 0);
  if (d.is_vertical()) {
    for (std::size_t i = 0; i < t.distinct(); ++i) counts[idx(t.xs()[i])] += t.mults()[i];
    return counts;
  }
  std::vector<Elem> keys(t.distinct());
  simd::kernels().affine_intercepts(f, t.xs(), t.ys(), d.slope_value(), keys);
  for (std::size_t i = 0; i < keys.size(); ++i) counts[idx(keys[i])] += t.mults()[i];
  return counts;
}

unsigned max_classify_lambda(std::uint32_t q) noexcept { return (q - 1) / 2; }

std::optional<DirectionReport> classify_profile(const Plane& plane, Direction d,
                                                std::vector<std::uint64_t> counts, unsigned lambda) {
  const std::uint32_t q = plane.q();
  const std::uint32_t p = plane.field()->p();
  if (lambda == 0 || lambda > max_classify_lambda(q)) {
    fail(ErrorCode::LambdaOutOfRange,
         "lambda = " + std::to_string(lambda) + " must satisfy 0 < lambda <= " + std::to_string(max_classify_lambda(q)));
  }
  if (counts.size() != q) fail(ErrorCode::InvalidArgument, "profile must have q entries");

  std::vector<std::uint32_t> hist(p, 0);
  for (auto c : counts) ++hist[c % p];
  // At most one residue can reach q - lambda > q/2.
  const auto best = std::max_element(hist.begin(), hist.end());
  if (*best < q - lambda) return std::nullopt;

  DirectionReport r{d, lambda, std::move(counts), static_cast<std::uint32_t>(best - hist.begin()), {}, false};
  for (std::uint32_t t = 0; t < q; ++t) {
    const auto res = static_cast<std::uint32_t>(r.counts[t] % p);
    if (res == r.m_d) continue;
    r.renitent.push_back({plane.class_line(d, Elem{t}), Elem{t}, res, r.counts[t]});
  }
  r.sharp = r.lambda_d() == lambda;
  return r;
}

std::optional<DirectionReport> classify_direction(const Plane& plane, const PointMultiset& t, Direction d,
                                                  unsigned lambda) {
  require_same_field(plane.field(), t.field());
  return classify_profile(plane, d, intercept_profile(t, d), lambda);
}

std::vector<std::optional<DirectionReport>> scan_directions(const Plane& plane, const PointMultiset& t,
                                                            unsigned lambda) {
  std::vector<std::optional<DirectionReport>> out;
  out.reserve(plane.q() + 1);
  for (std::uint32_t i = 0; i <= plane.q(); ++i) {
    out.push_back(classify_direction(plane, t, Direction::from_index(i, plane.q()), lambda));
  }
  return out;
}

std::vector<DirectionReport> uniform_directions(const Plane& plane, const PointMultiset& t, unsigned lambda) {
  std::vector<DirectionReport> out;
  for (auto& r : scan_directions(plane, t, lambda)) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

std::optional<ProjPoint> concurrency_point(const Plane& plane, std::span<const ProjLine> lines) {
  std::vector<ProjLine> uniq(lines.begin(), lines.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < 2) fail(ErrorCode::FewerThanTwoLines, "concurrency needs at least two distinct lines");
  const ProjPoint p = plane.meet(uniq[0], uniq[1]);
  for (const auto& l : uniq) {
    if (!plane.incident(p, l)) return std::nullopt;
  }
  return p;
}

std::vector<ProjLine> renitent_lines(std::span<const DirectionReport> reports) {
  std::vector<ProjLine> out;
  for (const auto& r : reports) {
    for (const auto& l : r.renitent) out.push_back(l.line);
  }
  return out;
}

}  // namespace renitent
