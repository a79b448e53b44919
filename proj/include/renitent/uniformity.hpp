#pragma once

// Intersection profiles of a point multiset with parallel classes, and the
// classification of (q - lambda)-uniform directions.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "renitent/plane.hpp"

namespace renitent {

struct PointEntry {
  Elem a, b;
  std::uint64_t mult = 1;
};

/// Affine points with positive multiplicities. Stored as parallel arrays,
/// sorted by (a, b), with repeated points merged.
class PointMultiset {
 public:
  explicit PointMultiset(Field field);
  /// Throws InvalidArgument for zero multiplicities or foreign elements.
  PointMultiset(Field field, std::span<const PointEntry> entries);

  const Field& field() const noexcept { return field_; }
  std::size_t distinct() const noexcept { return xs_.size(); }
  bool empty() const noexcept { return xs_.empty(); }
  /// Sum of multiplicities.
  std::uint64_t total() const noexcept { return total_; }
  std::span<const Elem> xs() const noexcept { return xs_; }
  std::span<const Elem> ys() const noexcept { return ys_; }
  std::span<const std::uint64_t> mults() const noexcept { return mult_; }
  std::vector<PointEntry> entries() const;
  /// Multiplicity of (a, b), zero when absent.
  std::uint64_t multiplicity(Elem a, Elem b) const noexcept;

  bool operator==(const PointMultiset& o) const noexcept {
    return same_field(field_, o.field_) && xs_ == o.xs_ && ys_ == o.ys_ && mult_ == o.mult_;
  }

 private:
  Field field_;
  std::vector<Elem> xs_, ys_;
  std::vector<std::uint64_t> mult_;
  std::uint64_t total_ = 0;
};

/// Exact number of points of T on an affine line. Throws LineAtInfinity.
std::uint64_t line_count(const Plane& plane, const PointMultiset& t, const ProjLine& l);

/// counts[t] = line_count of class_line(d, t), for every intercept t.
std::vector<std::uint64_t> intercept_profile(const PointMultiset& t, Direction d);

struct RenitentLine {
  ProjLine line;
  Elem alpha;          // intercept within the parallel class
  std::uint32_t t;     // count mod p
  std::uint64_t count; // exact count
};

struct DirectionReport {
  Direction direction;
  unsigned lambda = 0;               // bound used for the classification
  std::vector<std::uint64_t> counts; // per intercept
  std::uint32_t m_d = 0;
  std::vector<RenitentLine> renitent;
  bool sharp = false;

  unsigned lambda_d() const noexcept { return static_cast<unsigned>(renitent.size()); }
};

/// Largest lambda accepted by the classifier, (q-1)/2.
unsigned max_classify_lambda(std::uint32_t q) noexcept;

/// Classifies a raw intercept profile. nullopt when no residue class covers
/// q - lambda lines. Throws LambdaOutOfRange unless 0 < lambda <= (q-1)/2.
std::optional<DirectionReport> classify_profile(const Plane& plane, Direction d,
                                                std::vector<std::uint64_t> counts, unsigned lambda);

std::optional<DirectionReport> classify_direction(const Plane& plane, const PointMultiset& t, Direction d,
                                                  unsigned lambda);

/// One entry per direction, index order (slopes, then vertical).
std::vector<std::optional<DirectionReport>> scan_directions(const Plane& plane, const PointMultiset& t,
                                                            unsigned lambda);

/// The uniform directions only, index order.
std::vector<DirectionReport> uniform_directions(const Plane& plane, const PointMultiset& t, unsigned lambda);

/// Common point of all lines, or nullopt. Duplicates are ignored; throws
/// FewerThanTwoLines when fewer than two distinct lines remain.
std::optional<ProjPoint> concurrency_point(const Plane& plane, std::span<const ProjLine> lines);

/// All renitent lines of the reports, in report order.
std::vector<ProjLine> renitent_lines(std::span<const DirectionReport> reports);

}  // namespace renitent
