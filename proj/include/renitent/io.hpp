#pragma once

// Text formats: field specs and point-set files.

#include <iosfwd>
#include <string>
#include <string_view>

#include "renitent/uniformity.hpp"

namespace renitent {

/// "p", "p^e", optionally followed by ":m=c0,c1,...,ce" (constant term first,
/// monic). Throws ParseError and the FieldCtx::create errors.
Field parse_field_spec(std::string_view spec);

/// One point per line, "a b" or "a b m" with element indices and an optional
/// multiplicity; '#' starts a comment. Throws ParseError naming the line.
PointMultiset read_point_set(const Field& field, std::istream& in);
PointMultiset read_point_set_file(const Field& field, const std::string& path);

/// Writes a "# field <spec>" header and one "a b m" line per point.
void write_point_set(std::ostream& out, const PointMultiset& t);

/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace renitent
