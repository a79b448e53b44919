#include "renitent/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace renitent {
namespace {

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Field parse_field_spec(std::string_view spec) {
  const auto bad = [&](const std::string& why) -> Field {
    fail(ErrorCode::ParseError, "field spec '" + std::string(spec) + "': " + why);
  };
  std::string_view base = spec;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (const auto colon = spec.find(':'); colon != std::string_view::npos) {
    base = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);
    if (rest.substr(0, 2) != "m=") return bad("expected ':m=' after the order");
    std::vector<std::uint32_t> coeffs;
    for (auto part : split(rest.substr(2), ',')) {
      std::uint64_t c = 0;
      if (!parse_uint(part, c) || c > 0xffffffffULL) return bad("bad modulus coefficient '" + std::string(part) + "'");
      coeffs.push_back(static_cast<std::uint32_t>(c));
    }
    modulus = std::move(coeffs);
  }
  std::uint64_t p = 0, e = 1;
  const auto caret = base.find('^');
  if (!parse_uint(base.substr(0, caret), p)) return bad("bad characteristic");
  if (caret != std::string_view::npos && !parse_uint(base.substr(caret + 1), e)) return bad("bad exponent");
  if (p > kMaxFieldOrder || e == 0 || e > 16) return bad("unsupported order");
  return FieldCtx::create(static_cast<std::uint32_t>(p), static_cast<unsigned>(e), std::move(modulus));
}

PointMultiset read_point_set(const Field& field, std::istream& in) {
  std::vector<PointEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tok = tokens(view);
    if (tok.empty()) continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() < 2 || tok.size() > 3) fail(ErrorCode::ParseError, where + "expected 'a b [m]'");
    std::uint64_t a = 0, b = 0, m = 1;
    if (!parse_uint(tok[0], a) || !parse_uint(tok[1], b) || (tok.size() == 3 && !parse_uint(tok[2], m))) {
      fail(ErrorCode::ParseError, where + "expected non-negative integers");
    }
    if (a >= field->q() || b >= field->q()) {
      fail(ErrorCode::ParseError, where + "coordinate outside 0.." + std::to_string(field->q() - 1));
    }
    if (m == 0) fail(ErrorCode::ParseError, where + "multiplicity must be positive");
    entries.push_back({Elem{static_cast<std::uint32_t>(a)}, Elem{static_cast<std::uint32_t>(b)}, m});
  }
  return PointMultiset(field, entries);
}

PointMultiset read_point_set_file(const Field& field, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_point_set(field, in);
}

void write_point_set(std::ostream& out, const PointMultiset& t) {
  out << "# field " << t.field()->spec_string() << "\n";
  for (const auto& e : t.entries()) out << idx(e.a) << ' ' << idx(e.b) << ' ' << e.mult << "\n";
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) fail(ErrorCode::InvalidArgument, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fail(ErrorCode::InvalidArgument, "cannot move output into '" + path + "': " + ec.message());
}

}  // namespace renitent
