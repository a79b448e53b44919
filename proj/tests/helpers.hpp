#pragma once

#include <initializer_list>
#include <optional>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "renitent/envelope.hpp"
#include "renitent/generators.hpp"
#include "renitent/szw.hpp"

namespace th {

using namespace renitent;

inline Elem E(std::uint32_t i) { return Elem{i}; }

inline PointMultiset ms(const Field& f, std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> pts) {
  std::vector<PointEntry> e;
  for (const auto& [a, b, m] : pts) e.push_back({Elem{a}, Elem{b}, m});
  return PointMultiset(f, e);
}

inline std::vector<oracle::Pt> pts(const PointMultiset& t) {
  std::vector<oracle::Pt> out;
  for (const auto& e : t.entries()) out.push_back({idx(e.a), idx(e.b), e.mult});
  return out;
}

inline oracle::Poly coeffs(const UniPoly& f) {
  oracle::Poly out;
  for (Elem c : f.coeffs()) out.push_back(idx(c));
  return out;
}

// Code of the Error thrown by fn, nullopt when nothing is thrown.
template <class Fn>
std::optional<ErrorCode> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Planted instance from explicit points and weights.
inline PlantedInstance planted(const Field& f, std::vector<std::pair<std::uint32_t, std::uint32_t>> p,
                               std::vector<std::uint64_t> w) {
  std::vector<std::pair<Elem, Elem>> pe;
  for (auto [a, b] : p) pe.emplace_back(Elem{a}, Elem{b});
  return gen_planted(f, pe, w);
}

inline std::vector<DirectionReport> reports_on(const Plane& plane, const PointMultiset& t, unsigned lambda,
                                               const std::vector<Direction>& dirs) {
  std::vector<DirectionReport> out;
  for (Direction d : dirs) {
    auto r = classify_direction(plane, t, d, lambda);
    if (r) out.push_back(*r);
  }
  return out;
}

}  // namespace th
