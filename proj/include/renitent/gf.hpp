#pragma once

// Exact arithmetic in GF(p^e).
//
// Elements are encoded by their base-p digit expansion: the residue
// c_0 + c_1 t + ... + c_{e-1} t^{e-1} modulo the defining polynomial has
// index c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Index 0 is zero, index 1 is one,
// and indices 0..p-1 form the prime subfield.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renitent/error.hpp"

namespace renitent {

/// Field element index. Meaningful only together with its FieldCtx.
enum class Elem : std::uint32_t {};

constexpr std::uint32_t idx(Elem a) noexcept { return static_cast<std::uint32_t>(a); }

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class FieldCtx {
 public:
  /// Builds GF(p^e). Without a modulus the irreducible monic polynomial of
  /// degree e with the smallest index c_0 + c_1 p + ... + c_{e-1} p^{e-1}
  /// is used (x^3+x+1 for GF(8)). Coefficients are constant-first and a
  /// given modulus must be monic of degree e.
  static Field create(std::uint32_t p, unsigned e = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }
  /// Monic defining polynomial, constant term first, length e+1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  bool contains(Elem a) const noexcept { return idx(a) < q_; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;
  /// Checked conversion from an element index.
  Elem elem(std::uint64_t index) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DivisionByZero for b = 0.
  Elem div(Elem a, Elem b) const;
  /// Multiplicative inverse by the extended Euclidean algorithm on residues.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  /// Absolute trace a + a^p + ... + a^{p^{e-1}}, an element of GF(p).
  Elem trace(Elem a) const noexcept;

  /// All q elements in ascending index order.
  std::vector<Elem> elements() const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// Schoolbook residue multiplication with reduction by the modulus. Kept
  /// independent of the log tables used by mul().
  Elem mul_residue(Elem a, Elem b) const;

  /// A generator of the multiplicative group (smallest index).
  Elem primitive() const noexcept { return Elem{exp_[q_ > 2 ? 1 : 0]}; }
  /// exp()[k] = g^k for 0 <= k < 2(q-1); log()[a] for a != 0.
  std::span<const std::uint32_t> exp_table() const noexcept { return exp_; }
  std::span<const std::uint32_t> log_table() const noexcept { return log_; }

  /// "p" or "p^e" plus ":m=..." when the modulus differs from the default.
  std::string spec_string() const;

  bool operator==(const FieldCtx& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  FieldCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus, bool default_modulus);
  void build_tables();
  Elem add_digits(Elem a, Elem b) const noexcept;

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool default_modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  // zech_[n] = log(1 + g^n), or kNoLog when 1 + g^n = 0; odd p, e > 1 only.
  std::vector<std::uint32_t> zech_;
  std::uint32_t neg_one_log_ = 0;
};

inline constexpr std::uint32_t kNoLog = 0xffffffffu;

/// True when both handles describe the same field.
bool same_field(const Field& a, const Field& b) noexcept;
/// Throws FieldMismatch unless same_field(a, b).
void require_same_field(const Field& a, const Field& b);

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over GF(p) by trial division against
/// every monic polynomial of degree at most deg/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic_poly, std::uint32_t p);

/// An element together with its field, with checked operators. Convenient
/// at API boundaries; internal code works on bare Elem values.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);
  FieldElement(Field field, std::uint64_t index);

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::uint32_t index() const noexcept { return idx(value_); }
  bool is_zero() const noexcept { return idx(value_) == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const;

  bool operator==(const FieldElement& o) const noexcept {
    return value_ == o.value_ && same_field(field_, o.field_);
  }

 private:
  Field field_;
  Elem value_;
};

}  // namespace renitent
