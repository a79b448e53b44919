#pragma once

// Dense polynomial algebra over GF(q): univariate, bivariate, homogeneous
// trivariate, and square matrices of univariate polynomials.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "renitent/gf.hpp"

namespace renitent {

/// Degree reported for the zero polynomial (stands for minus infinity).
inline constexpr int kZeroDegree = -1;

class UniPoly {
 public:
  explicit UniPoly(Field field);
  UniPoly(Field field, std::vector<Elem> coeffs);

  static UniPoly constant(Field field, Elem c);
  static UniPoly monomial(Field field, Elem c, std::size_t k);
  /// c0 + c1 * X
  static UniPoly linear(Field field, Elem c0, Elem c1);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Elem coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : Elem{0}; }
  std::span<const Elem> coeffs() const noexcept { return c_; }
  /// Leading coefficient; zero for the zero polynomial.
  Elem leading() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scale(Elem s) const;
  UniPoly pow(std::uint64_t k) const;
  /// Throws ZeroPolynomial.
  UniPoly monic() const;
  UniPoly derivative() const;

  Elem eval(Elem x) const noexcept;
  /// Batch evaluation through the active kernel set.
  std::vector<Elem> eval_many(std::span<const Elem> xs) const;

  bool operator==(const UniPoly& o) const noexcept { return c_ == o.c_ && same_field(field_, o.field_); }

  /// Decreasing degree, coefficients as element indices: "X^2 + 3*X + 1".
  std::string render(std::string_view var = "X") const;

 private:
  void trim() noexcept;

  Field field_;
  std::vector<Elem> c_;
};

struct DivMod {
  UniPoly quot;
  UniPoly rem;
};

/// Euclidean division; throws DivisionByZero when g = 0.
DivMod divmod(const UniPoly& f, const UniPoly& g);

/// Monic gcd by the Euclidean algorithm; gcd(f, 0) = monic(f). Throws
/// BothZero when both inputs vanish.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

struct RootMultiplicity {
  Elem root;
  std::uint32_t multiplicity;
  bool operator==(const RootMultiplicity&) const = default;
};

/// GF(q)-roots in ascending index order with their multiplicities, found by
/// exhaustive evaluation and repeated division by (X - root). Throws
/// ZeroPolynomial.
std::vector<RootMultiplicity> roots_with_multiplicity(const UniPoly& f);

/// X^q - X over the given field.
UniPoly field_vanishing_poly(const Field& field);

/// Dense polynomial in two variables, first^i * second^j.
class BiPoly {
 public:
  explicit BiPoly(Field field);

  static BiPoly monomial(Field field, Elem c, std::size_t i, std::size_t j);
  /// Polynomial in the first variable only.
  static BiPoly from_first(const UniPoly& f);
  /// Polynomial in the second variable only.
  static BiPoly from_second(const UniPoly& f);

  const Field& field() const noexcept { return field_; }
  Elem coeff(std::size_t i, std::size_t j) const noexcept;
  void set(std::size_t i, std::size_t j, Elem c);

  bool is_zero() const noexcept { return rows_ == 0; }
  int degree_first() const noexcept { return static_cast<int>(rows_) - 1; }
  int degree_second() const noexcept { return static_cast<int>(cols_) - 1; }
  int total_degree() const noexcept;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly scale(Elem s) const;
  /// Repeated squaring.
  BiPoly pow(std::uint64_t k) const;

  /// Substitutes the second variable: f(U, v) as a polynomial in U.
  UniPoly eval_second(Elem v) const;
  /// Substitutes the first variable: f(u, V) as a polynomial in V.
  UniPoly eval_first(Elem u) const;
  Elem eval(Elem u, Elem v) const noexcept;
  /// Coefficient of first^i as a polynomial in the second variable.
  UniPoly coeff_of_first(std::size_t i) const;

  bool operator==(const BiPoly& o) const noexcept;

  std::string render(std::string_view first = "U", std::string_view second = "V") const;

 private:
  void trim();
  void resize(std::size_t rows, std::size_t cols);

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> c_;  // row-major, c_[i * cols_ + j]
};

/// Homogeneous polynomial of fixed degree n in U, V, W.
class TriHomPoly {
 public:
  TriHomPoly(Field field, unsigned degree);

  /// aU + bV + cW
  static TriHomPoly linear(Field field, Elem a, Elem b, Elem c);
  /// W^n f(U/W, V/W); throws DegreeTooSmall when deg f > n.
  static TriHomPoly homogenize(const BiPoly& f, unsigned n);

  const Field& field() const noexcept { return field_; }
  unsigned degree() const noexcept { return n_; }
  /// Coefficient of U^i V^j W^(n-i-j).
  Elem coeff(unsigned i, unsigned j) const noexcept;
  /// Throws InvalidArgument unless i + j + k = n.
  void set(unsigned i, unsigned j, unsigned k, Elem c);

  bool is_zero() const noexcept;
  /// g(U, V, 1)
  BiPoly dehomogenize() const;
  Elem eval(Elem u, Elem v, Elem w) const noexcept;

  TriHomPoly operator*(const TriHomPoly& o) const;
  TriHomPoly operator+(const TriHomPoly& o) const;
  TriHomPoly scale(Elem s) const;
  TriHomPoly pow(unsigned k) const;

  /// Equal up to a nonzero constant factor.
  bool proportional_to(const TriHomPoly& o) const;

  struct Monomial {
    unsigned i, j, k;
    Elem coeff;
  };
  /// Nonzero monomials, U-exponent descending, then V-exponent descending.
  std::vector<Monomial> monomials() const;

  bool operator==(const TriHomPoly& o) const noexcept;

  /// e.g. "U^2 + 3*U*W + 2*W^2"
  std::string render() const;

 private:
  std::size_t slot(unsigned i, unsigned j) const noexcept { return std::size_t{i} * (n_ + 1) + j; }

  Field field_;
  unsigned n_;
  std::vector<Elem> c_;
};

/// Square matrix of univariate polynomials.
class PolyMatrix {
 public:
  PolyMatrix(Field field, std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  UniPoly& at(std::size_t r, std::size_t c) { return m_[r * n_ + c]; }
  const UniPoly& at(std::size_t r, std::size_t c) const { return m_[r * n_ + c]; }

  /// Copy with column c replaced.
  PolyMatrix with_column(std::size_t c, std::span<const UniPoly> column) const;
  /// Entry-wise evaluation; the result holds constants.
  PolyMatrix evaluate(Elem v) const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<UniPoly> m_;
};

/// Exact determinant by fraction-free (Bareiss) elimination in GF(q)[V].
UniPoly poly_det(const PolyMatrix& m);

}  // namespace renitent
