#include "renitent/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "renitent/simd.hpp"

namespace renitent {
namespace {

struct VarPower {
  std::string_view name;
  std::size_t exp;
};

void append_term(std::string& out, Elem c, std::initializer_list<VarPower> vars) {
  if (!out.empty()) out += " + ";
  std::string body;
  for (const auto& v : vars) {
    if (v.exp == 0) continue;
    if (!body.empty()) body += '*';
    body += v.name;
    if (v.exp > 1) body += '^' + std::to_string(v.exp);
  }
  if (body.empty()) {
    out += std::to_string(idx(c));
  } else if (idx(c) == 1) {
    out += body;
  } else {
    out += std::to_string(idx(c)) + '*' + body;
  }
}

// Synthetic division by (X - r).
std::pair<std::vector<Elem>, Elem> divide_linear(const FieldCtx& f, std::span<const Elem> c, Elem r) {
  if (c.empty()) return {{}, Elem{0}};
  std::vector<Elem> quot(c.size() - 1);
  Elem acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    quot[k] = acc;
    acc = f.add(f.mul(acc, r), c[k]);
  }
  return {std::move(quot), acc};
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Field field) : field_(std::move(field)) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
}

UniPoly::UniPoly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
  for (auto c : c_) {
    if (!field_->contains(c)) fail(ErrorCode::InvalidArgument, "coefficient out of range");
  }
  trim();
}

UniPoly UniPoly::constant(Field field, Elem c) { return UniPoly(std::move(field), {c}); }

UniPoly UniPoly::monomial(Field field, Elem c, std::size_t k) {
  std::vector<Elem> coeffs(k + 1, Elem{0});
  coeffs[k] = c;
  return UniPoly(std::move(field), std::move(coeffs));
}

UniPoly UniPoly::linear(Field field, Elem c0, Elem c1) { return UniPoly(std::move(field), {c0, c1}); }

void UniPoly::trim() noexcept {
  while (!c_.empty() && idx(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require_same_field(field_, o.field_);
  const auto& f = *field_;
  std::vector<Elem> out(std::max(c_.size(), o.c_.size()), Elem{0});
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(coeff(k), o.coeff(k));
  UniPoly r(field_);
  r.c_ = std::move(out);
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  require_same_field(field_, o.field_);
  const auto& f = *field_;
  std::vector<Elem> out(std::max(c_.size(), o.c_.size()), Elem{0});
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.sub(coeff(k), o.coeff(k));
  UniPoly r(field_);
  r.c_ = std::move(out);
  r.trim();
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(field_);
  r.c_.reserve(c_.size());
  for (auto c : c_) r.c_.push_back(field_->neg(c));
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require_same_field(field_, o.field_);
  UniPoly r(field_);
  if (c_.empty() || o.c_.empty()) return r;
  const auto& f = *field_;
  const std::size_t n = c_.size() + o.c_.size() - 1;
  r.c_.assign(n, Elem{0});
  if (f.is_prime_field()) {
    // Products are below 2^32; accumulate in 64 bits and reduce once.
    const std::uint64_t p = f.p();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t lo = k >= o.c_.size() ? k - o.c_.size() + 1 : 0;
      const std::size_t hi = std::min(k, c_.size() - 1);
      std::uint64_t acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc += std::uint64_t{idx(c_[i])} * idx(o.c_[k - i]);
      r.c_[k] = Elem{static_cast<std::uint32_t>(acc % p)};
    }
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (idx(c_[i]) == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = f.add(r.c_[i + j], f.mul(c_[i], o.c_[j]));
    }
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scale(Elem s) const {
  UniPoly r(field_);
  if (idx(s) == 0) return r;
  r.c_.reserve(c_.size());
  for (auto c : c_) r.c_.push_back(field_->mul(c, s));
  return r;
}

UniPoly UniPoly::pow(std::uint64_t k) const {
  UniPoly result = constant(field_, field_->one());
  UniPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "monic of the zero polynomial");
  return scale(field_->inv(leading()));
}

UniPoly UniPoly::derivative() const {
  UniPoly r(field_);
  if (c_.size() < 2) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(k)), c_[k]);
  r.trim();
  return r;
}

Elem UniPoly::eval(Elem x) const noexcept {
  const auto& f = *field_;
  Elem acc = f.zero();
  for (std::size_t k = c_.size(); k-- > 0;) acc = f.add(f.mul(acc, x), c_[k]);
  return acc;
}

std::vector<Elem> UniPoly::eval_many(std::span<const Elem> xs) const {
  std::vector<Elem> out(xs.size());
  simd::kernels().horner(*field_, c_, xs, out);
  return out;
}

std::string UniPoly::render(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (idx(c_[k]) != 0) append_term(out, c_[k], {{var, k}});
  }
  return out;
}

DivMod divmod(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.field(), g.field());
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& F = *f.field();
  std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  if (rem.size() < gc.size()) return {UniPoly(f.field()), f};
  const Elem lead_inv = F.inv(g.leading());
  std::vector<Elem> quot(rem.size() - gc.size() + 1, Elem{0});
  for (std::size_t i = rem.size(); i-- > gc.size() - 1;) {
    const Elem coef = F.mul(rem[i], lead_inv);
    const std::size_t shift = i - (gc.size() - 1);
    quot[shift] = coef;
    if (idx(coef) == 0) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(coef, gc[j]));
  }
  rem.resize(gc.size() - 1);
  return {UniPoly(f.field(), std::move(quot)), UniPoly(f.field(), std::move(rem))};
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.field(), g.field());
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<RootMultiplicity> roots_with_multiplicity(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const auto& F = *f.field();
  const auto elements = F.elements();
  const auto values = f.eval_many(elements);
  std::vector<RootMultiplicity> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (idx(values[i]) != 0) continue;
    std::vector<Elem> c(f.coeffs().begin(), f.coeffs().end());
    std::uint32_t mult = 0;
    for (;;) {
      auto [quot, rem] = divide_linear(F, c, elements[i]);
      if (idx(rem) != 0) break;
      ++mult;
      c = std::move(quot);
    }
    out.push_back({elements[i], mult});
  }
  return out;
}

UniPoly field_vanishing_poly(const Field& field) {
  std::vector<Elem> c(field->q() + 1, Elem{0});
  c[field->q()] = field->one();
  c[1] = field->neg(field->one());
  return UniPoly(field, std::move(c));
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(Field field) : field_(std::move(field)) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
}

BiPoly BiPoly::monomial(Field field, Elem c, std::size_t i, std::size_t j) {
  BiPoly r(std::move(field));
  r.set(i, j, c);
  return r;
}

BiPoly BiPoly::from_first(const UniPoly& f) {
  BiPoly r(f.field());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.set(i, 0, f.coeff(i));
  return r;
}

BiPoly BiPoly::from_second(const UniPoly& f) {
  BiPoly r(f.field());
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) r.set(0, j, f.coeff(j));
  return r;
}

Elem BiPoly::coeff(std::size_t i, std::size_t j) const noexcept {
  if (i >= rows_ || j >= cols_) return Elem{0};
  return c_[i * cols_ + j];
}

void BiPoly::resize(std::size_t rows, std::size_t cols) {
  if (rows == rows_ && cols == cols_) return;
  std::vector<Elem> next(rows * cols, Elem{0});
  for (std::size_t i = 0; i < std::min(rows, rows_); ++i) {
    for (std::size_t j = 0; j < std::min(cols, cols_); ++j) next[i * cols + j] = c_[i * cols_ + j];
  }
  c_ = std::move(next);
  rows_ = rows;
  cols_ = cols;
}

void BiPoly::set(std::size_t i, std::size_t j, Elem c) {
  if (!field_->contains(c)) fail(ErrorCode::InvalidArgument, "coefficient out of range");
  if (idx(c) == 0 && (i >= rows_ || j >= cols_)) return;
  if (i >= rows_ || j >= cols_) resize(std::max(rows_, i + 1), std::max(cols_, j + 1));
  c_[i * cols_ + j] = c;
  if (idx(c) == 0) trim();
}

void BiPoly::trim() {
  std::size_t rows = 0, cols = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (idx(c_[i * cols_ + j]) != 0) {
        rows = std::max(rows, i + 1);
        cols = std::max(cols, j + 1);
      }
    }
  }
  if (rows == 0) {
    rows_ = cols_ = 0;
    c_.clear();
    return;
  }
  resize(rows, cols);
}

int BiPoly::total_degree() const noexcept {
  int best = kZeroDegree;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (idx(c_[i * cols_ + j]) != 0) best = std::max(best, static_cast<int>(i + j));
    }
  }
  return best;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  require_same_field(field_, o.field_);
  BiPoly r(field_);
  r.resize(std::max(rows_, o.rows_), std::max(cols_, o.cols_));
  for (std::size_t i = 0; i < r.rows_; ++i) {
    for (std::size_t j = 0; j < r.cols_; ++j) r.c_[i * r.cols_ + j] = field_->add(coeff(i, j), o.coeff(i, j));
  }
  r.trim();
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  require_same_field(field_, o.field_);
  BiPoly r(field_);
  r.resize(std::max(rows_, o.rows_), std::max(cols_, o.cols_));
  for (std::size_t i = 0; i < r.rows_; ++i) {
    for (std::size_t j = 0; j < r.cols_; ++j) r.c_[i * r.cols_ + j] = field_->sub(coeff(i, j), o.coeff(i, j));
  }
  r.trim();
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  require_same_field(field_, o.field_);
  BiPoly r(field_);
  if (is_zero() || o.is_zero()) return r;
  const auto& f = *field_;
  r.resize(rows_ + o.rows_ - 1, cols_ + o.cols_ - 1);
  for (std::size_t i1 = 0; i1 < rows_; ++i1) {
    for (std::size_t j1 = 0; j1 < cols_; ++j1) {
      const Elem a = c_[i1 * cols_ + j1];
      if (idx(a) == 0) continue;
      for (std::size_t i2 = 0; i2 < o.rows_; ++i2) {
        Elem* dst = &r.c_[(i1 + i2) * r.cols_ + j1];
        const Elem* src = &o.c_[i2 * o.cols_];
        for (std::size_t j2 = 0; j2 < o.cols_; ++j2) dst[j2] = f.add(dst[j2], f.mul(a, src[j2]));
      }
    }
  }
  r.trim();
  return r;
}

BiPoly BiPoly::scale(Elem s) const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = field_->mul(c, s);
  r.trim();
  return r;
}

BiPoly BiPoly::pow(std::uint64_t k) const {
  BiPoly result = monomial(field_, field_->one(), 0, 0);
  BiPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

UniPoly BiPoly::eval_second(Elem v) const {
  const auto& f = *field_;
  std::vector<Elem> out(rows_, Elem{0});
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = f.zero();
    for (std::size_t j = cols_; j-- > 0;) acc = f.add(f.mul(acc, v), c_[i * cols_ + j]);
    out[i] = acc;
  }
  return UniPoly(field_, std::move(out));
}

UniPoly BiPoly::eval_first(Elem u) const {
  const auto& f = *field_;
  std::vector<Elem> out(cols_, Elem{0});
  for (std::size_t j = 0; j < cols_; ++j) {
    Elem acc = f.zero();
    for (std::size_t i = rows_; i-- > 0;) acc = f.add(f.mul(acc, u), c_[i * cols_ + j]);
    out[j] = acc;
  }
  return UniPoly(field_, std::move(out));
}

Elem BiPoly::eval(Elem u, Elem v) const noexcept {
  const auto& f = *field_;
  Elem acc = f.zero();
  for (std::size_t i = rows_; i-- > 0;) {
    Elem row = f.zero();
    for (std::size_t j = cols_; j-- > 0;) row = f.add(f.mul(row, v), c_[i * cols_ + j]);
    acc = f.add(f.mul(acc, u), row);
  }
  return acc;
}

UniPoly BiPoly::coeff_of_first(std::size_t i) const {
  std::vector<Elem> out;
  if (i < rows_) out.assign(c_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            c_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return UniPoly(field_, std::move(out));
}

bool BiPoly::operator==(const BiPoly& o) const noexcept {
  return rows_ == o.rows_ && cols_ == o.cols_ && c_ == o.c_ && same_field(field_, o.field_);
}

std::string BiPoly::render(std::string_view first, std::string_view second) const {
  if (is_zero()) return "0";
  std::string out;
  for (int deg = total_degree(); deg >= 0; --deg) {
    for (std::size_t i = std::min<std::size_t>(deg, rows_ - 1) + 1; i-- > 0;) {
      const std::size_t j = static_cast<std::size_t>(deg) - i;
      const Elem c = coeff(i, j);
      if (idx(c) != 0) append_term(out, c, {{first, i}, {second, j}});
    }
  }
  return out;
}

// ---------------------------------------------------------------- TriHomPoly

TriHomPoly::TriHomPoly(Field field, unsigned degree)
    : field_(std::move(field)), n_(degree), c_(std::size_t{degree + 1} * (degree + 1), Elem{0}) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
}

TriHomPoly TriHomPoly::linear(Field field, Elem a, Elem b, Elem c) {
  TriHomPoly r(std::move(field), 1);
  r.set(1, 0, 0, a);
  r.set(0, 1, 0, b);
  r.set(0, 0, 1, c);
  return r;
}

TriHomPoly TriHomPoly::homogenize(const BiPoly& f, unsigned n) {
  if (f.total_degree() > static_cast<int>(n)) {
    fail(ErrorCode::DegreeTooSmall,
         "total degree " + std::to_string(f.total_degree()) + " exceeds " + std::to_string(n));
  }
  TriHomPoly r(f.field(), n);
  for (int i = 0; i <= f.degree_first(); ++i) {
    for (int j = 0; j <= f.degree_second(); ++j) {
      const Elem c = f.coeff(i, j);
      if (idx(c) != 0) r.set(i, j, n - i - j, c);
    }
  }
  return r;
}

Elem TriHomPoly::coeff(unsigned i, unsigned j) const noexcept {
  if (i + j > n_) return Elem{0};
  return c_[slot(i, j)];
}

void TriHomPoly::set(unsigned i, unsigned j, unsigned k, Elem c) {
  if (i + j + k != n_) fail(ErrorCode::InvalidArgument, "monomial is not of degree " + std::to_string(n_));
  if (!field_->contains(c)) fail(ErrorCode::InvalidArgument, "coefficient out of range");
  c_[slot(i, j)] = c;
}

bool TriHomPoly::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Elem c) { return idx(c) == 0; });
}

BiPoly TriHomPoly::dehomogenize() const {
  BiPoly r(field_);
  for (unsigned i = 0; i <= n_; ++i) {
    for (unsigned j = 0; i + j <= n_; ++j) {
      if (idx(c_[slot(i, j)]) != 0) r.set(i, j, c_[slot(i, j)]);
    }
  }
  return r;
}

Elem TriHomPoly::eval(Elem u, Elem v, Elem w) const noexcept {
  const auto& f = *field_;
  Elem acc = f.zero();
  for (unsigned i = 0; i <= n_; ++i) {
    for (unsigned j = 0; i + j <= n_; ++j) {
      const Elem c = c_[slot(i, j)];
      if (idx(c) == 0) continue;
      const Elem term = f.mul(c, f.mul(f.pow(u, i), f.mul(f.pow(v, j), f.pow(w, n_ - i - j))));
      acc = f.add(acc, term);
    }
  }
  return acc;
}

TriHomPoly TriHomPoly::operator*(const TriHomPoly& o) const {
  require_same_field(field_, o.field_);
  const auto& f = *field_;
  TriHomPoly r(field_, n_ + o.n_);
  for (unsigned i1 = 0; i1 <= n_; ++i1) {
    for (unsigned j1 = 0; i1 + j1 <= n_; ++j1) {
      const Elem a = c_[slot(i1, j1)];
      if (idx(a) == 0) continue;
      for (unsigned i2 = 0; i2 <= o.n_; ++i2) {
        for (unsigned j2 = 0; i2 + j2 <= o.n_; ++j2) {
          const Elem b = o.c_[o.slot(i2, j2)];
          if (idx(b) == 0) continue;
          Elem& dst = r.c_[r.slot(i1 + i2, j1 + j2)];
          dst = f.add(dst, f.mul(a, b));
        }
      }
    }
  }
  return r;
}

TriHomPoly TriHomPoly::operator+(const TriHomPoly& o) const {
  require_same_field(field_, o.field_);
  if (n_ != o.n_) fail(ErrorCode::DegreeMismatch, "sum of homogeneous polynomials of different degree");
  TriHomPoly r(field_, n_);
  for (std::size_t s = 0; s < c_.size(); ++s) r.c_[s] = field_->add(c_[s], o.c_[s]);
  return r;
}

TriHomPoly TriHomPoly::scale(Elem s) const {
  TriHomPoly r(field_, n_);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = field_->mul(c_[k], s);
  return r;
}

TriHomPoly TriHomPoly::pow(unsigned k) const {
  TriHomPoly r(field_, 0);
  r.set(0, 0, 0, field_->one());
  for (unsigned t = 0; t < k; ++t) r = r * *this;
  return r;
}

bool TriHomPoly::proportional_to(const TriHomPoly& o) const {
  require_same_field(field_, o.field_);
  if (n_ != o.n_) return false;
  const bool z1 = is_zero(), z2 = o.is_zero();
  if (z1 || z2) return z1 && z2;
  for (std::size_t s = 0; s < c_.size(); ++s) {
    if (idx(c_[s]) != 0) {
      if (idx(o.c_[s]) == 0) return false;
      return scale(field_->div(o.c_[s], c_[s])) == o;
    }
  }
  return false;
}

std::vector<TriHomPoly::Monomial> TriHomPoly::monomials() const {
  std::vector<Monomial> out;
  for (unsigned i = n_ + 1; i-- > 0;) {
    for (unsigned j = n_ - i + 1; j-- > 0;) {
      const Elem c = c_[slot(i, j)];
      if (idx(c) != 0) out.push_back({i, j, n_ - i - j, c});
    }
  }
  return out;
}

bool TriHomPoly::operator==(const TriHomPoly& o) const noexcept {
  return n_ == o.n_ && c_ == o.c_ && same_field(field_, o.field_);
}

std::string TriHomPoly::render() const {
  std::string out;
  for (const auto& m : monomials()) append_term(out, m.coeff, {{"U", m.i}, {"V", m.j}, {"W", m.k}});
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(Field field, std::size_t n) : field_(std::move(field)), n_(n), m_(n * n, UniPoly(field_)) {}

PolyMatrix PolyMatrix::with_column(std::size_t c, std::span<const UniPoly> column) const {
  if (column.size() != n_ || c >= n_) fail(ErrorCode::InvalidArgument, "column shape mismatch");
  PolyMatrix r = *this;
  for (std::size_t row = 0; row < n_; ++row) {
    require_same_field(field_, column[row].field());
    r.at(row, c) = column[row];
  }
  return r;
}

PolyMatrix PolyMatrix::evaluate(Elem v) const {
  PolyMatrix r(field_, n_);
  for (std::size_t k = 0; k < m_.size(); ++k) r.m_[k] = UniPoly::constant(field_, m_[k].eval(v));
  return r;
}

UniPoly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  const Field& field = m.field();
  if (n == 0) return UniPoly::constant(field, field->one());
  std::vector<UniPoly> a;
  a.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      require_same_field(field, m.at(r, c).field());
      a.push_back(m.at(r, c));
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> UniPoly& { return a[r * n + c]; };
  bool negate = false;
  UniPoly prev = UniPoly::constant(field, field->one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return UniPoly(field);
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        const UniPoly num = at(r, c) * at(k, k) - at(r, k) * at(k, c);
        auto [quot, rem] = divmod(num, prev);
        if (!rem.is_zero()) throw std::logic_error("Bareiss step left a remainder");
        at(r, c) = std::move(quot);
      }
      at(r, k) = UniPoly(field);
    }
    prev = at(k, k);
  }
  UniPoly det = at(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace renitent
