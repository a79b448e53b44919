#include "renitent/gf.hpp"

#include <algorithm>
#include <sstream>

namespace renitent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::NotADirection: return "NotADirection";
    case ErrorCode::LineAtInfinity: return "LineAtInfinity";
    case ErrorCode::FewerThanTwoLines: return "FewerThanTwoLines";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::KMaxTooLarge: return "KMaxTooLarge";
    case ErrorCode::LambdaTooLarge: return "LambdaTooLarge";
    case ErrorCode::CZero: return "CZero";
    case ErrorCode::ZeroDifference: return "ZeroDifference";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::VerticalDirectionPresent: return "VerticalDirectionPresent";
    case ErrorCode::LambdaCapExceeded: return "LambdaCapExceeded";
    case ErrorCode::TotalSizeDivisibleByP: return "TotalSizeDivisibleByP";
    case ErrorCode::InconsistentLambda: return "InconsistentLambda";
    case ErrorCode::InsufficientPowerSums: return "InsufficientPowerSums";
    case ErrorCode::TooManyDirections: return "TooManyDirections";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::NoSharpDirection: return "NoSharpDirection";
    case ErrorCode::BadLeadingCoefficient: return "BadLeadingCoefficient";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::CollineationFailure: return "CollineationFailure";
    case ErrorCode::LambdaGEp: return "LambdaGEp";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::NotEvenCharacteristic: return "NotEvenCharacteristic";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

namespace {

// Dense polynomials over GF(p) with small coefficients, constant term first.
using SmallPoly = std::vector<std::uint32_t>;

void trim(SmallPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    std::int64_t r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  std::int64_t r = s0 % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Returns (quotient, remainder) of f / g, g nonzero and trimmed.
std::pair<SmallPoly, SmallPoly> poly_divmod(SmallPoly f, const SmallPoly& g, std::uint32_t p) {
  trim(f);
  SmallPoly quot;
  if (f.size() < g.size()) return {quot, f};
  const std::uint64_t lead_inv = inv_mod_p(g.back(), p);
  quot.assign(f.size() - g.size() + 1, 0);
  for (std::size_t i = f.size(); i-- >= g.size();) {
    const std::uint64_t coef = f[i] * lead_inv % p;
    const std::size_t shift = i + 1 - g.size();
    quot[shift] = static_cast<std::uint32_t>(coef);
    if (coef != 0) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        const std::uint64_t sub = coef * g[j] % p;
        f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + p - sub) % p);
      }
    }
    if (i == 0) break;
  }
  trim(f);
  trim(quot);
  return {quot, f};
}

SmallPoly poly_mul(const SmallPoly& f, const SmallPoly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  SmallPoly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{f[i]} * g[j]) % p);
    }
  }
  trim(out);
  return out;
}

SmallPoly poly_sub(SmallPoly f, const SmallPoly& g, std::uint32_t p) {
  if (f.size() < g.size()) f.resize(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = (f[i] + p - g[i]) % p;
  trim(f);
  return f;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic_poly, std::uint32_t p) {
  SmallPoly f(monic_poly.begin(), monic_poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      SmallPoly divisor(k + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[k] = 1;
      if (poly_divmod(f, divisor, p).second.empty()) return false;
    }
  }
  return true;
}

Field FieldCtx::create(std::uint32_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) fail(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      fail(ErrorCode::InvalidArgument, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
  }
  bool is_default = !modulus.has_value();
  std::vector<std::uint32_t> m;
  if (modulus) {
    m = *modulus;
    if (m.size() != e + 1 || m.back() != 1) {
      fail(ErrorCode::DegreeMismatch, "modulus must be monic of degree " + std::to_string(e));
    }
    for (auto c : m) {
      if (c >= p) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible_mod_p(m, p)) fail(ErrorCode::ReducibleModulus, "modulus is reducible over GF(p)");
  } else {
    const std::uint64_t count = q;  // p^e choices for the lower coefficients
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> cand(e + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < e; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      cand[e] = 1;
      if (is_irreducible_mod_p(cand, p)) {
        m = std::move(cand);
        break;
      }
    }
  }
  // The explicit modulus may coincide with the default one.
  if (!is_default) {
    auto dflt = FieldCtx::create(p, e);
    is_default = dflt->modulus() == m;
  }
  return Field(new FieldCtx(p, e, std::move(m), is_default));
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus, bool default_modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)), default_modulus_(default_modulus) {
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;
  build_tables();
}

void FieldCtx::build_tables() {
  const std::uint32_t order = q_ - 1;
  auto pow_residue = [this](Elem a, std::uint64_t k) {
    Elem r = one();
    while (k) {
      if (k & 1) r = mul_residue(r, a);
      a = mul_residue(a, a);
      k >>= 1;
    }
    return r;
  };
  Elem gen = one();
  if (order > 1) {
    const auto factors = prime_factors(order);
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
      bool primitive = true;
      for (auto r : factors) {
        if (pow_residue(Elem{cand}, order / r) == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = Elem{cand};
        break;
      }
    }
  }
  exp_.assign(2 * std::size_t{order}, 0);
  log_.assign(q_, kNoLog);
  Elem x = one();
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = idx(x);
    exp_[k + order] = idx(x);
    log_[idx(x)] = k;
    x = mul_residue(x, gen);
  }
  if (p_ != 2) neg_one_log_ = order / 2;
  if (p_ != 2 && e_ > 1) {
    zech_.assign(order, kNoLog);
    for (std::uint32_t n = 0; n < order; ++n) {
      const Elem v = add_digits(one(), Elem{exp_[n]});
      zech_[n] = idx(v) == 0 ? kNoLog : log_[idx(v)];
    }
  }
}

Elem FieldCtx::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::elem(std::uint64_t index) const {
  if (index >= q_) {
    fail(ErrorCode::InvalidArgument,
         "element index " + std::to_string(index) + " out of range for GF(" + std::to_string(q_) + ")");
  }
  return Elem{static_cast<std::uint32_t>(index)};
}

Elem FieldCtx::add_digits(Elem a, Elem b) const noexcept {
  std::uint32_t x = idx(a), y = idx(b), out = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem FieldCtx::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return Elem{idx(a) ^ idx(b)};
  if (e_ == 1) {
    const std::uint32_t s = idx(a) + idx(b);
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (idx(a) == 0) return b;
  if (idx(b) == 0) return a;
  const std::uint32_t order = q_ - 1;
  const std::uint32_t la = log_[idx(a)], lb = log_[idx(b)];
  const std::uint32_t n = lb >= la ? lb - la : lb + order - la;
  const std::uint32_t z = zech_[n];
  if (z == kNoLog) return zero();
  return Elem{exp_[la + z]};
}

Elem FieldCtx::neg(Elem a) const noexcept {
  if (p_ == 2 || idx(a) == 0) return a;
  if (e_ == 1) return Elem{p_ - idx(a)};
  return Elem{exp_[log_[idx(a)] + neg_one_log_]};
}

Elem FieldCtx::sub(Elem a, Elem b) const noexcept {
  if (p_ == 2) return Elem{idx(a) ^ idx(b)};
  if (e_ == 1) return Elem{idx(a) >= idx(b) ? idx(a) - idx(b) : idx(a) + p_ - idx(b)};
  return add(a, neg(b));
}

Elem FieldCtx::mul(Elem a, Elem b) const noexcept {
  if (idx(a) == 0 || idx(b) == 0) return zero();
  return Elem{exp_[log_[idx(a)] + log_[idx(b)]]};
}

Elem FieldCtx::inv(Elem a) const {
  if (idx(a) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (e_ == 1) return Elem{inv_mod_p(idx(a), p_)};
  SmallPoly r0 = modulus_, r1 = digits(a);
  trim(r1);
  SmallPoly s0, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1, p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    SmallPoly s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale = inv_mod_p(r0[0], p_);
  for (auto& c : s0) c = static_cast<std::uint32_t>(c * scale % p_);
  s0.resize(e_, 0);
  return from_digits(s0);
}

Elem FieldCtx::div(Elem a, Elem b) const {
  if (idx(b) == 0) fail(ErrorCode::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem FieldCtx::pow(Elem a, std::uint64_t k) const noexcept {
  Elem r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem FieldCtx::trace(Elem a) const noexcept {
  Elem sum = zero();
  Elem x = a;
  for (unsigned i = 0; i < e_; ++i) {
    sum = add(sum, x);
    x = pow(x, p_);
  }
  return sum;
}

std::vector<Elem> FieldCtx::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
  return out;
}

std::vector<std::uint32_t> FieldCtx::digits(Elem a) const {
  std::vector<std::uint32_t> d(e_, 0);
  std::uint32_t x = idx(a);
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > e_) fail(ErrorCode::InvalidArgument, "too many digits");
  std::uint32_t out = 0, place = 1;
  for (auto d : digits) {
    if (d >= p_) fail(ErrorCode::InvalidArgument, "digit out of range");
    out += d * place;
    place *= p_;
  }
  return Elem{out};
}

Elem FieldCtx::mul_residue(Elem a, Elem b) const {
  SmallPoly prod = poly_mul(digits(a), digits(b), p_);
  if (prod.size() > e_) prod = poly_divmod(prod, modulus_, p_).second;
  prod.resize(e_, 0);
  return from_digits(prod);
}

std::string FieldCtx::spec_string() const {
  std::ostringstream os;
  os << p_;
  if (e_ > 1) os << '^' << e_;
  if (!default_modulus_) {
    os << ":m=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  }
  return os.str();
}

bool same_field(const Field& a, const Field& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_field(const Field& a, const Field& b) {
  if (!same_field(a, b)) fail(ErrorCode::FieldMismatch, "operands belong to different fields");
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
  if (!field_->contains(value_)) fail(ErrorCode::InvalidArgument, "element out of range");
}

FieldElement::FieldElement(Field field, std::uint64_t index)
    : FieldElement(field, field ? field->elem(index) : Elem{0}) {}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->div(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }

}  // namespace renitent
