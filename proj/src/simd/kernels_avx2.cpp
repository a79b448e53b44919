// AVX2 variants. This translation unit is compiled with -mavx2 and only
// entered after the dispatcher has checked the CPU.

#include <immintrin.h>

#include "simd/kernels_internal.hpp"

namespace renitent::simd::detail {
namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load(const Elem* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Elem* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Arithmetic in GF(p), p < 2^16, on eight 32-bit lanes holding residues.
struct PrimeOps {
  __m256i p;
  __m256i p_minus_1;
  __m256d pd;
  __m256d inv_pd;

  explicit PrimeOps(std::uint32_t prime)
      : p(_mm256_set1_epi32(static_cast<int>(prime))),
        p_minus_1(_mm256_set1_epi32(static_cast<int>(prime - 1))),
        pd(_mm256_set1_pd(static_cast<double>(prime))),
        inv_pd(_mm256_set1_pd(1.0 / static_cast<double>(prime))) {}

  __m256i add(__m256i a, __m256i b) const {
    const __m256i s = _mm256_add_epi32(a, b);
    return _mm256_sub_epi32(s, _mm256_and_si256(_mm256_cmpgt_epi32(s, p_minus_1), p));
  }

  __m256i sub(__m256i a, __m256i b) const {
    const __m256i s = _mm256_sub_epi32(a, b);
    return _mm256_add_epi32(s, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), s), p));
  }

  // Products are below 2^32, so they are exact in double precision and the
  // floored quotient is off by at most one.
  __m128i mul_half(__m128i a, __m128i b) const {
    const __m256d prod = _mm256_mul_pd(_mm256_cvtepi32_pd(a), _mm256_cvtepi32_pd(b));
    const __m256d quot = _mm256_floor_pd(_mm256_mul_pd(prod, inv_pd));
    __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(quot, pd));
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), pd));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
    return _mm256_cvtpd_epi32(r);
  }

  __m256i mul(__m256i a, __m256i b) const {
    const __m128i lo = mul_half(_mm256_castsi256_si128(a), _mm256_castsi256_si128(b));
    const __m128i hi = mul_half(_mm256_extracti128_si256(a, 1), _mm256_extracti128_si256(b, 1));
    return _mm256_inserti128_si256(_mm256_castsi128_si256(lo), hi, 1);
  }
};

// Arithmetic in GF(2^e): addition is XOR, multiplication goes through the
// log/antilog tables with gathers.
struct Char2Ops {
  const int* exp;
  const int* log;

  explicit Char2Ops(const FieldCtx& f)
      : exp(reinterpret_cast<const int*>(f.exp_table().data())),
        log(reinterpret_cast<const int*>(f.log_table().data())) {}

  static __m256i add(__m256i a, __m256i b) { return _mm256_xor_si256(a, b); }
  static __m256i sub(__m256i a, __m256i b) { return _mm256_xor_si256(a, b); }

  __m256i mul(__m256i a, __m256i b) const {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i a_zero = _mm256_cmpeq_epi32(a, zero);
    const __m256i b_zero = _mm256_cmpeq_epi32(b, zero);
    // log[0] is a sentinel; gather log[1] = 0 instead and mask afterwards.
    const __m256i la = _mm256_i32gather_epi32(log, _mm256_blendv_epi8(a, one, a_zero), 4);
    const __m256i lb = _mm256_i32gather_epi32(log, _mm256_blendv_epi8(b, one, b_zero), 4);
    const __m256i r = _mm256_i32gather_epi32(exp, _mm256_add_epi32(la, lb), 4);
    return _mm256_andnot_si256(_mm256_or_si256(a_zero, b_zero), r);
  }
};

template <class Ops>
void intercepts_impl(const Ops& ops, std::span<const Elem> xs, std::span<const Elem> ys, Elem slope,
                     std::span<Elem> out) {
  const __m256i s = _mm256_set1_epi32(static_cast<int>(idx(slope)));
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(out.data() + i, ops.sub(load(ys.data() + i), ops.mul(load(xs.data() + i), s)));
  }
  if (i < n) {
    alignas(32) Elem bx[kLanes] = {}, by[kLanes] = {}, bo[kLanes];
    for (std::size_t k = 0; i + k < n; ++k) {
      bx[k] = xs[i + k];
      by[k] = ys[i + k];
    }
    store(bo, ops.sub(load(by), ops.mul(load(bx), s)));
    for (std::size_t k = 0; i + k < n; ++k) out[i + k] = bo[k];
  }
}

template <class Ops>
__m256i horner_block(const Ops& ops, std::span<const Elem> coeffs, __m256i x) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = ops.add(ops.mul(acc, x), _mm256_set1_epi32(static_cast<int>(idx(coeffs[k]))));
  }
  return acc;
}

template <class Ops>
void horner_impl(const Ops& ops, std::span<const Elem> coeffs, std::span<const Elem> points,
                 std::span<Elem> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out.data() + i, horner_block(ops, coeffs, load(points.data() + i)));
  if (i < n) {
    alignas(32) Elem bx[kLanes] = {}, bo[kLanes];
    for (std::size_t k = 0; i + k < n; ++k) bx[k] = points[i + k];
    store(bo, horner_block(ops, coeffs, load(bx)));
    for (std::size_t k = 0; i + k < n; ++k) out[i + k] = bo[k];
  }
}

template <class Ops, class Fn>
void binary_impl(Fn fn, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out,
                 const Ops& ops) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out.data() + i, fn(ops, load(a.data() + i), load(b.data() + i)));
  if (i < n) {
    alignas(32) Elem ba[kLanes] = {}, bb[kLanes] = {}, bo[kLanes];
    for (std::size_t k = 0; i + k < n; ++k) {
      ba[k] = a[i + k];
      bb[k] = b[i + k];
    }
    store(bo, fn(ops, load(ba), load(bb)));
    for (std::size_t k = 0; i + k < n; ++k) out[i + k] = bo[k];
  }
}

}  // namespace

void affine_intercepts_avx2(const FieldCtx& field, std::span<const Elem> xs, std::span<const Elem> ys,
                            Elem slope, std::span<Elem> out) {
  if (field.p() == 2) return intercepts_impl(Char2Ops(field), xs, ys, slope, out);
  if (field.is_prime_field()) return intercepts_impl(PrimeOps(field.p()), xs, ys, slope, out);
  affine_intercepts_scalar(field, xs, ys, slope, out);
}

void horner_avx2(const FieldCtx& field, std::span<const Elem> coeffs, std::span<const Elem> points,
                 std::span<Elem> out) {
  if (field.p() == 2) return horner_impl(Char2Ops(field), coeffs, points, out);
  if (field.is_prime_field()) return horner_impl(PrimeOps(field.p()), coeffs, points, out);
  horner_scalar(field, coeffs, points, out);
}

void mul_avx2(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) {
  auto fn = [](const auto& ops, __m256i x, __m256i y) { return ops.mul(x, y); };
  if (field.p() == 2) return binary_impl(fn, a, b, out, Char2Ops(field));
  if (field.is_prime_field()) return binary_impl(fn, a, b, out, PrimeOps(field.p()));
  mul_scalar(field, a, b, out);
}

void sub_avx2(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) {
  auto fn = [](const auto& ops, __m256i x, __m256i y) { return ops.sub(x, y); };
  if (field.p() == 2) return binary_impl(fn, a, b, out, Char2Ops(field));
  if (field.is_prime_field()) return binary_impl(fn, a, b, out, PrimeOps(field.p()));
  sub_scalar(field, a, b, out);
}

}  // namespace renitent::simd::detail
