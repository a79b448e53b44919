#pragma once

#include "renitent/simd.hpp"

namespace renitent::simd::detail {

void affine_intercepts_scalar(const FieldCtx& field, std::span<const Elem> xs, std::span<const Elem> ys,
                              Elem slope, std::span<Elem> out);
void horner_scalar(const FieldCtx& field, std::span<const Elem> coeffs, std::span<const Elem> points,
                   std::span<Elem> out);
void mul_scalar(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out);
void sub_scalar(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out);

#if defined(RENITENT_BUILD_AVX2)
void affine_intercepts_avx2(const FieldCtx& field, std::span<const Elem> xs, std::span<const Elem> ys,
                            Elem slope, std::span<Elem> out);
void horner_avx2(const FieldCtx& field, std::span<const Elem> coeffs, std::span<const Elem> points,
                 std::span<Elem> out);
void mul_avx2(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out);
void sub_avx2(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out);
#endif

}  // namespace renitent::simd::detail
