#include "simd/kernels_internal.hpp"

namespace renitent::simd::detail {

void affine_intercepts_scalar(const FieldCtx& field, std::span<const Elem> xs, std::span<const Elem> ys,
                              Elem slope, std::span<Elem> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.sub(ys[i], field.mul(xs[i], slope));
}

void horner_scalar(const FieldCtx& field, std::span<const Elem> coeffs, std::span<const Elem> points,
                   std::span<Elem> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    Elem acc = field.zero();
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = field.add(field.mul(acc, points[i]), coeffs[k]);
    out[i] = acc;
  }
}

void mul_scalar(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.mul(a[i], b[i]);
}

void sub_scalar(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.sub(a[i], b[i]);
}

}  // namespace renitent::simd::detail
