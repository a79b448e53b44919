#pragma once

// Batched field kernels used by the hot loops (intercept bucketing, batch
// polynomial evaluation). A scalar reference set always exists; an AVX2 set
// is compiled when the toolchain allows and is picked at runtime when the
// CPU supports it. The AVX2 set vectorizes prime fields and fields of
// characteristic 2 and hands other fields to the scalar code.
//
// The environment variable RENITENT_SIMD=scalar|avx2 overrides the choice
// made at first use.

#include <span>

#include "renitent/gf.hpp"

namespace renitent::simd {

enum class Backend { Scalar, Avx2 };

struct Kernels {
  Backend backend;
  const char* name;
  /// out[i] = ys[i] - xs[i] * slope
  void (*affine_intercepts)(const FieldCtx& field, std::span<const Elem> xs, std::span<const Elem> ys,
                            Elem slope, std::span<Elem> out);
  /// out[i] = sum_k coeffs[k] * points[i]^k (coefficients constant term first)
  void (*horner)(const FieldCtx& field, std::span<const Elem> coeffs, std::span<const Elem> points,
                 std::span<Elem> out);
  /// out[i] = a[i] * b[i]
  void (*mul)(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out);
  /// out[i] = a[i] - b[i]
  void (*sub)(const FieldCtx& field, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out);
};

const Kernels& scalar_kernels() noexcept;
/// nullptr when not compiled in or not supported by this CPU.
const Kernels* avx2_kernels() noexcept;

/// The kernel set in use.
const Kernels& kernels() noexcept;
Backend active_backend() noexcept;
/// Forces a backend; throws InvalidArgument if it is unavailable.
void set_backend(Backend backend);
const char* backend_name(Backend backend) noexcept;

/// Whether the AVX2 set has a vector path for this field.
bool avx2_vectorizes(const FieldCtx& field) noexcept;

}  // namespace renitent::simd
