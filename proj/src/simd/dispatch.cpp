#include <atomic>
#include <cstdlib>
#include <string_view>

#include "simd/kernels_internal.hpp"

namespace renitent::simd {
namespace {

const Kernels kScalar{Backend::Scalar, "scalar", detail::affine_intercepts_scalar, detail::horner_scalar,
                      detail::mul_scalar, detail::sub_scalar};

#if defined(RENITENT_BUILD_AVX2)
const Kernels kAvx2{Backend::Avx2, "avx2", detail::affine_intercepts_avx2, detail::horner_avx2,
                    detail::mul_avx2, detail::sub_avx2};

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const Kernels* select_initial() noexcept {
  const char* env = std::getenv("RENITENT_SIMD");
  const Kernels* avx2 = avx2_kernels();
  if (env && std::string_view(env) == "scalar") return &kScalar;
  return avx2 ? avx2 : &kScalar;
}

std::atomic<const Kernels*>& current() noexcept {
  static std::atomic<const Kernels*> active{select_initial()};
  return active;
}

}  // namespace

const Kernels& scalar_kernels() noexcept { return kScalar; }

const Kernels* avx2_kernels() noexcept {
#if defined(RENITENT_BUILD_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& kernels() noexcept { return *current().load(std::memory_order_acquire); }

Backend active_backend() noexcept { return kernels().backend; }

void set_backend(Backend backend) {
  if (backend == Backend::Scalar) {
    current().store(&kScalar, std::memory_order_release);
    return;
  }
  const Kernels* avx2 = avx2_kernels();
  if (!avx2) fail(ErrorCode::InvalidArgument, "AVX2 kernels are not available on this build or CPU");
  current().store(avx2, std::memory_order_release);
}

const char* backend_name(Backend backend) noexcept { return backend == Backend::Scalar ? "scalar" : "avx2"; }

bool avx2_vectorizes(const FieldCtx& field) noexcept { return field.p() == 2 || field.is_prime_field(); }

}  // namespace renitent::simd
