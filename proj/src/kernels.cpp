#include "hankel/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace hankel::kernels {

namespace {

Isa detect() {
  const char* env = std::getenv("HANKEL_ISA");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_supported() {
#if defined(HANKEL_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_supported()) isa = Isa::scalar;
  current().store(isa, std::memory_order_relaxed);
}

const char* to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void filter_subsets(std::span<const std::uint64_t> labels, std::uint64_t mask, std::vector<std::uint32_t>& out) {
  if (active_isa() == Isa::avx2) avx2::filter_subsets(labels, mask, out);
  else scalar::filter_subsets(labels, mask, out);
}

bool any_subset(std::span<const std::uint64_t> sets, std::uint64_t mask) {
  return active_isa() == Isa::avx2 ? avx2::any_subset(sets, mask) : scalar::any_subset(sets, mask);
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a) {
  if (active_isa() == Isa::avx2) avx2::axpy_mod(y, x, a);
  else scalar::axpy_mod(y, x, a);
}

}  // namespace hankel::kernels
