#include "hankel/kernels.hpp"
#include "hankel/rational.hpp"

namespace hankel::kernels::scalar {

void filter_subsets(std::span<const std::uint64_t> labels, std::uint64_t mask, std::vector<std::uint32_t>& out) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if ((labels[i] & ~mask) == 0) out.push_back(static_cast<std::uint32_t>(i));
}

bool any_subset(std::span<const std::uint64_t> sets, std::uint64_t mask) {
  for (std::uint64_t s : sets)
    if ((s & ~mask) == 0) return true;
  return false;
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a) {
  const std::uint64_t p = ModP::modulus;
  const std::uint64_t neg = a == 0 ? 0 : p - a;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = ModP::reduce(y[i] + neg * x[i]);
}

}  // namespace hankel::kernels::scalar
