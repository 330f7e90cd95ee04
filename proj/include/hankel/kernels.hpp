#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hankel::kernels {

enum class Isa { scalar, avx2 };

// Best available ISA, overridable with HANKEL_ISA=scalar.
Isa active_isa();
void force_isa(Isa isa);
bool avx2_supported();
const char* to_string(Isa isa);

// Appends every i with (labels[i] & ~mask) == 0.
void filter_subsets(std::span<const std::uint64_t> labels, std::uint64_t mask, std::vector<std::uint32_t>& out);
// True iff some set is contained in mask.
bool any_subset(std::span<const std::uint64_t> sets, std::uint64_t mask);
// y <- y - a*x over Z/(2^31 - 1); entries are reduced residues.
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a);

namespace scalar {
void filter_subsets(std::span<const std::uint64_t> labels, std::uint64_t mask, std::vector<std::uint32_t>& out);
bool any_subset(std::span<const std::uint64_t> sets, std::uint64_t mask);
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a);
}  // namespace scalar

namespace avx2 {
void filter_subsets(std::span<const std::uint64_t> labels, std::uint64_t mask, std::vector<std::uint32_t>& out);
bool any_subset(std::span<const std::uint64_t> sets, std::uint64_t mask);
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a);
}  // namespace avx2

}  // namespace hankel::kernels
