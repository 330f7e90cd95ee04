#include "hankel/kernels.hpp"

#if defined(HANKEL_HAVE_AVX2)
#include <immintrin.h>

#include "hankel/rational.hpp"

namespace hankel::kernels::avx2 {

void filter_subsets(std::span<const std::uint64_t> labels, std::uint64_t mask, std::vector<std::uint32_t>& out) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= labels.size(); i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(labels.data() + i));
    __m256i outside = _mm256_andnot_si256(m, v);
    int bits = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(outside, zero)));
    while (bits) {
      int b = __builtin_ctz(static_cast<unsigned>(bits));
      out.push_back(static_cast<std::uint32_t>(i + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  for (; i < labels.size(); ++i)
    if ((labels[i] & ~mask) == 0) out.push_back(static_cast<std::uint32_t>(i));
}

bool any_subset(std::span<const std::uint64_t> sets, std::uint64_t mask) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= sets.size(); i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets.data() + i));
    if (_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_andnot_si256(m, v), zero)))) return true;
  }
  for (; i < sets.size(); ++i)
    if ((sets[i] & ~mask) == 0) return true;
  return false;
}

namespace {

// Mersenne folding of 64-bit lanes holding values below 2^62 + 2^31.
inline __m256i fold(__m256i v, __m256i p) {
  v = _mm256_add_epi64(_mm256_and_si256(v, p), _mm256_srli_epi64(v, 31));
  v = _mm256_add_epi64(_mm256_and_si256(v, p), _mm256_srli_epi64(v, 31));
  __m256i ge = _mm256_cmpgt_epi64(v, _mm256_sub_epi64(p, _mm256_set1_epi64x(1)));
  return _mm256_sub_epi64(v, _mm256_and_si256(ge, p));
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a) {
  const std::uint32_t neg = a == 0 ? 0 : ModP::modulus - a;
  const __m256i p = _mm256_set1_epi64x(ModP::modulus);
  const __m256i na = _mm256_set1_epi64x(neg);
  const __m256i pack = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
  std::size_t i = 0;
  for (; i + 4 <= y.size(); i += 4) {
    __m256i xv = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + i)));
    __m256i yv = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y.data() + i)));
    __m256i r = fold(_mm256_add_epi64(yv, _mm256_mul_epu32(xv, na)), p);
    __m256i packed = _mm256_permutevar8x32_epi32(r, pack);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y.data() + i), _mm256_castsi256_si128(packed));
  }
  for (; i < y.size(); ++i) y[i] = ModP::reduce(y[i] + std::uint64_t{neg} * x[i]);
}

}  // namespace hankel::kernels::avx2

#else

namespace hankel::kernels::avx2 {

void filter_subsets(std::span<const std::uint64_t> labels, std::uint64_t mask, std::vector<std::uint32_t>& out) {
  scalar::filter_subsets(labels, mask, out);
}
bool any_subset(std::span<const std::uint64_t> sets, std::uint64_t mask) { return scalar::any_subset(sets, mask); }
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a) { scalar::axpy_mod(y, x, a); }

}  // namespace hankel::kernels::avx2

#endif
