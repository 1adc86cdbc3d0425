// Compiled with -mavx2; only reached after a runtime CPU check in dispatch.cpp.
#include <immintrin.h>

#include "invpat/kernels.hpp"

namespace invpat::kernels {
namespace {

inline Mask movemask(__m256i m) { return static_cast<Mask>(_mm256_movemask_epi8(m)); }

void order_masks_avx2(const std::uint8_t* v, std::size_t n, OrderMasks& out) {
  const __m256i word = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
  const Mask keep = full_mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    const __m256i b = _mm256_set1_epi8(static_cast<char>(v[i]));
    out.below[i] = movemask(_mm256_cmpgt_epi8(b, word)) & keep;
    out.above[i] = movemask(_mm256_cmpgt_epi8(word, b)) & keep;
  }
}

Mask threshold_mask_avx2(const std::uint8_t* v, std::size_t n, std::uint8_t threshold) {
  const __m256i word = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
  const __m256i t = _mm256_set1_epi8(static_cast<char>(threshold));
  return ~movemask(_mm256_cmpgt_epi8(word, t)) & full_mask(n);
}

CycleRoles cycle_roles_avx2(const std::uint8_t* v, std::size_t n) {
  const __m256i word = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
  const __m256i idx = _mm256_setr_epi8(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17,
                                       18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32);
  const Mask keep = full_mask(n);
  CycleRoles r;
  r.fixed = movemask(_mm256_cmpeq_epi8(word, idx)) & keep;
  r.openers = movemask(_mm256_cmpgt_epi8(word, idx)) & keep;
  r.closers = keep & ~(r.fixed | r.openers);
  return r;
}

constexpr KernelTable kAvx2{"avx2", order_masks_avx2, threshold_mask_avx2, cycle_roles_avx2};

}  // namespace

namespace detail {
const KernelTable& avx2_table() noexcept { return kAvx2; }
}  // namespace detail

}  // namespace invpat::kernels
