// SSE2 is part of the x86-64 baseline, so no target attribute is needed.
#include <emmintrin.h>

#include "invpat/kernels.hpp"

namespace invpat::kernels {
namespace {

// Values are <= 32, so signed byte compares are exact.
inline Mask movemask2(__m128i lo, __m128i hi) {
  return static_cast<Mask>(_mm_movemask_epi8(lo)) |
         (static_cast<Mask>(_mm_movemask_epi8(hi)) << 16);
}

void order_masks_sse2(const std::uint8_t* v, std::size_t n, OrderMasks& out) {
  const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v));
  const __m128i hi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + 16));
  const Mask keep = full_mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    const __m128i b = _mm_set1_epi8(static_cast<char>(v[i]));
    out.below[i] = movemask2(_mm_cmpgt_epi8(b, lo), _mm_cmpgt_epi8(b, hi)) & keep;
    out.above[i] = movemask2(_mm_cmpgt_epi8(lo, b), _mm_cmpgt_epi8(hi, b)) & keep;
  }
}

Mask threshold_mask_sse2(const std::uint8_t* v, std::size_t n, std::uint8_t threshold) {
  const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v));
  const __m128i hi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + 16));
  const __m128i t = _mm_set1_epi8(static_cast<char>(threshold));
  return ~movemask2(_mm_cmpgt_epi8(lo, t), _mm_cmpgt_epi8(hi, t)) & full_mask(n);
}

CycleRoles cycle_roles_sse2(const std::uint8_t* v, std::size_t n) {
  const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v));
  const __m128i hi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + 16));
  const __m128i idx_lo = _mm_setr_epi8(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16);
  const __m128i idx_hi = _mm_add_epi8(idx_lo, _mm_set1_epi8(16));
  const Mask keep = full_mask(n);
  CycleRoles r;
  r.fixed = movemask2(_mm_cmpeq_epi8(lo, idx_lo), _mm_cmpeq_epi8(hi, idx_hi)) & keep;
  r.openers = movemask2(_mm_cmpgt_epi8(lo, idx_lo), _mm_cmpgt_epi8(hi, idx_hi)) & keep;
  r.closers = keep & ~(r.fixed | r.openers);
  return r;
}

constexpr KernelTable kSse2{"sse2", order_masks_sse2, threshold_mask_sse2, cycle_roles_sse2};

}  // namespace

namespace detail {
const KernelTable& sse2_table() noexcept { return kSse2; }
}  // namespace detail

}  // namespace invpat::kernels
