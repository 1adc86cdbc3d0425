#include "invpat/kernels.hpp"

namespace invpat::kernels {
namespace {

void order_masks_scalar(const std::uint8_t* v, std::size_t n, OrderMasks& out) {
  for (std::size_t i = 0; i < n; ++i) {
    Mask below = 0, above = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] < v[i]) below |= Mask{1} << j;
      if (v[j] > v[i]) above |= Mask{1} << j;
    }
    out.below[i] = below;
    out.above[i] = above;
  }
}

Mask threshold_mask_scalar(const std::uint8_t* v, std::size_t n, std::uint8_t threshold) {
  Mask m = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (v[j] <= threshold) m |= Mask{1} << j;
  return m;
}

CycleRoles cycle_roles_scalar(const std::uint8_t* v, std::size_t n) {
  CycleRoles r;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t pos = j + 1;
    if (v[j] == pos) r.fixed |= Mask{1} << j;
    else if (v[j] > pos) r.openers |= Mask{1} << j;
    else r.closers |= Mask{1} << j;
  }
  return r;
}

constexpr KernelTable kScalar{"scalar", order_masks_scalar, threshold_mask_scalar, cycle_roles_scalar};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace invpat::kernels
