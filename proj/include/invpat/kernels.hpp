#pragma once

// Data-parallel bitmask kernels over a one-line word of at most 32 entries.
//
// Every kernel reads the zero-padded 32-byte block held by Permutation and
// produces position bitmasks (bit j = position j+1). The scalar variant is the
// reference; vector variants must agree with it bit for bit.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace invpat::kernels {

using Mask = std::uint32_t;

/// below[i] = {j : v[j] < v[i]}, above[i] = {j : v[j] > v[i]}, for i < n.
struct OrderMasks {
  std::array<Mask, 32> below{};
  std::array<Mask, 32> above{};
};

/// Positions of fixed points (v[j] == j+1), openers (v[j] > j+1) and closers.
struct CycleRoles {
  Mask fixed = 0;
  Mask openers = 0;
  Mask closers = 0;
};

struct KernelTable {
  std::string_view name;
  void (*order_masks)(const std::uint8_t* padded, std::size_t n, OrderMasks& out);
  /// {j < n : v[j] <= threshold}
  Mask (*threshold_mask)(const std::uint8_t* padded, std::size_t n, std::uint8_t threshold);
  CycleRoles (*cycle_roles)(const std::uint8_t* padded, std::size_t n);
};

inline constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the variant was not compiled in or the CPU lacks the extension.
const KernelTable* sse2_kernels() noexcept;
const KernelTable* avx2_kernels() noexcept;

/// All variants usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Widest supported variant, unless INVPAT_SIMD=scalar|sse2|avx2 says otherwise.
const KernelTable& active() noexcept;

/// Overrides the active variant. Returns false if `name` is unavailable.
/// Not synchronized with concurrent kernel use.
bool select(std::string_view name);

}  // namespace invpat::kernels
