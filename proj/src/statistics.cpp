#include "invpat/statistics.hpp"

#include <bit>

#include "invpat/kernels.hpp"

namespace invpat {
namespace {

using kernels::Mask;

// after(i) for 1-indexed i: positions j > i.
Mask after(std::size_t i, std::size_t n) { return kernels::full_mask(n) & ~kernels::full_mask(i); }

// Bitmask of the visible inversions (i, j) for fixed i; `strict` selects tau(j) < i.
std::vector<Mask> visible_rows(const Permutation& p, bool strict) {
  const std::size_t n = p.size();
  const auto& k = kernels::active();
  kernels::OrderMasks order;
  k.order_masks(p.storage().data(), n, order);
  std::vector<Mask> rows(n > 0 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto t = static_cast<std::uint8_t>(strict ? i - 1 : i);
    rows[i - 1] = after(i, n) & k.threshold_mask(p.storage().data(), n, t) & order.below[i - 1];
  }
  return rows;
}

std::vector<int> code_from_rows(const std::vector<Mask>& rows) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (Mask m : rows) out.push_back(std::popcount(m));
  return out;
}

std::vector<int> descents_from_rows(const std::vector<Mask>& rows) {
  std::vector<int> out;
  for (std::size_t i = 1; i <= rows.size(); ++i)
    if (rows[i - 1] & (Mask{1} << i)) out.push_back(static_cast<int>(i));  // j = i+1
  return out;
}

}  // namespace

std::vector<int> involution_code(const Involution& tau) {
  return code_from_rows(visible_rows(tau.perm(), false));
}

std::vector<int> fpf_code(const FpfInvolution& rho) {
  return code_from_rows(visible_rows(rho.perm(), true));
}

std::vector<int> visible_descents(const Involution& tau) {
  return descents_from_rows(visible_rows(tau.perm(), false));
}

std::vector<int> fpf_visible_descents(const FpfInvolution& rho) {
  return descents_from_rows(visible_rows(rho.perm(), true));
}

bool satisfies_21s43(const Involution& tau) {
  const Mask fixed = tau.fixed_point_mask();
  std::vector<Cycle> two;
  for (const Cycle& c : tau.cycles())
    if (!c.is_fixed_point()) two.push_back(c);
  for (const Cycle& x : two) {
    for (const Cycle& y : two) {
      if (x.second >= y.first) continue;
      // Fixed points in [b, c] = positions b..c, bits b-1..c-1.
      const Mask window = kernels::full_mask(static_cast<std::size_t>(y.first)) &
                          ~kernels::full_mask(static_cast<std::size_t>(x.second - 1));
      if (std::popcount(fixed & window) % 2 == 0) return false;
    }
  }
  return true;
}

LrMinima lr_minima(const Involution& tau) {
  LrMinima out;
  const auto cycles = tau.cycles();
  // (a,b) has a cycle to its left iff some cycle ends before a.
  int min_end = 1 << 30;
  for (const Cycle& c : cycles) min_end = std::min(min_end, c.second);
  Mask in_i = 0;
  for (const Cycle& c : cycles) {
    if (min_end < c.first) continue;
    out.cycles.push_back(c);
    in_i |= Mask{1} << (c.first - 1);
    in_i |= Mask{1} << (c.second - 1);
  }
  for (std::size_t i = 0; i < tau.size(); ++i)
    if (in_i & (Mask{1} << i)) out.positions.push_back(static_cast<int>(i + 1));
  return out;
}

}  // namespace invpat
