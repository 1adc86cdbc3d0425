#pragma once

#include <cstdint>
#include <vector>

#include "invpat/involution.hpp"

namespace invpat {

/// c_i(tau) = #{j : tau(j) <= i < j, tau(i) > tau(j)} for i = 1..n-1.
std::vector<int> involution_code(const Involution& tau);
/// Same with the strict condition rho(j) < i.
std::vector<int> fpf_code(const FpfInvolution& rho);

/// i in [n-1] such that (i, i+1) is a visible (resp. FPF-visible) inversion.
std::vector<int> visible_descents(const Involution& tau);
std::vector<int> fpf_visible_descents(const FpfInvolution& rho);

/// For every pair of 2-cycles (a,b), (c,d) with a < b < c < d, the number of fixed
/// points in the closed interval [b, c] is odd.
bool satisfies_21s43(const Involution& tau);

struct LrMinima {
  std::vector<Cycle> cycles;   // cycles with no cycle entirely to their left
  std::vector<int> positions;  // union of their endpoints, sorted
};
LrMinima lr_minima(const Involution& tau);

/// Number of k-cycles (k = 1 or 2).
inline std::size_t cycle_count(const Involution& tau, int k) {
  return k == 1 ? tau.fixed_point_count() : tau.two_cycle_count();
}

}  // namespace invpat
