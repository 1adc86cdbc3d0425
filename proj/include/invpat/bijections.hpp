#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invpat/paths.hpp"
#include "invpat/permutation.hpp"

namespace invpat {

// ---- I(12) and permutational matchings -------------------------------------

/// tau in I_n(12) has the form s^-1 (-) s or s^-1 (-) 1 (-) s; returns s, read
/// off as s(k) = tau(ceil(n/2) + k). Throws InvalidInput if tau is not of that form.
Permutation f_map(const Permutation& tau);
/// Inverse of f_map; `odd` selects the size 2k+1 form with a central fixed point.
Permutation f_inv(const Permutation& sigma, bool odd);

// ---- fixed points ----------------------------------------------------------

struct FixedPointSplit {
  Permutation matching;     // standardized fixed-point-free part
  std::uint32_t fixed = 0;  // bit i-1 set iff i is a fixed point of the original
  std::size_t size = 0;     // size of the original involution
};

FixedPointSplit remove_fixed_points(const Permutation& tau);
/// Throws InvalidInput unless popcount(fixed) + |rho| == n and fixed lies inside [n].
Permutation insert_fixed_points(const Permutation& rho, std::uint32_t fixed, std::size_t n);

// ---- increasing binary trees -----------------------------------------------

/// Vertices are 1..n; left[v], right[v] are child vertices or 0.
struct IncreasingBinaryTree {
  std::size_t n = 0;
  int root = 0;
  std::vector<int> left, right;  // indexed by vertex, entry 0 unused
  friend bool operator==(const IncreasingBinaryTree&, const IncreasingBinaryTree&) = default;
};

/// Root is the minimum; left and right subtrees come from the words before and after it.
IncreasingBinaryTree tree_from_permutation(const Permutation& sigma);
/// In-order reading of the vertex labels.
Permutation permutation_from_tree(const IncreasingBinaryTree& t);
/// Insert vertices 1..n in order; step i records the children of vertex i and the
/// label the 1-based slot (left to right) that vertex i occupied.
LaguerreHistory history_from_tree(const IncreasingBinaryTree& t);
IncreasingBinaryTree tree_from_history(const LaguerreHistory& h);

/// S_{n+1} -> LH_n, through the increasing binary tree.
LaguerreHistory chi(const Permutation& sigma);
Permutation chi_inv(const LaguerreHistory& h);

/// DP'_{n+1} -> LH_n by reading steps 2i, 2i+1 as one history step.
LaguerreHistory phi(const LabeledDyckPath& p);
LabeledDyckPath phi_inv(const LaguerreHistory& h);

// ---- André paths -----------------------------------------------------------

struct PsiImage {
  WeakComposition composition;  // k+1 parts: leading L's, then the L-block after each Dyck step 2i
  LabeledDyckPath dyck;         // half-length k
};

PsiImage psi(const AndrePath& a);
AndrePath psi_inv(const WeakComposition& y, const LabeledDyckPath& dyck);

/// I_n(132) -> AP_n; the number of L steps equals the number of fixed points.
/// Throws InvalidInput if tau is not an involution or I-contains 132.
AndrePath omega(const Permutation& tau);
Permutation omega_inv(const AndrePath& a);

}  // namespace invpat
