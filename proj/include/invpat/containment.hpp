#pragma once

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invpat/involution.hpp"
#include "invpat/kernels.hpp"

namespace invpat {

/// Classical subsequence containment, or one of the deletion orders on involutions:
/// I (all three relations), IPrime (2-cycle and fixed point deletion), F (2-cycle
/// deletion on fixed-point-free involutions).
enum class Mode { Classical, I, IPrime, F };

Mode parse_mode(std::string_view text);
std::string_view to_string(Mode m) noexcept;

/// Throws ModeMismatch unless `p` is a valid element for `m`.
void require_valid(const Permutation& p, Mode m);
bool is_valid_for(const Permutation& p, Mode m) noexcept;

// ---- classical containment -------------------------------------------------

/// Order masks of a text permutation, computed once and reused across patterns.
struct TextIndex {
  explicit TextIndex(const Permutation& text);
  Permutation text;
  kernels::OrderMasks order;
};

/// A pattern preprocessed for left-to-right matching: for each pattern position the
/// earlier positions holding its nearest smaller and larger values.
class ClassicalPlan {
 public:
  explicit ClassicalPlan(const Permutation& pattern);
  const Permutation& pattern() const noexcept { return pattern_; }
  bool matches(const TextIndex& text) const;
  /// 1-indexed text positions of the first occurrence in lexicographic position order.
  std::optional<std::vector<int>> find(const TextIndex& text) const;

 private:
  bool search(const TextIndex& t, std::size_t p, std::size_t last, std::array<std::uint8_t, 32>& at) const;

  Permutation pattern_;
  std::array<std::int8_t, 32> lo_{};  // -1 when no earlier smaller value
  std::array<std::int8_t, 32> hi_{};  // -1 when no earlier larger value
};

bool contains_classical(const Permutation& text, const Permutation& pattern);
std::optional<std::vector<int>> find_occurrence(const Permutation& text, const Permutation& pattern);

// ---- deletion relations ----------------------------------------------------

/// Relation (1): remove the 2-cycle through position `a` and standardize.
Involution delete_two_cycle(const Involution& tau, int a);
/// Relation (2): remove fixed point `a` and standardize.
Involution delete_fixed_point(const Involution& tau, int a);
/// Relation (3): (a, a+1) must be a 2-cycle; delete one of its entries.
Involution collapse_adjacent_cycle(const Involution& tau, int a);

/// All results of one applicable relation, sorted and duplicate-free.
std::vector<Involution> one_step_down(const Involution& tau, Mode mode);

/// Reference containment: breadth-first search down the deletion relations,
/// pruned below |rho|. Classical mode falls through to subsequence containment.
bool contains(const Permutation& tau, const Permutation& rho, Mode mode);

/// Memoized down-sets for repeated queries against many (tau, rho) pairs.
/// Not thread-safe; use one instance per thread.
class DeletionClosure {
 public:
  explicit DeletionClosure(Mode mode);
  Mode mode() const noexcept { return mode_; }
  /// Every involution reachable from tau (tau included), sorted.
  const std::vector<Permutation>& down_set(const Permutation& tau);
  bool contains(const Permutation& tau, const Permutation& rho);
  std::size_t cached() const noexcept { return memo_.size(); }

 private:
  Mode mode_;
  std::unordered_map<Permutation, std::vector<Permutation>> memo_;
};

// ---- embedding search ------------------------------------------------------

/// Cycle-role masks of an involution text, computed once.
struct InvolutionIndex {
  explicit InvolutionIndex(const Permutation& tau);
  Permutation tau;
  kernels::Mask fixed = 0;
  kernels::Mask openers = 0;
};

/// Direct embedding test equivalent to `contains` in the I, IPrime and F orders.
///
/// rho is matched left to right. A 2-cycle of rho goes to a kept 2-cycle of tau; a
/// fixed point goes to a fixed point of tau or, in I mode, to a 2-cycle (a,b) of tau
/// collapsed to a point, in which case nothing else may be kept inside [a,b].
class EmbeddingPlan {
 public:
  EmbeddingPlan(const Permutation& rho, Mode mode);
  const Permutation& pattern() const noexcept { return rho_; }
  Mode mode() const noexcept { return mode_; }
  bool matches(const InvolutionIndex& tau) const;

 private:
  enum class Role : std::uint8_t { Fixed, Opener, Closer };
  bool search(const InvolutionIndex& t, std::size_t p, std::size_t last, kernels::Mask pending,
              std::array<std::uint8_t, 32>& at) const;

  Permutation rho_;
  Mode mode_;
  std::array<Role, 32> role_{};
  std::array<std::uint8_t, 32> partner_{};  // rho(p), 1-indexed
};

bool contains_fast(const Permutation& tau, const Permutation& rho, Mode mode);

}  // namespace invpat
