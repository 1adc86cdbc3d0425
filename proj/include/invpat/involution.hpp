#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invpat/permutation.hpp"

namespace invpat {

/// One cycle of an involution, stored as (a, b) with a <= b; a == b is a fixed point.
struct Cycle {
  int first = 0;
  int second = 0;

  bool is_fixed_point() const noexcept { return first == second; }
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// A permutation equal to its own inverse.
class Involution {
 public:
  Involution() = default;
  /// Throws InvalidInput unless `p` is an involution.
  explicit Involution(Permutation p);

  /// Accepts one-line notation or cycle notation, e.g. "(12)(36)(4)(57)(8)" or
  /// "(1,12)(3,3)". In cycle form the size is the largest entry mentioned.
  static Involution parse(std::string_view text);

  const Permutation& perm() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }
  int operator()(std::size_t i) const noexcept { return perm_(i); }

  /// Cyc(tau), sorted by first entry.
  std::vector<Cycle> cycles() const;
  std::vector<int> fixed_points() const;
  std::size_t fixed_point_count() const noexcept;
  std::size_t two_cycle_count() const noexcept { return (size() - fixed_point_count()) / 2; }
  bool is_fixed_point_free() const noexcept { return fixed_point_count() == 0; }

  /// Bitmasks over positions (bit i-1 = position i).
  std::uint32_t fixed_point_mask() const noexcept;
  std::uint32_t opener_mask() const noexcept;  // positions a with tau(a) > a

  /// "(12)(36)(4)(57)(8)" for n <= 9, "(1,12)(3,3)..." otherwise.
  std::string to_cycle_string() const;
  std::string to_string() const { return perm_.to_string(); }

  friend auto operator<=>(const Involution&, const Involution&) = default;
  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  Permutation perm_;
};

/// An involution with no fixed points (a perfect matching of [2m]).
class FpfInvolution {
 public:
  FpfInvolution() = default;
  explicit FpfInvolution(Permutation p);
  explicit FpfInvolution(Involution inv);
  static FpfInvolution parse(std::string_view text);

  const Involution& involution() const noexcept { return inv_; }
  const Permutation& perm() const noexcept { return inv_.perm(); }
  std::size_t size() const noexcept { return inv_.size(); }
  int operator()(std::size_t i) const noexcept { return inv_(i); }
  std::vector<Cycle> cycles() const { return inv_.cycles(); }
  std::string to_string() const { return inv_.to_string(); }
  std::string to_cycle_string() const { return inv_.to_cycle_string(); }

  friend auto operator<=>(const FpfInvolution&, const FpfInvolution&) = default;
  friend bool operator==(const FpfInvolution&, const FpfInvolution&) = default;

 private:
  Involution inv_;
};

/// Builds the involution whose cycle set is exactly `cycles` (must partition [n]).
Involution involution_from_cycles(const std::vector<Cycle>& cycles);

}  // namespace invpat
