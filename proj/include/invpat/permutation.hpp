#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invpat/error.hpp"

namespace invpat {

/// A permutation of {1,...,n} in one-line notation, 1-indexed.
///
/// Entries are stored one byte each in a zero-padded 32-byte block so that the
/// SIMD kernels can load the whole one-line word with a single register load.
/// Ordering is by size first, then lexicographic on the one-line word.
class Permutation {
 public:
  static constexpr std::size_t kMaxSize = 32;
  using Storage = std::array<std::uint8_t, kMaxSize>;

  Permutation() = default;

  /// Validating constructor: `one_line` must be a rearrangement of 1..n.
  explicit Permutation(std::span<const int> one_line);
  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

  /// No validation; caller guarantees a rearrangement of 1..n with n <= kMaxSize.
  static Permutation from_bytes_unchecked(const std::uint8_t* values, std::size_t n) noexcept {
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    std::copy_n(values, n, p.entries_.begin());
    return p;
  }

  static Permutation identity(std::size_t n);
  static Permutation longest(std::size_t n);  // w_0 = n ... 1

  /// Digit string ("21647358") or comma-separated ("10,3,2,...").
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// pi(i) for 1 <= i <= n. Unchecked.
  int operator()(std::size_t i) const noexcept { return entries_[i - 1]; }
  /// pi(i) with bounds check.
  int at(std::size_t i) const;

  std::span<const std::uint8_t> one_line() const noexcept { return {entries_.data(), size_}; }
  /// Padded 32-byte block (entries past size() are zero).
  const Storage& storage() const noexcept { return entries_; }
  std::vector<int> to_vector() const;

  /// Digit string when n <= 9, comma-separated otherwise. Empty permutation is "".
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t size_ = 0;
  Storage entries_{};
};

/// st(w): the permutation with the same relative order as `word`.
/// Throws InvalidInput on repeated entries.
template <class T>
Permutation standardize(std::span<const T> word) {
  if (word.size() > Permutation::kMaxSize)
    throw InvalidInput("word longer than " + std::to_string(Permutation::kMaxSize));
  std::array<std::uint8_t, Permutation::kMaxSize> order{};
  std::iota(order.begin(), order.begin() + word.size(), std::uint8_t{0});
  std::sort(order.begin(), order.begin() + word.size(),
            [&](std::uint8_t a, std::uint8_t b) { return word[a] < word[b]; });
  std::array<std::uint8_t, Permutation::kMaxSize> out{};
  for (std::size_t r = 0; r < word.size(); ++r) {
    if (r > 0 && !(word[order[r - 1]] < word[order[r]]))
      throw InvalidInput("standardize: repeated entry");
    out[order[r]] = static_cast<std::uint8_t>(r + 1);
  }
  return Permutation::from_bytes_unchecked(out.data(), word.size());
}

template <class T>
Permutation standardize(const std::vector<T>& word) {
  return standardize(std::span<const T>(word));
}

/// st(pi|_I) for the positions in `positions` (1-indexed bitmask, bit i-1 = position i).
Permutation restrict_to_positions(const Permutation& pi, std::uint32_t positions);

Permutation inverse(const Permutation& pi);
/// w_0 pi w_0, i.e. i -> n+1-pi(n+1-i).
Permutation reverse_complement(const Permutation& pi);
/// pi (-) sigma: pi above-left, sigma below-right.
Permutation skew_sum(const Permutation& pi, const Permutation& sigma);
Permutation compose(const Permutation& outer, const Permutation& inner);  // (outer o inner)(i)

bool is_involution(const Permutation& pi) noexcept;
bool is_fpf_involution(const Permutation& pi) noexcept;

}  // namespace invpat

template <>
struct std::hash<invpat::Permutation> {
  std::size_t operator()(const invpat::Permutation& p) const noexcept {
    // FNV-1a over the used bytes and the length.
    std::uint64_t h = 1469598103934665603ull ^ p.size();
    for (std::uint8_t v : p.one_line()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
