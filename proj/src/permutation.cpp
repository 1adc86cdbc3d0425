#include "invpat/permutation.hpp"

#include <bit>
#include <cctype>
#include <charconv>

namespace invpat {

Permutation::Permutation(std::span<const int> one_line) {
  const std::size_t n = one_line.size();
  if (n > kMaxSize)
    throw InvalidInput("permutation longer than " + std::to_string(kMaxSize));
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int v = one_line[i];
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw InvalidInput("entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (seen & bit) throw InvalidInput("repeated entry " + std::to_string(v));
    seen |= bit;
    entries_[i] = static_cast<std::uint8_t>(v);
  }
  size_ = static_cast<std::uint8_t>(n);
}

Permutation Permutation::identity(std::size_t n) {
  if (n > kMaxSize) throw InvalidInput("size too large");
  Permutation p;
  p.size_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < n; ++i) p.entries_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::longest(std::size_t n) {
  if (n > kMaxSize) throw InvalidInput("size too large");
  Permutation p;
  p.size_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < n; ++i) p.entries_[i] = static_cast<std::uint8_t>(n - i);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InvalidInput("cannot parse permutation entry '" + std::string(tok) + "'");
      values.push_back(v);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw InvalidInput("cannot parse permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::span<const int>(values));
}

int Permutation::at(std::size_t i) const {
  if (i < 1 || i > size_) throw InvalidInput("index out of range");
  return entries_[i - 1];
}

std::vector<int> Permutation::to_vector() const {
  return std::vector<int>(entries_.begin(), entries_.begin() + size_);
}

std::string Permutation::to_string() const {
  std::string out;
  if (size_ <= 9) {
    for (std::size_t i = 0; i < size_; ++i) out.push_back(static_cast<char>('0' + entries_[i]));
    return out;
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation restrict_to_positions(const Permutation& pi, std::uint32_t positions) {
  // Ranks come from the set of kept values: rank(v) = #{kept values <= v}.
  std::uint64_t values = 0;
  for (std::uint32_t m = positions; m; m &= m - 1) {
    const int pos = std::countr_zero(m) + 1;
    if (static_cast<std::size_t>(pos) > pi.size()) throw InvalidInput("position out of range");
    values |= std::uint64_t{1} << (pi(pos) - 1);
  }
  std::array<std::uint8_t, Permutation::kMaxSize> out{};
  std::size_t k = 0;
  for (std::uint32_t m = positions; m; m &= m - 1) {
    const int v = pi(std::countr_zero(m) + 1);
    const std::uint64_t below = values & ((std::uint64_t{1} << v) - 1);
    out[k++] = static_cast<std::uint8_t>(std::popcount(below));
  }
  return Permutation::from_bytes_unchecked(out.data(), k);
}

Permutation inverse(const Permutation& pi) {
  std::array<std::uint8_t, Permutation::kMaxSize> out{};
  for (std::size_t i = 1; i <= pi.size(); ++i) out[pi(i) - 1] = static_cast<std::uint8_t>(i);
  return Permutation::from_bytes_unchecked(out.data(), pi.size());
}

Permutation reverse_complement(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::array<std::uint8_t, Permutation::kMaxSize> out{};
  for (std::size_t i = 1; i <= n; ++i)
    out[i - 1] = static_cast<std::uint8_t>(n + 1 - pi(n + 1 - i));
  return Permutation::from_bytes_unchecked(out.data(), n);
}

Permutation skew_sum(const Permutation& pi, const Permutation& sigma) {
  const std::size_t a = pi.size(), b = sigma.size();
  if (a + b > Permutation::kMaxSize) throw InvalidInput("skew sum too large");
  std::array<std::uint8_t, Permutation::kMaxSize> out{};
  for (std::size_t i = 1; i <= a; ++i) out[i - 1] = static_cast<std::uint8_t>(b + pi(i));
  for (std::size_t i = a + 1; i <= a + b; ++i) out[i - 1] = static_cast<std::uint8_t>(sigma(i - a));
  return Permutation::from_bytes_unchecked(out.data(), a + b);
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InvalidInput("compose: size mismatch");
  std::array<std::uint8_t, Permutation::kMaxSize> out{};
  for (std::size_t i = 1; i <= inner.size(); ++i)
    out[i - 1] = static_cast<std::uint8_t>(outer(inner(i)));
  return Permutation::from_bytes_unchecked(out.data(), inner.size());
}

bool is_involution(const Permutation& pi) noexcept {
  for (std::size_t i = 1; i <= pi.size(); ++i)
    if (static_cast<std::size_t>(pi(pi(i))) != i) return false;
  return true;
}

bool is_fpf_involution(const Permutation& pi) noexcept {
  if (!is_involution(pi)) return false;
  for (std::size_t i = 1; i <= pi.size(); ++i)
    if (static_cast<std::size_t>(pi(i)) == i) return false;
  return true;
}

}  // namespace invpat
