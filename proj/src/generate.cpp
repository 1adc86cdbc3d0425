#include "invpat/generate.hpp"

#include <set>
#include <string>

namespace invpat {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Family parse_family(std::string_view text) {
  if (text == "S" || text == "permutations" || text == "classical") return Family::Permutations;
  if (text == "I" || text == "involutions") return Family::Involutions;
  if (text == "F" || text == "fpf") return Family::FixedPointFree;
  throw InvalidInput("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Permutations: return "S";
    case Family::Involutions: return "I";
    case Family::FixedPointFree: return "F";
  }
  return "?";
}

BigInt involution_count(std::size_t n) {
  BigInt a = 1, b = 1;  // a(k-2), a(k-1)
  if (n == 0) return 1;
  for (std::size_t k = 2; k <= n; ++k) {
    BigInt c = b + BigInt(k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

BigInt fpf_count(std::size_t n) {
  if (n % 2) return 0;
  BigInt r = 1;
  for (std::size_t k = 1; k < n; k += 2) r *= k;
  return r;
}

BigInt family_count(Family f, std::size_t n) {
  switch (f) {
    case Family::Permutations: return factorial(static_cast<unsigned>(n));
    case Family::Involutions: return involution_count(n);
    case Family::FixedPointFree: return fpf_count(n);
  }
  return 0;
}

namespace detail {

bool seed_involution_prefix(InvolutionState& s, std::span<const std::uint8_t> prefix) {
  if (prefix.size() > s.n) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const std::size_t v = prefix[i];
    if (v < 1 || v > s.n) return false;
    if (v == i + 1 && !s.allow_fixed) return false;
    // Position i may already be forced by an earlier opener.
    if (s.w[i] != 0 && s.w[i] != v) return false;
    if (s.w[v - 1] != 0 && s.w[v - 1] != i + 1) return false;
    s.w[i] = static_cast<std::uint8_t>(v);
    s.w[v - 1] = static_cast<std::uint8_t>(i + 1);
  }
  return true;
}

}  // namespace detail

std::vector<std::vector<std::uint8_t>> family_prefixes(Family f, std::size_t n, std::size_t depth) {
  depth = std::min(depth, n);
  std::set<std::vector<std::uint8_t>> seen;
  if (f == Family::Permutations) {
    // Ordered selections of `depth` distinct values.
    std::vector<std::uint8_t> cur;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&] {
      if (cur.size() == depth) {
        seen.insert(cur);
        return;
      }
      for (std::uint8_t v = 1; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        cur.push_back(v);
        rec();
        cur.pop_back();
        used[v] = false;
      }
    };
    rec();
  } else {
    if (f == Family::FixedPointFree && n % 2) return {};
    // Walk the involution recursion until the first `depth` positions are settled.
    detail::InvolutionState s;
    s.n = n;
    s.allow_fixed = (f == Family::Involutions);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      while (i < n && s.w[i] != 0) ++i;
      if (i >= depth) {
        seen.emplace(s.w.begin(), s.w.begin() + static_cast<std::ptrdiff_t>(depth));
        return;
      }
      const auto self = static_cast<std::uint8_t>(i + 1);
      if (s.allow_fixed) {
        s.w[i] = self;
        rec(i + 1);
        s.w[i] = 0;
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s.w[j] != 0) continue;
        s.w[i] = static_cast<std::uint8_t>(j + 1);
        s.w[j] = self;
        rec(i + 1);
        s.w[j] = 0;
      }
      s.w[i] = 0;
    };
    rec(0);
  }
  return {seen.begin(), seen.end()};
}

std::size_t default_prefix_depth(Family f, std::size_t n) {
  if (n <= 6) return 0;
  if (f == Family::Permutations) return 2;
  return n >= 14 ? 3 : 2;
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace invpat
