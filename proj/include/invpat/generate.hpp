#pragma once

// Exhaustive generators in lexicographic one-line order, plus a prefix-partitioned
// parallel sweep with deterministic (task-ordered) results.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "invpat/bigint.hpp"
#include "invpat/permutation.hpp"

namespace invpat {

enum class Family { Permutations, Involutions, FixedPointFree };

Family parse_family(std::string_view text);
std::string_view to_string(Family f) noexcept;

BigInt involution_count(std::size_t n);   // a(n) = a(n-1) + (n-1) a(n-2)
BigInt fpf_count(std::size_t n);          // (n-1)!! for even n, else 0
BigInt family_count(Family f, std::size_t n);

template <class Visit>
void for_each_permutation(std::size_t n, Visit&& visit, std::span<const std::uint8_t> prefix = {}) {
  if (n > Permutation::kMaxSize) throw InvalidInput("size too large");
  std::array<std::uint8_t, Permutation::kMaxSize> w{};
  std::array<bool, Permutation::kMaxSize + 1> used{};
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] < 1 || prefix[i] > n || used[prefix[i]]) throw InvalidInput("bad prefix");
    w[i] = prefix[i];
    used[prefix[i]] = true;
  }
  std::size_t k = prefix.size();
  for (std::uint8_t v = 1; v <= n; ++v)
    if (!used[v]) w[k++] = v;
  do {
    visit(Permutation::from_bytes_unchecked(w.data(), n));
  } while (std::next_permutation(w.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                                 w.begin() + static_cast<std::ptrdiff_t>(n)));
}

namespace detail {

struct InvolutionState {
  std::size_t n = 0;
  bool allow_fixed = true;
  std::array<std::uint8_t, Permutation::kMaxSize> w{};  // 0 = unassigned
};

/// Seeds `s` from a one-line prefix. Returns false if no involution has that prefix.
bool seed_involution_prefix(InvolutionState& s, std::span<const std::uint8_t> prefix);

template <class Visit>
void involution_rec(InvolutionState& s, std::size_t i, Visit& visit) {
  while (i < s.n && s.w[i] != 0) ++i;
  if (i == s.n) {
    visit(Permutation::from_bytes_unchecked(s.w.data(), s.n));
    return;
  }
  const auto self = static_cast<std::uint8_t>(i + 1);
  if (s.allow_fixed) {
    s.w[i] = self;
    involution_rec(s, i + 1, visit);
    s.w[i] = 0;
  }
  for (std::size_t j = i + 1; j < s.n; ++j) {
    if (s.w[j] != 0) continue;
    s.w[i] = static_cast<std::uint8_t>(j + 1);
    s.w[j] = self;
    involution_rec(s, i + 1, visit);
    s.w[j] = 0;
  }
  s.w[i] = 0;
}

}  // namespace detail

/// Involutions of [n] (fixed-point-free ones only if !allow_fixed) whose one-line
/// word starts with `prefix`, in lexicographic order.
template <class Visit>
void for_each_involution(std::size_t n, Visit&& visit, bool allow_fixed = true,
                         std::span<const std::uint8_t> prefix = {}) {
  if (n > Permutation::kMaxSize) throw InvalidInput("size too large");
  detail::InvolutionState s;
  s.n = n;
  s.allow_fixed = allow_fixed;
  if (!detail::seed_involution_prefix(s, prefix)) return;
  detail::involution_rec(s, 0, visit);
}

template <class Visit>
void for_each_in_family(Family f, std::size_t n, Visit&& visit,
                        std::span<const std::uint8_t> prefix = {}) {
  switch (f) {
    case Family::Permutations: for_each_permutation(n, visit, prefix); break;
    case Family::Involutions: for_each_involution(n, visit, true, prefix); break;
    case Family::FixedPointFree:
      if (n % 2 == 0) for_each_involution(n, visit, false, prefix);
      break;
  }
}

template <class T>
std::vector<T> collect_family(Family f, std::size_t n) {
  std::vector<T> out;
  for_each_in_family(f, n, [&](const Permutation& p) { out.push_back(T(p)); });
  return out;
}

/// Distinct one-line prefixes of length min(depth, n) over the family, sorted.
std::vector<std::vector<std::uint8_t>> family_prefixes(Family f, std::size_t n, std::size_t depth);

struct SweepOptions {
  unsigned threads = 0;            // 0 = hardware concurrency
  std::size_t prefix_depth = 0;    // 0 = automatic
  /// Tasks for which this returns true are skipped (e.g. restored from a checkpoint).
  std::function<bool(std::size_t task)> skip;
  /// Called (serialized) after each finished task.
  std::function<void(std::size_t task, std::size_t done, std::size_t total)> on_task_done;
};

std::size_t default_prefix_depth(Family f, std::size_t n);
unsigned resolve_threads(unsigned requested);

/// Runs `visit(acc, perm)` over the whole family, one accumulator per prefix task.
/// Returns the accumulators in task (lexicographic) order, so any in-order merge is
/// independent of the thread count. Skipped tasks keep a default-constructed Acc.
template <class Acc, class Visit, class Done>
std::vector<Acc> parallel_sweep(Family f, std::size_t n, Visit visit, const SweepOptions& opt,
                                Done on_done) {
  const std::size_t depth = opt.prefix_depth ? opt.prefix_depth : default_prefix_depth(f, n);
  const auto prefixes = family_prefixes(f, n, depth);
  std::vector<Acc> accs(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex mu;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= prefixes.size()) return;
      if (opt.skip && opt.skip(task)) continue;
      try {
        Acc& acc = accs[task];
        for_each_in_family(f, n, [&](const Permutation& p) { visit(acc, p); },
                           std::span<const std::uint8_t>(prefixes[task]));
        std::lock_guard lock(mu);
        ++done;
        on_done(task, acc);
        if (opt.on_task_done) opt.on_task_done(task, done, prefixes.size());
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(prefixes.size());
        return;
      }
    }
  };

  const unsigned threads = std::min<unsigned>(resolve_threads(opt.threads),
                                              static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return accs;
}

template <class Acc, class Visit>
std::vector<Acc> parallel_sweep(Family f, std::size_t n, Visit visit, const SweepOptions& opt = {}) {
  return parallel_sweep<Acc>(f, n, std::move(visit), opt, [](std::size_t, const Acc&) {});
}

}  // namespace invpat
