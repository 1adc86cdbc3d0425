#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invpat/pattern_set.hpp"

namespace invpat {

/// The embedded pattern lists: Pi (24 involutions, sizes 5-8) for involution
/// Schubert varieties, PiPrime (17 matchings, sizes 6-8) for the fixed-point-free
/// ones, and the extra pair {2143, 1324} for smoothness.
struct McGovernSets {
  std::vector<Permutation> pi, pi_prime, smooth_extra;
};
const McGovernSets& mcgovern_sets();

/// Pi together with {2143, 1324}, in the given order.
PatternSet part1_patterns(Mode mode);
/// PiPrime in the given order.
PatternSet part2_patterns(Mode mode);

struct McGovernRow {
  std::size_t n = 0;
  std::uint64_t total = 0;      // |I_n| or |F_n|
  std::uint64_t classical = 0;  // classical avoiders
  std::uint64_t i_prime = 0;    // I'-avoiders (part 1 only)
  std::uint64_t order = 0;      // I-avoiders (part 1) or F-avoiders (part 2)
  bool equal() const noexcept;
};

struct McGovernCounterexample {
  Permutation element;
  std::string inclusion;  // e.g. "I(P) != I_S(P)"
};

struct McGovernReport {
  int part = 1;  // 1: three orders on I_n; 2: two orders on F_n
  std::string patterns;
  std::size_t max_size = 0;
  std::vector<McGovernRow> rows;
  std::optional<McGovernCounterexample> counterexample;  // smallest size, then lexicographic

  bool ok() const noexcept { return !counterexample; }
  std::string to_text() const;
  /// Header "n,total,classical,i_prime,order,equal" then one row per size.
  std::string to_rows(char delimiter = ',') const;
};

struct VerifyOptions {
  unsigned threads = 0;
  /// When non-empty, finished prefix tasks are appended here and skipped on rerun.
  std::string checkpoint_path;
  std::function<void(std::size_t n, std::size_t done, std::size_t total)> progress;
};

/// The same sweep for any pattern set: ambient I compares I', I and classical
/// avoidance on I_n, ambient F compares F and classical avoidance on F_n.
McGovernReport verify_classes(const PatternSet& patterns, Mode ambient, std::size_t max_size,
                              const VerifyOptions& opt = {});

/// I'(P) = I(P) = I_S(P) on I_n for n <= max_size, P = Pi u {2143, 1324}.
McGovernReport verify_part1(std::size_t max_size, const VerifyOptions& opt = {});
/// F(Pi') = F_S(Pi') on F_n for even n <= max_size.
McGovernReport verify_part2(std::size_t max_size, const VerifyOptions& opt = {});

/// rho avoids PiPrime in the F order. Throws InvalidInput unless rho is fixed-point-free.
bool rational_smoothness_F(const Permutation& rho);
/// tau I'-avoids Pi and satisfies the 21*43 condition.
bool rational_smoothness_I(const Permutation& tau);
/// tau I'-avoids Pi u {2143, 1324}.
bool smoothness_I(const Permutation& tau);

}  // namespace invpat
