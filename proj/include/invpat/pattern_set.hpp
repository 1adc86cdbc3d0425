#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invpat/containment.hpp"

namespace invpat {

/// A finite set of patterns together with the order used to avoid them.
/// Patterns are kept sorted (by size, then lexicographically) and duplicate-free.
class PatternSet {
 public:
  PatternSet() = default;
  /// Throws ModeMismatch if a pattern is not valid for `mode`, InvalidInput on an
  /// empty pattern.
  PatternSet(std::vector<Permutation> patterns, Mode mode);

  /// Patterns separated by whitespace or ';'. Cycle notation is accepted.
  static PatternSet parse(std::string_view text, Mode mode);
  /// One pattern per line; '#' starts a comment.
  static PatternSet from_file(const std::filesystem::path& path, Mode mode);

  const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
  Mode mode() const noexcept { return mode_; }
  bool empty() const noexcept { return patterns_.empty(); }
  std::size_t size() const noexcept { return patterns_.size(); }
  std::size_t max_pattern_size() const noexcept;

  PatternSet with_mode(Mode mode) const { return PatternSet(patterns_, mode); }
  PatternSet united(const PatternSet& other) const;  // keeps this->mode()
  PatternSet mapped(Permutation (*f)(const Permutation&)) const;

  /// "{132, 2143}"
  std::string to_string() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Permutation> patterns_;
  Mode mode_ = Mode::Classical;
};

/// A pattern set compiled for repeated avoidance tests against many texts.
/// Immutable after construction, so one instance may be shared across threads.
class Avoider {
 public:
  explicit Avoider(const PatternSet& ps);
  const PatternSet& patterns() const noexcept { return set_; }
  bool avoids(const Permutation& tau) const;
  /// Index (into patterns()) of the first contained pattern, if any.
  std::optional<std::size_t> first_contained(const Permutation& tau) const;

 private:
  PatternSet set_;
  std::vector<ClassicalPlan> classical_;
  std::vector<EmbeddingPlan> embedding_;
};

bool avoids_all(const Permutation& tau, const PatternSet& ps);

}  // namespace invpat
