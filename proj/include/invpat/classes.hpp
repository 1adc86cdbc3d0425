#pragma once

#include <map>
#include <string>
#include <vector>

#include "invpat/generate.hpp"
#include "invpat/pattern_set.hpp"

namespace invpat {

/// The family an ambient order lives on: I and IPrime on involutions, F on
/// fixed-point-free involutions, Classical on all permutations.
Family ambient_family(Mode ambient) noexcept;

/// All size-n elements of the ambient family that avoid `ps` (under ps.mode()),
/// in lexicographic order.
std::vector<Permutation> class_members(const PatternSet& ps, Mode ambient, std::size_t n,
                                       unsigned threads = 1);

struct BasisElement {
  Involution element;
  std::size_t pattern_index = 0;  // into violated_set.patterns()
  std::vector<int> occurrence;    // positions of one classical occurrence
};

struct BasisReport {
  Mode ambient = Mode::I;
  std::size_t search_bound = 0;
  PatternSet violated_set;
  std::map<std::size_t, std::vector<BasisElement>> by_size;

  /// True when the bound reaches twice the largest pattern, where the search is
  /// guaranteed to have found every basis element.
  bool complete() const noexcept { return search_bound >= 2 * violated_set.max_pattern_size(); }
  std::vector<Permutation> elements() const;
  std::size_t largest_size() const noexcept;
  std::size_t count() const noexcept;

  /// Human-readable block grouped by size.
  std::string to_text() const;
  /// Header "size,one_line,cycle_form" then one row per element.
  std::string to_rows(char delimiter = ',') const;
};

/// Minimal elements of the ambient family that contain some pattern of `pi`
/// classically, found size by size up to `bound`.
BasisReport compute_basis(const PatternSet& pi, Mode ambient, std::size_t bound, unsigned threads = 1);

/// tau contains some pattern classically while every one-step deletion avoids all.
bool is_minimal_violator(const Permutation& tau, const PatternSet& pi, Mode ambient);

/// Quotes a field if it contains the delimiter or a quote.
std::string delimited_field(const std::string& s, char delimiter);

}  // namespace invpat
