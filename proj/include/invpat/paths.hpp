#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invpat/error.hpp"

namespace invpat {

enum class Step : char { U = 'U', D = 'D', L = 'L' };

/// Nonnegative path over {U, D, L} that ends at height 0.
struct MotzkinPath {
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  std::size_t count(Step s) const noexcept;
  /// heights()[i] is the height before step i; one extra entry for the end.
  std::vector<int> heights() const;
  bool valid() const;
  bool is_dyck() const { return count(Step::L) == 0 && valid(); }
  std::string word() const;
  static MotzkinPath parse(std::string_view word);  // throws InvalidInput

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;
};

using DyckPath = MotzkinPath;

/// A D step that starts at height h may carry a label in [1, ceil(h/2)].
int down_label_bound(int height_before);

/// Motzkin path with one label per D step (left to right). Used for both the
/// labeled Dyck paths and the André paths; U steps implicitly carry label 1.
struct LabeledPath {
  MotzkinPath path;
  std::vector<int> down_labels;

  bool labels_valid() const;
  /// Word plus labels, e.g. "UUDD (1,1)"; the empty path prints as "(empty)".
  std::string to_string() const;
  std::string labels_string() const;  // "(1,2,1)"
  static LabeledPath parse(std::string_view text);  // "WORD (a,b,...)" or just "WORD"

  friend bool operator==(const LabeledPath&, const LabeledPath&) = default;
  friend auto operator<=>(const LabeledPath&, const LabeledPath&) = default;
};

struct LabeledDyckPath : LabeledPath {
  bool valid() const { return path.is_dyck() && labels_valid(); }
  std::size_t half_length() const noexcept { return path.length() / 2; }
};

/// Level steps only at even height.
struct AndrePath : LabeledPath {
  bool valid() const;
};

enum class HStep : char { U = 'U', D = 'D', L1 = '1', L2 = '2' };  // L1 = L', L2 = L''

/// Laguerre history: every step labeled, label j in [1, 1 + height before j].
struct LaguerreHistory {
  std::vector<HStep> steps;
  std::vector<int> labels;

  std::size_t length() const noexcept { return steps.size(); }
  std::vector<int> heights() const;
  bool valid() const;
  /// "L'UDL'' (1,1,2,1)"; "(empty)" when there are no steps.
  std::string to_string() const;
  static LaguerreHistory parse(std::string_view text);

  friend bool operator==(const LaguerreHistory&, const LaguerreHistory&) = default;
  friend auto operator<=>(const LaguerreHistory&, const LaguerreHistory&) = default;
};

struct WeakComposition {
  std::vector<int> parts;
  int total() const;
  bool valid() const;
  std::string to_string() const;  // "(1,0,2)"
  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;
};

/// Exhaustive lists. Order is deterministic (steps tried as U, D, L; labels ascending).
std::vector<MotzkinPath> all_motzkin_paths(std::size_t n);
std::vector<DyckPath> all_dyck_paths(std::size_t half_length);
std::vector<LabeledDyckPath> all_labeled_dyck_paths(std::size_t half_length);
std::vector<AndrePath> all_andre_paths(std::size_t n);
std::vector<LaguerreHistory> all_laguerre_histories(std::size_t n);
/// Weak compositions of `total` into `parts` parts.
std::vector<WeakComposition> all_weak_compositions(int total, std::size_t parts);

}  // namespace invpat
