#include "invpat/paths.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace invpat {

namespace {

std::string join_labels(const std::vector<int>& labels) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << ')';
  return os.str();
}

// Splits "WORD (1,2,3)" into the word and the label list.
std::pair<std::string, std::vector<int>> split_labeled(std::string_view text) {
  std::string word;
  std::vector<int> labels;
  std::size_t i = 0;
  while (i < text.size() && text[i] != '(') {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) word.push_back(text[i]);
    ++i;
  }
  if (i < text.size()) {
    const auto close = text.find(')', i);
    if (close == std::string_view::npos || close + 1 != text.find_last_not_of(" \t\r\n") + 1)
      throw InvalidInput("malformed label list in '" + std::string(text) + "'");
    std::string inner(text.substr(i + 1, close - i - 1));
    if (inner == "empty") return {word, labels};
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream is(inner);
    std::string tok;
    while (is >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InvalidInput("bad label '" + tok + "'");
      labels.push_back(std::stoi(tok));
    }
  }
  return {word, labels};
}

}  // namespace

// ---- Motzkin paths ---------------------------------------------------------

std::size_t MotzkinPath::count(Step s) const noexcept {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), s));
}

std::vector<int> MotzkinPath::heights() const {
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i)
    h[i + 1] = h[i] + (steps[i] == Step::U ? 1 : steps[i] == Step::D ? -1 : 0);
  return h;
}

bool MotzkinPath::valid() const {
  const auto h = heights();
  return std::all_of(h.begin(), h.end(), [](int x) { return x >= 0; }) && h.back() == 0;
}

std::string MotzkinPath::word() const {
  std::string s;
  for (Step st : steps) s.push_back(static_cast<char>(st));
  return s;
}

MotzkinPath MotzkinPath::parse(std::string_view word) {
  MotzkinPath p;
  for (char c : word) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'U': p.steps.push_back(Step::U); break;
      case 'D': p.steps.push_back(Step::D); break;
      case 'L': p.steps.push_back(Step::L); break;
      default: throw InvalidInput("bad step '" + std::string(1, c) + "' in path " + std::string(word));
    }
  }
  return p;
}

int down_label_bound(int height_before) { return (height_before + 1) / 2; }

// ---- labeled paths ---------------------------------------------------------

bool LabeledPath::labels_valid() const {
  if (down_labels.size() != path.count(Step::D)) return false;
  const auto h = path.heights();
  std::size_t j = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i] != Step::D) continue;
    const int l = down_labels[j++];
    if (l < 1 || l > down_label_bound(h[i])) return false;
  }
  return true;
}

std::string LabeledPath::labels_string() const { return join_labels(down_labels); }

std::string LabeledPath::to_string() const {
  if (path.steps.empty()) return "(empty)";
  return path.word() + " " + labels_string();
}

LabeledPath LabeledPath::parse(std::string_view text) {
  auto [word, labels] = split_labeled(text);
  LabeledPath p{MotzkinPath::parse(word), std::move(labels)};
  if (p.down_labels.empty() && p.path.count(Step::D) > 0 && text.find('(') == std::string_view::npos)
    p.down_labels.assign(p.path.count(Step::D), 1);  // unlabeled input: all labels 1
  return p;
}

bool AndrePath::valid() const {
  if (!path.valid() || !labels_valid()) return false;
  const auto h = path.heights();
  for (std::size_t i = 0; i < path.steps.size(); ++i)
    if (path.steps[i] == Step::L && h[i] % 2) return false;
  return true;
}

// ---- Laguerre histories ----------------------------------------------------

std::vector<int> LaguerreHistory::heights() const {
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i)
    h[i + 1] = h[i] + (steps[i] == HStep::U ? 1 : steps[i] == HStep::D ? -1 : 0);
  return h;
}

bool LaguerreHistory::valid() const {
  if (labels.size() != steps.size()) return false;
  const auto h = heights();
  if (h.back() != 0) return false;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (h[i + 1] < 0 || labels[i] < 1 || labels[i] > h[i] + 1) return false;
  return true;
}

std::string LaguerreHistory::to_string() const {
  if (steps.empty()) return "(empty)";
  std::string w;
  for (HStep s : steps) {
    switch (s) {
      case HStep::U: w += "U"; break;
      case HStep::D: w += "D"; break;
      case HStep::L1: w += "L'"; break;
      case HStep::L2: w += "L''"; break;
    }
  }
  return w + " " + join_labels(labels);
}

LaguerreHistory LaguerreHistory::parse(std::string_view text) {
  auto [word, labels] = split_labeled(text);
  LaguerreHistory h;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(word[i])));
    if (c == 'U') {
      h.steps.push_back(HStep::U);
    } else if (c == 'D') {
      h.steps.push_back(HStep::D);
    } else if (c == 'L') {
      std::size_t primes = 0;
      while (i + 1 < word.size() && word[i + 1] == '\'') ++primes, ++i;
      if (primes == 1) h.steps.push_back(HStep::L1);
      else if (primes == 2) h.steps.push_back(HStep::L2);
      else throw InvalidInput("level steps must be written L' or L''");
    } else {
      throw InvalidInput("bad step '" + std::string(1, word[i]) + "' in history");
    }
  }
  h.labels = std::move(labels);
  return h;
}

// ---- compositions ----------------------------------------------------------

int WeakComposition::total() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool WeakComposition::valid() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 0; });
}

std::string WeakComposition::to_string() const { return join_labels(parts); }

// ---- enumeration -----------------------------------------------------------

std::vector<MotzkinPath> all_motzkin_paths(std::size_t n) {
  std::vector<MotzkinPath> out;
  MotzkinPath cur;
  std::function<void(int)> rec = [&](int h) {
    const std::size_t left = n - cur.steps.size();
    if (left == 0) {
      if (h == 0) out.push_back(cur);
      return;
    }
    if (static_cast<std::size_t>(h) + 1 <= left - 1) {
      cur.steps.push_back(Step::U);
      rec(h + 1);
      cur.steps.pop_back();
    }
    if (h > 0) {
      cur.steps.push_back(Step::D);
      rec(h - 1);
      cur.steps.pop_back();
    }
    if (static_cast<std::size_t>(h) <= left - 1) {
      cur.steps.push_back(Step::L);
      rec(h);
      cur.steps.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<DyckPath> all_dyck_paths(std::size_t half_length) {
  std::vector<DyckPath> out;
  for (auto& p : all_motzkin_paths(2 * half_length))
    if (p.count(Step::L) == 0) out.push_back(std::move(p));
  return out;
}

namespace {

// Every labeling of the D steps of `p` within the height bounds.
template <class Out>
void for_each_labeling(const MotzkinPath& p, std::vector<Out>& out) {
  const auto h = p.heights();
  std::vector<int> bounds;
  for (std::size_t i = 0; i < p.steps.size(); ++i)
    if (p.steps[i] == Step::D) bounds.push_back(down_label_bound(h[i]));
  std::vector<int> labels(bounds.size(), 1);
  for (;;) {
    Out o;
    o.path = p;
    o.down_labels = labels;
    out.push_back(std::move(o));
    std::size_t j = labels.size();
    while (j > 0 && labels[j - 1] == bounds[j - 1]) labels[--j] = 1;
    if (j == 0) return;
    ++labels[j - 1];
  }
}

}  // namespace

std::vector<LabeledDyckPath> all_labeled_dyck_paths(std::size_t half_length) {
  std::vector<LabeledDyckPath> out;
  for (const auto& p : all_dyck_paths(half_length)) for_each_labeling(p, out);
  return out;
}

std::vector<AndrePath> all_andre_paths(std::size_t n) {
  std::vector<AndrePath> out;
  for (const auto& p : all_motzkin_paths(n)) {
    const auto h = p.heights();
    bool ok = true;
    for (std::size_t i = 0; i < p.steps.size() && ok; ++i) ok = p.steps[i] != Step::L || h[i] % 2 == 0;
    if (ok) for_each_labeling(p, out);
  }
  return out;
}

std::vector<LaguerreHistory> all_laguerre_histories(std::size_t n) {
  std::vector<LaguerreHistory> out;
  LaguerreHistory cur;
  std::function<void(int)> rec = [&](int h) {
    const std::size_t left = n - cur.steps.size();
    if (left == 0) {
      if (h == 0) out.push_back(cur);
      return;
    }
    for (HStep s : {HStep::U, HStep::D, HStep::L1, HStep::L2}) {
      const int nh = h + (s == HStep::U ? 1 : s == HStep::D ? -1 : 0);
      if (nh < 0 || static_cast<std::size_t>(nh) > left - 1) continue;
      for (int l = 1; l <= h + 1; ++l) {
        cur.steps.push_back(s);
        cur.labels.push_back(l);
        rec(nh);
        cur.steps.pop_back();
        cur.labels.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

std::vector<WeakComposition> all_weak_compositions(int total, std::size_t parts) {
  std::vector<WeakComposition> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      cur[i] = left;
      out.push_back({cur});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

}  // namespace invpat
