#include "invpat/pattern_set.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace invpat {

PatternSet::PatternSet(std::vector<Permutation> patterns, Mode mode)
    : patterns_(std::move(patterns)), mode_(mode) {
  for (const Permutation& p : patterns_) {
    if (p.empty()) throw InvalidInput("empty pattern");
    require_valid(p, mode_);
  }
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text, Mode mode) {
  std::vector<Permutation> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    out.push_back(token.front() == '(' ? Involution::parse(token).perm() : Permutation::parse(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return PatternSet(std::move(out), mode);
}

PatternSet PatternSet::from_file(const std::filesystem::path& path, Mode mode) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open pattern file " + path.string());
  std::string line, all;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    all += line;
    all.push_back('\n');
  }
  return parse(all, mode);
}

std::size_t PatternSet::max_pattern_size() const noexcept {
  std::size_t m = 0;
  for (const auto& p : patterns_) m = std::max(m, p.size());
  return m;
}

PatternSet PatternSet::united(const PatternSet& other) const {
  std::vector<Permutation> all = patterns_;
  all.insert(all.end(), other.patterns_.begin(), other.patterns_.end());
  return PatternSet(std::move(all), mode_);
}

PatternSet PatternSet::mapped(Permutation (*f)(const Permutation&)) const {
  std::vector<Permutation> all;
  for (const auto& p : patterns_) all.push_back(f(p));
  return PatternSet(std::move(all), mode_);
}

std::string PatternSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < patterns_.size(); ++i) os << (i ? ", " : "") << patterns_[i].to_string();
  os << '}';
  return os.str();
}

Avoider::Avoider(const PatternSet& ps) : set_(ps) {
  for (const auto& p : ps.patterns()) {
    if (ps.mode() == Mode::Classical) {
      classical_.emplace_back(p);
    } else {
      embedding_.emplace_back(p, ps.mode());
    }
  }
}

std::optional<std::size_t> Avoider::first_contained(const Permutation& tau) const {
  if (set_.mode() == Mode::Classical) {
    const TextIndex idx(tau);
    for (std::size_t i = 0; i < classical_.size(); ++i)
      if (classical_[i].matches(idx)) return i;
    return std::nullopt;
  }
  require_valid(tau, set_.mode());
  const InvolutionIndex idx(tau);
  for (std::size_t i = 0; i < embedding_.size(); ++i)
    if (embedding_[i].matches(idx)) return i;
  return std::nullopt;
}

bool Avoider::avoids(const Permutation& tau) const { return !first_contained(tau).has_value(); }

bool avoids_all(const Permutation& tau, const PatternSet& ps) { return Avoider(ps).avoids(tau); }

}  // namespace invpat
