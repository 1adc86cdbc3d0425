#include "invpat/classes.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace invpat {

Family ambient_family(Mode ambient) noexcept {
  switch (ambient) {
    case Mode::Classical: return Family::Permutations;
    case Mode::I:
    case Mode::IPrime: return Family::Involutions;
    case Mode::F: return Family::FixedPointFree;
  }
  return Family::Involutions;
}

std::vector<Permutation> class_members(const PatternSet& ps, Mode ambient, std::size_t n, unsigned threads) {
  const Avoider avoider(ps);
  struct Acc {
    std::vector<Permutation> members;
  };
  SweepOptions opt;
  opt.threads = threads;
  auto accs = parallel_sweep<Acc>(
      ambient_family(ambient), n,
      [&](Acc& a, const Permutation& p) {
        if (avoider.avoids(p)) a.members.push_back(p);
      },
      opt);
  std::vector<Permutation> out;
  for (auto& a : accs) out.insert(out.end(), a.members.begin(), a.members.end());
  return out;
}

namespace {

void require_basis_inputs(const PatternSet& pi, Mode ambient) {
  if (pi.mode() != Mode::Classical) throw ModeMismatch("basis computation needs a classical pattern set");
  if (ambient == Mode::Classical) throw ModeMismatch("ambient order must be I, IPrime or F");
}

BasisElement make_element(const Permutation& p, const Avoider& classical) {
  BasisElement e{Involution(p), 0, {}};
  e.pattern_index = *classical.first_contained(p);
  e.occurrence = *find_occurrence(p, classical.patterns().patterns()[e.pattern_index]);
  return e;
}

}  // namespace

bool is_minimal_violator(const Permutation& tau, const PatternSet& pi, Mode ambient) {
  require_basis_inputs(pi, ambient);
  require_valid(tau, ambient);
  const Avoider avoider(pi);
  if (avoider.avoids(tau)) return false;
  for (const Involution& child : one_step_down(Involution(tau), ambient))
    if (!avoider.avoids(child.perm())) return false;
  return true;
}

BasisReport compute_basis(const PatternSet& pi, Mode ambient, std::size_t bound, unsigned threads) {
  require_basis_inputs(pi, ambient);
  if (bound < pi.max_pattern_size())
    throw InvalidInput("search bound " + std::to_string(bound) + " is below the largest pattern size " +
                       std::to_string(pi.max_pattern_size()));
  BasisReport report;
  report.ambient = ambient;
  report.search_bound = bound;
  report.violated_set = pi;

  const Avoider avoider(pi);
  const Family fam = ambient_family(ambient);
  // Members of the class at sizes m-1 and m-2; one-step images land in one of these.
  std::unordered_set<Permutation> prev1, prev2;

  struct Acc {
    std::vector<Permutation> members;
    std::vector<Permutation> basis;
  };
  SweepOptions opt;
  opt.threads = threads;
  for (std::size_t m = 0; m <= bound; ++m) {
    auto accs = parallel_sweep<Acc>(
        fam, m,
        [&](Acc& a, const Permutation& p) {
          if (avoider.avoids(p)) {
            a.members.push_back(p);
            return;
          }
          for (const Involution& child : one_step_down(Involution(p), ambient)) {
            const auto& prior = child.size() + 1 == m ? prev1 : prev2;
            if (!prior.contains(child.perm())) return;
          }
          a.basis.push_back(p);
        },
        opt);
    std::unordered_set<Permutation> current;
    for (auto& a : accs) {
      current.insert(a.members.begin(), a.members.end());
      for (const auto& b : a.basis) report.by_size[m].push_back(make_element(b, avoider));
    }
    prev2 = std::move(prev1);
    prev1 = std::move(current);
  }
  return report;
}

std::vector<Permutation> BasisReport::elements() const {
  std::vector<Permutation> out;
  for (const auto& [size, elems] : by_size)
    for (const auto& e : elems) out.push_back(e.element.perm());
  return out;
}

std::size_t BasisReport::largest_size() const noexcept {
  return by_size.empty() ? 0 : by_size.rbegin()->first;
}

std::size_t BasisReport::count() const noexcept {
  std::size_t c = 0;
  for (const auto& [size, elems] : by_size) c += elems.size();
  return c;
}

std::string BasisReport::to_text() const {
  std::ostringstream os;
  os << to_string(ambient) << "-basis of the class avoiding " << violated_set.to_string()
     << " classically, searched through size " << search_bound
     << (complete() ? " (complete)" : " (bound below twice the largest pattern; may be incomplete)") << '\n';
  for (const auto& [size, elems] : by_size) {
    os << "size " << size << ":\n";
    for (const auto& e : elems) {
      const Permutation& pat = violated_set.patterns()[e.pattern_index];
      os << "  " << e.element.to_string() << "  " << e.element.to_cycle_string() << "  contains "
         << pat.to_string() << " at";
      for (int x : e.occurrence) os << ' ' << x;
      os << '\n';
    }
  }
  os << count() << " basis elements, largest size " << largest_size() << '\n';
  return os.str();
}

std::string delimited_field(const std::string& s, char delimiter) {
  if (s.find(delimiter) == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string BasisReport::to_rows(char d) const {
  std::ostringstream os;
  os << "size" << d << "one_line" << d << "cycle_form\n";
  for (const auto& [size, elems] : by_size)
    for (const auto& e : elems)
      os << size << d << delimited_field(e.element.to_string(), d) << d
         << delimited_field(e.element.to_cycle_string(), d) << '\n';
  return os.str();
}

}  // namespace invpat
