#include "invpat/mcgovern.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "invpat/generate.hpp"
#include "invpat/statistics.hpp"

namespace invpat {

namespace {

std::vector<Permutation> parse_list(std::initializer_list<const char*> xs) {
  std::vector<Permutation> out;
  for (const char* x : xs) out.push_back(Permutation::parse(x));
  return out;
}

// Per prefix task: counts plus the first counterexample seen in lexicographic order.
struct TaskAcc {
  std::uint64_t total = 0, classical = 0, i_prime = 0, order = 0;
  std::optional<Permutation> witness;
  char kind = 0;  // 'I': order-avoider that is not a classical avoider; 'P': I'-avoider that is not an I-avoider
};

std::string kind_text(int part, char kind) {
  if (part == 2) return "F(P) != F_S(P)";
  return kind == 'I' ? "I(P) != I_S(P)" : "I'(P) != I(P)";
}

class Checkpoint {
 public:
  Checkpoint(const std::string& path, int part, std::string patterns)
      : path_(path), part_(part), patterns_(std::move(patterns)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    if (in && std::getline(in, line)) {
      const std::string want = header();
      if (line != want) throw InvalidInput("checkpoint " + path_ + " belongs to a different run: " + line);
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::size_t n = 0, task = 0;
        TaskAcc a;
        std::string ce;
        if (!(is >> n >> task >> a.total >> a.classical >> a.i_prime >> a.order >> ce))
          throw InvalidInput("malformed checkpoint line: " + line);
        if (ce != "-") {
          const auto colon = ce.rfind(':');
          if (colon == std::string::npos || colon + 2 != ce.size()) throw InvalidInput("malformed checkpoint line: " + line);
          a.witness = Permutation::parse(ce.substr(0, colon));
          a.kind = ce.back();
        }
        done_[{n, task}] = a;
      }
    } else {
      std::ofstream(path_) << header() << '\n';
    }
    out_.open(path_, std::ios::app);
  }

  const TaskAcc* find(std::size_t n, std::size_t task) const {
    auto it = done_.find({n, task});
    return it == done_.end() ? nullptr : &it->second;
  }

  // Called with the sweep's lock held.
  void record(std::size_t n, std::size_t task, const TaskAcc& a) {
    if (!out_.is_open()) return;
    out_ << n << ' ' << task << ' ' << a.total << ' ' << a.classical << ' ' << a.i_prime << ' ' << a.order << ' ';
    if (a.witness) out_ << a.witness->to_string() << ':' << a.kind;
    else out_ << '-';
    out_ << '\n' << std::flush;
  }

 private:
  std::string header() const {
    return "# invpat verify-mcgovern checkpoint part=" + std::to_string(part_) + " patterns=" + patterns_;
  }

  std::string path_;
  int part_;
  std::string patterns_;
  std::map<std::pair<std::size_t, std::size_t>, TaskAcc> done_;
  std::ofstream out_;
};

McGovernReport run(const PatternSet& patterns, Mode ambient, std::size_t max_size, const VerifyOptions& opt) {
  if (max_size < 1) throw InvalidInput("max size must be at least 1");
  if (max_size > Permutation::kMaxSize) throw InvalidInput("max size too large");
  if (ambient != Mode::I && ambient != Mode::F) throw InvalidInput("ambient must be I or F");
  const int part = ambient == Mode::I ? 1 : 2;
  for (const auto& p : patterns.patterns())
    if (!is_valid_for(p, ambient)) throw ModeMismatch(p.to_string() + " is not valid in " + std::string(to_string(ambient)));
  std::vector<ClassicalPlan> classical;
  std::vector<EmbeddingPlan> prime, order;
  for (const auto& p : patterns.patterns()) {
    classical.emplace_back(p);
    if (part == 1) {
      prime.emplace_back(p, Mode::IPrime);
      order.emplace_back(p, Mode::I);
    } else {
      order.emplace_back(p, Mode::F);
    }
  }
  auto any = [](const auto& plans, const auto& index) {
    for (const auto& plan : plans)
      if (plan.matches(index)) return true;
    return false;
  };

  Checkpoint ckpt(opt.checkpoint_path, part, patterns.to_string());
  McGovernReport rep;
  rep.part = part;
  rep.patterns = patterns.to_string();
  rep.max_size = max_size;
  const Family fam = part == 1 ? Family::Involutions : Family::FixedPointFree;

  for (std::size_t n = part == 1 ? 1 : 2; n <= max_size; n += part == 1 ? 1 : 2) {
    SweepOptions so;
    so.threads = opt.threads;
    so.skip = [&](std::size_t task) { return ckpt.find(n, task) != nullptr; };
    if (opt.progress) so.on_task_done = [&](std::size_t, std::size_t done, std::size_t total) { opt.progress(n, done, total); };
    auto accs = parallel_sweep<TaskAcc>(
        fam, n,
        [&](TaskAcc& a, const Permutation& tau) {
          ++a.total;
          if (!any(classical, TextIndex(tau))) {
            // Classical avoidance implies avoidance in every coarser order.
            ++a.classical, ++a.i_prime, ++a.order;
            return;
          }
          const InvolutionIndex idx(tau);
          const bool in_order = !any(order, idx);
          const bool in_prime = part == 1 && (in_order || !any(prime, idx));
          a.order += in_order;
          a.i_prime += in_prime;
          if (!a.witness && (in_order || in_prime)) {
            a.witness = tau;
            a.kind = in_order ? 'I' : 'P';
          }
        },
        so, [&](std::size_t task, const TaskAcc& a) { ckpt.record(n, task, a); });

    McGovernRow row;
    row.n = n;
    for (std::size_t t = 0; t < accs.size(); ++t) {
      const TaskAcc& a = ckpt.find(n, t) ? *ckpt.find(n, t) : accs[t];
      row.total += a.total;
      row.classical += a.classical;
      row.i_prime += a.i_prime;
      row.order += a.order;
      if (!rep.counterexample && a.witness) rep.counterexample = McGovernCounterexample{*a.witness, kind_text(part, a.kind)};
    }
    if (part == 2) row.i_prime = row.order;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace

const McGovernSets& mcgovern_sets() {
  static const McGovernSets sets{
      parse_list({"14325", "21543", "32154", "154326", "124356", "351624", "132546", "426153", "153624", "351426",
                  "1243576", "2135467", "2137654", "4321576", "5276143", "5472163", "1657324", "4651327", "57681324",
                  "65872143", "13247856", "34125768", "34127856", "64827153"}),
      parse_list({"351624", "64827153", "57681324", "53281764", "43218765", "65872143", "21654387", "21563487",
                  "34127856", "43217856", "34128765", "36154287", "21754836", "63287154", "54821763", "46513287",
                  "21768435"}),
      parse_list({"2143", "1324"}),
  };
  return sets;
}

PatternSet part1_patterns(Mode mode) {
  auto v = mcgovern_sets().pi;
  const auto& extra = mcgovern_sets().smooth_extra;
  v.insert(v.end(), extra.begin(), extra.end());
  return PatternSet(std::move(v), mode);
}

PatternSet part2_patterns(Mode mode) { return PatternSet(mcgovern_sets().pi_prime, mode); }

bool McGovernRow::equal() const noexcept { return classical == order && order == i_prime; }

std::string McGovernReport::to_text() const {
  std::ostringstream os;
  if (part == 1) os << "I'(P) = I(P) = I_S(P) for P = " << patterns << '\n';
  else os << "F(P) = F_S(P) for P = " << patterns << '\n';
  for (const auto& r : rows) {
    os << "  n=" << r.n << "  total " << r.total << "  classical " << r.classical;
    if (part == 1) os << "  I' " << r.i_prime << "  I " << r.order;
    else os << "  F " << r.order;
    os << "  " << (r.equal() ? "equal" : "DIFFERENT") << '\n';
  }
  if (counterexample) os << "counterexample: " << counterexample->element.to_string() << "  (" << counterexample->inclusion << ")\n";
  else os << "equal at all sizes <= " << max_size << '\n';
  return os.str();
}

std::string McGovernReport::to_rows(char d) const {
  std::ostringstream os;
  os << "n" << d << "total" << d << "classical" << d << "i_prime" << d << "order" << d << "equal\n";
  for (const auto& r : rows)
    os << r.n << d << r.total << d << r.classical << d << r.i_prime << d << r.order << d << (r.equal() ? "yes" : "no")
       << '\n';
  return os.str();
}

McGovernReport verify_classes(const PatternSet& patterns, Mode ambient, std::size_t max_size, const VerifyOptions& opt) {
  return run(patterns.with_mode(Mode::Classical), ambient, max_size, opt);
}

McGovernReport verify_part1(std::size_t max_size, const VerifyOptions& opt) {
  return run(part1_patterns(Mode::Classical), Mode::I, max_size, opt);
}

McGovernReport verify_part2(std::size_t max_size, const VerifyOptions& opt) {
  return run(part2_patterns(Mode::Classical), Mode::F, max_size, opt);
}

bool rational_smoothness_F(const Permutation& rho) {
  if (!is_fpf_involution(rho)) throw InvalidInput(rho.to_string() + " is not a fixed-point-free involution");
  static const Avoider avoider(part2_patterns(Mode::F));
  return avoider.avoids(rho);
}

bool rational_smoothness_I(const Permutation& tau) {
  if (!is_involution(tau)) throw InvalidInput(tau.to_string() + " is not an involution");
  static const Avoider avoider(PatternSet(mcgovern_sets().pi, Mode::IPrime));
  return avoider.avoids(tau) && satisfies_21s43(Involution(tau));
}

bool smoothness_I(const Permutation& tau) {
  if (!is_involution(tau)) throw InvalidInput(tau.to_string() + " is not an involution");
  static const Avoider avoider(part1_patterns(Mode::IPrime));
  return avoider.avoids(tau);
}

}  // namespace invpat
