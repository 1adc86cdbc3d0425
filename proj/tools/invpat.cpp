// Command-line front end: count, basis, verify-mcgovern, bijection, identities.

#include <algorithm>
#include <bit>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "invpat/bijections.hpp"
#include "invpat/classes.hpp"
#include "invpat/enumeration.hpp"
#include "invpat/generate.hpp"
#include "invpat/kernels.hpp"
#include "invpat/mcgovern.hpp"

using namespace invpat;

namespace {

struct RunConfig {
  std::string patterns;
  std::string patterns_file;
  bool patterns_given = false;
  std::string mode = "I";
  std::string ambient;
  std::size_t from = 1, to = 0;
  std::size_t bound = 0;
  std::string format = "text";
  char delimiter = ',';
  unsigned threads = 0;
  bool long_run = false;

  bool rows() const { return format == "rows"; }
};

// "@pi", "@pi-prime" and "@smooth" name the embedded lists.
PatternSet load_patterns(const RunConfig& cfg, Mode mode) {
  PatternSet out({}, mode);
  if (!cfg.patterns_file.empty()) out = out.united(PatternSet::from_file(cfg.patterns_file, mode));
  std::istringstream is(cfg.patterns);
  std::string inline_text, tok;
  while (is >> tok) {
    if (tok == "@pi") out = out.united(PatternSet(mcgovern_sets().pi, mode));
    else if (tok == "@pi-prime") out = out.united(part2_patterns(mode));
    else if (tok == "@smooth") out = out.united(part1_patterns(mode));
    else inline_text += tok + " ";
  }
  return out.united(PatternSet::parse(inline_text, mode));
}

Mode default_ambient(Mode avoidance) {
  if (avoidance == Mode::F) return Mode::F;
  return Mode::I;
}

// ---- count -----------------------------------------------------------------

int cmd_count(const RunConfig& cfg, bool refine, bool with_formula) {
  const Mode mode = parse_mode(cfg.mode);
  const Mode ambient = cfg.ambient.empty() ? default_ambient(mode) : parse_mode(cfg.ambient);
  const PatternSet ps = load_patterns(cfg, mode);
  if (cfg.to < cfg.from) throw InvalidInput("--to must be at least --from");

  CountTable table;
  table.ambient = ambient;
  table.patterns = ps;
  if (refine) table.refined.emplace();
  for (std::size_t n = cfg.from; n <= cfg.to; ++n) {
    if (ambient == Mode::F && n % 2) continue;
    count_avoiders(table, n, cfg.threads);
  }

  if (!with_formula) {
    std::cout << (cfg.rows() ? table.to_rows(cfg.delimiter) : table.to_text());
    return 0;
  }
  const NamedFormula* f = find_formula(ps, ambient);
  if (!f) throw InvalidInput("no closed form is known for " + ps.to_string() + " in " + std::string(to_string(ambient)));
  bool all = true;
  const char d = cfg.delimiter;
  if (cfg.rows()) std::cout << "n" << d << "count" << d << "formula" << d << "match\n";
  else std::cout << "avoiders of " << ps.to_string() << " against closed form " << f->name << '\n';
  for (const auto& [n, c] : table.counts) {
    const BigInt v = f->value(n);
    const bool ok = v == c;
    all = all && ok;
    if (cfg.rows()) std::cout << n << d << c.str() << d << v.str() << d << (ok ? "yes" : "no") << '\n';
    else std::cout << "n=" << n << "  brute " << c.str() << "  formula " << v.str() << "  " << (ok ? "match" : "MISMATCH") << '\n';
  }
  return all ? 0 : 1;
}

// ---- basis -----------------------------------------------------------------

int cmd_basis(const RunConfig& cfg) {
  const PatternSet ps = load_patterns(cfg, Mode::Classical);
  if (ps.empty()) throw InvalidInput("basis needs at least one pattern");
  const Mode ambient = parse_mode(cfg.ambient.empty() ? "I" : cfg.ambient);
  const std::size_t bound = cfg.bound ? cfg.bound : 2 * ps.max_pattern_size();
  const auto report = compute_basis(ps, ambient, bound, cfg.threads);
  std::cout << (cfg.rows() ? report.to_rows(cfg.delimiter) : report.to_text());
  return 0;
}

// ---- verify-mcgovern -------------------------------------------------------

int cmd_verify_mcgovern(const RunConfig& cfg, int part, const std::string& checkpoint, bool progress) {
  const std::size_t to = cfg.to ? cfg.to : 12;
  if (to > 12 && !cfg.long_run) throw InvalidInput("sizes above 12 need --long-run");
  VerifyOptions opt;
  opt.threads = cfg.threads;
  opt.checkpoint_path = checkpoint;
  if (progress)
    opt.progress = [](std::size_t n, std::size_t done, std::size_t total) {
      std::cerr << "\rn=" << n << "  " << done << "/" << total << " prefixes" << (done == total ? "\n" : "") << std::flush;
    };
  bool ok = true;
  for (int p : {1, 2}) {
    if (part && part != p) continue;
    std::string ck = checkpoint;
    if (!ck.empty() && !part) ck += p == 1 ? ".part1" : ".part2";
    opt.checkpoint_path = ck;
    const auto rep = p == 1 ? verify_part1(to, opt) : verify_part2(to, opt);
    std::cout << (cfg.rows() ? rep.to_rows(cfg.delimiter) : rep.to_text());
    ok = ok && rep.ok();
  }
  return ok ? 0 : 1;
}

// ---- bijection -------------------------------------------------------------

struct RoundTrip {
  std::string name;
  std::size_t checked = 0, failed = 0;
  std::string note;
};

std::vector<RoundTrip> round_trips(std::size_t n_max) {
  std::vector<RoundTrip> out;
  {
    RoundTrip r{"f (I(12) -> S)", 0, 0, ""};
    for (std::size_t n = 1; n <= n_max; ++n)
      for_each_involution(n, [&](const Permutation& t) {
        if (contains_fast(t, Permutation{1, 2}, Mode::I)) return;
        ++r.checked;
        if (f_inv(f_map(t), n % 2) != t) ++r.failed;
      });
    out.push_back(r);
  }
  {
    RoundTrip r{"chi (S_{n+1} -> LH_n)", 0, 0, ""};
    for (std::size_t n = 0; n + 1 <= std::min<std::size_t>(n_max, 8); ++n) {
      std::set<LaguerreHistory> image;
      for_each_permutation(n + 1, [&](const Permutation& s) {
        ++r.checked;
        const auto h = chi(s);
        image.insert(h);
        if (!h.valid() || chi_inv(h) != s) ++r.failed;
      });
      if (image.size() != all_laguerre_histories(n).size()) ++r.failed, r.note = "image size differs from |LH_n|";
    }
    out.push_back(r);
  }
  {
    RoundTrip r{"phi (DP'_{k} -> LH_{k-1})", 0, 0, ""};
    for (std::size_t k = 1; 2 * k <= std::max<std::size_t>(n_max, 2); ++k)
      for (const auto& d : all_labeled_dyck_paths(k)) {
        ++r.checked;
        if (phi_inv(phi(d)) != d) ++r.failed;
      }
    out.push_back(r);
  }
  {
    RoundTrip r{"psi (AP_n -> Y x DP')", 0, 0, ""};
    for (std::size_t n = 0; n <= n_max; ++n)
      for (const auto& a : all_andre_paths(n)) {
        ++r.checked;
        const auto [y, d] = psi(a);
        if (psi_inv(y, d) != a) ++r.failed;
      }
    out.push_back(r);
  }
  {
    RoundTrip r{"omega (I_n(132) -> AP_n)", 0, 0, ""};
    for (std::size_t n = 0; n <= n_max; ++n) {
      std::set<AndrePath> image;
      for_each_involution(n, [&](const Permutation& t) {
        if (contains_fast(t, Permutation{1, 3, 2}, Mode::I)) return;
        ++r.checked;
        const auto a = omega(t);
        image.insert(a);
        const auto fixed = static_cast<std::size_t>(std::popcount(remove_fixed_points(t).fixed));
        if (omega_inv(a) != t || a.path.count(Step::L) != fixed) ++r.failed;
      });
      if (image.size() != all_andre_paths(n).size()) ++r.failed, r.note = "image size differs from |AP_n|";
    }
    out.push_back(r);
  }
  return out;
}

std::string cycle_form(const Permutation& p) { return Involution(p).to_cycle_string(); }

int cmd_bijection(const RunConfig& cfg, const std::string& omega_in, const std::string& omega_inv_in,
                  const std::string& chi_in, std::size_t check_to) {
  int status = 0;
  bool did = false;
  if (!omega_in.empty()) {
    did = true;
    const Permutation tau = Involution::parse(omega_in).perm();
    const AndrePath a = omega(tau);
    std::cout << "involution " << tau.to_string() << " = " << cycle_form(tau) << '\n';
    std::cout << "andre path " << (a.path.steps.empty() ? "(empty)" : a.path.word()) << " / labels "
              << a.labels_string() << '\n';
    const bool ok = omega_inv(a) == tau;
    std::cout << "round trip " << (ok ? "ok" : "FAILED") << '\n';
    if (!ok) status = 1;
  }
  if (!omega_inv_in.empty()) {
    did = true;
    AndrePath a;
    static_cast<LabeledPath&>(a) = LabeledPath::parse(omega_inv_in);
    if (!a.valid()) throw InvalidInput("not an André path: " + omega_inv_in);
    const Permutation tau = omega_inv(a);
    std::cout << "andre path " << (a.path.steps.empty() ? "(empty)" : a.path.word()) << " / labels "
              << a.labels_string() << '\n';
    std::cout << "involution " << tau.to_string() << " = " << cycle_form(tau) << '\n';
    const bool ok = omega(tau) == a;
    std::cout << "round trip " << (ok ? "ok" : "FAILED") << '\n';
    if (!ok) status = 1;
  }
  if (!chi_in.empty()) {
    did = true;
    const Permutation s = Permutation::parse(chi_in);
    const auto h = chi(s);
    std::cout << "permutation " << s.to_string() << '\n' << "laguerre history " << h.to_string() << '\n';
    std::cout << "labeled dyck path " << phi_inv(h).to_string() << '\n';
  }
  if (check_to) {
    did = true;
    const char d = cfg.delimiter;
    if (cfg.rows()) std::cout << "map" << d << "checked" << d << "failed\n";
    for (const auto& r : round_trips(check_to)) {
      if (cfg.rows()) std::cout << delimited_field(r.name, d) << d << r.checked << d << r.failed << '\n';
      else std::cout << r.name << ": " << r.checked << " checked, " << (r.failed ? std::to_string(r.failed) + " FAILED" : "all round trips ok")
                     << (r.note.empty() ? "" : "  (" + r.note + ")") << '\n';
      if (r.failed) status = 1;
    }
  }
  if (!did) throw InvalidInput("nothing to do: give --omega, --omega-inv, --chi or --check");
  return status;
}

// ---- identities ------------------------------------------------------------

int cmd_identities(const RunConfig& cfg, bool recurrence, bool fixed_points, bool egf, bool stanley, std::size_t m,
                   bool cf, long p, long q, std::size_t s_max) {
  int status = 0;
  bool did = false;
  auto emit = [&](const IdentityReport& r) {
    did = true;
    std::cout << (cfg.rows() ? r.to_rows(cfg.delimiter) : r.to_text());
    if (!r.ok()) status = 1;
  };
  const std::size_t to = cfg.to ? cfg.to : 10;
  if (recurrence) emit(check_recurrence_132(to));
  if (fixed_points || egf) {
    const PatternSet r = load_patterns(cfg, Mode::F);
    if (fixed_points) emit(check_fixed_point_identity(r, to, s_max, cfg.threads));
    if (egf) emit(egf_identity_report(r, to, cfg.threads));
  }
  if (stanley) emit(check_corollary_stanley(m, to, cfg.threads));
  if (cf) {
    did = true;
    const auto d = d_series(p, q, to);
    const char dl = cfg.delimiter;
    if (cfg.rows()) std::cout << "n" << dl << "D_n\n";
    else std::cout << "D_n(" << p << "," << q << ",t)\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (cfg.rows()) std::cout << i + 1 << dl << delimited_field(d[i].to_string(), dl) << '\n';
      else std::cout << "  D_" << i + 1 << " = " << d[i].to_string() << '\n';
    }
  }
  if (!did) throw InvalidInput("nothing to do: give --recurrence, --fixed-points, --egf, --stanley or --continued-fraction");
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invpat: pattern avoidance in involutions and matchings"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string simd;
  app.add_option("--threads,-j", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "rows"}));
  app.add_option("--delimiter", cfg.delimiter, "field delimiter for --format rows");
  app.add_option("--simd", simd, "kernel variant (scalar, sse2, avx2)");

  auto add_patterns = [&](CLI::App* sub) {
    sub->add_option("--patterns", cfg.patterns, "patterns separated by spaces or ';' (@pi, @pi-prime, @smooth name the built-in lists)");
    sub->add_option("--patterns-file", cfg.patterns_file, "one pattern per line, '#' comments");
  };

  auto* count = app.add_subcommand("count", "count avoiders size by size");
  add_patterns(count);
  bool refine = false, formula = false;
  count->add_option("--mode", cfg.mode, "avoidance order: classical, I, IPrime, F");
  count->add_option("--ambient", cfg.ambient, "ambient family (defaults to F for --mode F, else I)");
  count->add_option("--from", cfg.from, "smallest size");
  count->add_option("--to", cfg.to, "largest size")->required();
  count->add_flag("--refine", refine, "split counts by number of fixed points");
  count->add_flag("--formula", formula, "compare with the known closed form");

  auto* basis = app.add_subcommand("basis", "basis of a classical class inside I, IPrime or F");
  add_patterns(basis);
  basis->add_option("--ambient", cfg.ambient, "I, IPrime or F");
  basis->add_option("--bound", cfg.bound, "largest size searched (default twice the largest pattern)");

  auto* mcg = app.add_subcommand("verify-mcgovern", "exhaustive check of the smoothness pattern lists");
  int part = 0;
  std::string checkpoint;
  bool progress = false;
  mcg->add_option("--part", part, "1 or 2 (default both)")->check(CLI::Range(1, 2));
  mcg->add_option("--to", cfg.to, "largest size (default 12)");
  mcg->add_flag("--long-run", cfg.long_run, "allow sizes above 12");
  mcg->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
  mcg->add_flag("--progress", progress, "progress on stderr");

  auto* bij = app.add_subcommand("bijection", "maps between involutions, permutations and paths");
  std::string omega_in, omega_inv_in, chi_in;
  std::size_t check_to = 0;
  bij->add_option("--omega", omega_in, "involution in I(132) to map to an André path");
  bij->add_option("--omega-inv", omega_inv_in, "André path, e.g. \"UD (1)\", to map back");
  bij->add_option("--chi", chi_in, "permutation to map to a Laguerre history");
  bij->add_option("--check", check_to, "exhaustive round trips up to this size");

  auto* ids = app.add_subcommand("identities", "enumerative identities");
  add_patterns(ids);
  bool recurrence = false, fixed_points = false, egf = false, stanley = false, cf = false;
  std::size_t m = 2, s_max = 8;
  long p = 1, q = -1;
  ids->add_option("--to", cfg.to, "largest size (default 10)");
  ids->add_flag("--recurrence", recurrence, "three-term recurrence for I_n(132)");
  ids->add_flag("--fixed-points", fixed_points, "fixed-point identity for the fixed-point-free --patterns");
  ids->add_option("--s-max", s_max, "largest size for the per-set refinement");
  ids->add_flag("--egf", egf, "coefficient form of the exponential generating function identity");
  ids->add_flag("--stanley", stanley, "crossing/nesting equality");
  ids->add_option("--m", m, "half-size of the Stanley patterns");
  ids->add_flag("--continued-fraction", cf, "print D_1..D_to");
  ids->add_option("--p", p, "p for --continued-fraction");
  ids->add_option("--q", q, "q for --continued-fraction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  for (auto* sub : {count, basis, ids})
    cfg.patterns_given = cfg.patterns_given || sub->count("--patterns") || sub->count("--patterns-file");

  try {
    if (!simd.empty() && !kernels::select(simd)) throw InvalidInput("kernel variant " + simd + " is not available");
    if (count->parsed()) return cmd_count(cfg, refine, formula);
    if (basis->parsed()) return cmd_basis(cfg);
    if (mcg->parsed()) return cmd_verify_mcgovern(cfg, part, checkpoint, progress);
    if (bij->parsed()) return cmd_bijection(cfg, omega_in, omega_inv_in, chi_in, check_to);
    if (ids->parsed()) {
      if ((fixed_points || egf) && !cfg.patterns_given) throw InvalidInput("--fixed-points and --egf need --patterns");
      return cmd_identities(cfg, recurrence, fixed_points, egf, stanley, m, cf, p, q, s_max);
    }
  } catch (const std::exception& e) {
    std::cerr << "invpat: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
