#include "invpat/enumeration.hpp"

#include <bit>
#include <sstream>

namespace invpat {

// ---- counting --------------------------------------------------------------

void count_avoiders(CountTable& table, std::size_t n, unsigned threads) {
  const Avoider avoider(table.patterns);
  struct Acc {
    std::vector<std::uint64_t> by_fix;
  };
  SweepOptions opt;
  opt.threads = threads;
  auto accs = parallel_sweep<Acc>(
      ambient_family(table.ambient), n,
      [&](Acc& a, const Permutation& p) {
        if (!avoider.avoids(p)) return;
        if (a.by_fix.empty()) a.by_fix.assign(n + 1, 0);
        ++a.by_fix[static_cast<std::size_t>(
            std::popcount(kernels::active().cycle_roles(p.storage().data(), n).fixed))];
      },
      opt);
  std::vector<BigInt> by_fix(n + 1);
  for (const auto& a : accs)
    for (std::size_t m = 0; m < a.by_fix.size(); ++m) by_fix[m] += a.by_fix[m];
  BigInt total = 0;
  for (const auto& c : by_fix) total += c;
  table.counts[n] = total;
  if (table.refined)
    for (std::size_t m = 0; m <= n; ++m) (*table.refined)[{n, m}] = by_fix[m];
}

CountTable count_table(const PatternSet& ps, Mode ambient, std::size_t from, std::size_t to,
                       bool refine_by_fixed_points, unsigned threads) {
  CountTable t;
  t.ambient = ambient;
  t.patterns = ps;
  if (refine_by_fixed_points) t.refined.emplace();
  for (std::size_t n = from; n <= to; ++n) count_avoiders(t, n, threads);
  return t;
}

BigInt count_avoiders(const PatternSet& ps, Mode ambient, std::size_t n, unsigned threads) {
  CountTable t;
  t.ambient = ambient;
  t.patterns = ps;
  count_avoiders(t, n, threads);
  return t.counts.at(n);
}

PolynomialInT CountTable::two_cycle_polynomial(std::size_t n) const {
  if (!refined) throw InvalidInput("count table has no fixed-point refinement");
  std::vector<BigInt> c(n / 2 + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    auto it = refined->find({n, m});
    if (it == refined->end() || (n - m) % 2) continue;
    c[(n - m) / 2] += it->second;
  }
  return PolynomialInT(std::move(c));
}

bool CountTable::consistent() const {
  if (!refined) return true;
  for (const auto& [n, total] : counts) {
    BigInt s = 0;
    for (std::size_t m = 0; m <= n; ++m)
      if (auto it = refined->find({n, m}); it != refined->end()) s += it->second;
    if (s != total) return false;
  }
  return true;
}

std::string CountTable::to_text() const {
  std::ostringstream os;
  os << "avoiders of " << patterns.to_string() << " (" << to_string(patterns.mode()) << " order) in "
     << to_string(ambient_family(ambient)) << "_n\n";
  std::size_t width = 1;
  for (const auto& [n, c] : counts) width = std::max(width, c.str().size());
  for (const auto& [n, c] : counts) {
    os << "n=" << n << (n < 10 ? "  " : " ");
    const std::string s = c.str();
    os << std::string(width - s.size(), ' ') << s;
    if (refined) {
      os << "   by fixed points:";
      for (std::size_t m = 0; m <= n; ++m) os << ' ' << refined->at({n, m}).str();
    }
    os << '\n';
  }
  return os.str();
}

std::string CountTable::to_rows(char d) const {
  std::ostringstream os;
  if (refined) {
    os << "n" << d << "m" << d << "count\n";
    for (const auto& [key, c] : *refined) os << key.first << d << key.second << d << c.str() << '\n';
  } else {
    os << "n" << d << "count\n";
    for (const auto& [n, c] : counts) os << n << d << c.str() << '\n';
  }
  return os.str();
}

// ---- closed forms ----------------------------------------------------------

BigInt formula_I321(std::size_t n) { return binomial(static_cast<long>(n), static_cast<long>(n / 2)); }

PolynomialInT formula_I132_poly(std::size_t n) {
  std::vector<BigInt> c(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k)
    c[k] = binomial(static_cast<long>(n - k), static_cast<long>(k)) * factorial(static_cast<unsigned>(k));
  return PolynomialInT(std::move(c));
}

BigInt formula_I132(std::size_t n) { return formula_I132_poly(n).evaluate(1); }

BigInt formula_I123(std::size_t n) {
  BigInt s = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t h = k / 2;
    s += factorial(static_cast<unsigned>(h)) * factorial(static_cast<unsigned>((n - k) / 2)) *
         binomial(static_cast<long>(n - h) - 1, static_cast<long>(n - k));
  }
  return s;
}

BigInt formula_I2143(std::size_t n) {
  BigInt s = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k)
    s += binomial(static_cast<long>(n), static_cast<long>(2 * k)) * factorial(static_cast<unsigned>(k));
  return s;
}

BigInt formula_I12(std::size_t n) { return factorial(static_cast<unsigned>(n / 2)); }

BigInt formula_F2143(std::size_t n) { return n % 2 ? BigInt(0) : factorial(static_cast<unsigned>(n / 2)); }

const std::vector<NamedFormula>& known_formulas() {
  static const std::vector<NamedFormula> table = {
      {"321", PatternSet::parse("321", Mode::I), Mode::I, formula_I321},
      {"132", PatternSet::parse("132", Mode::I), Mode::I, formula_I132},
      {"213", PatternSet::parse("213", Mode::I), Mode::I, formula_I132},
      {"123", PatternSet::parse("123", Mode::I), Mode::I, formula_I123},
      {"2143", PatternSet::parse("2143", Mode::I), Mode::I, formula_I2143},
      {"12", PatternSet::parse("12", Mode::I), Mode::I, formula_I12},
      {"F2143", PatternSet::parse("2143", Mode::F), Mode::F, formula_F2143},
  };
  return table;
}

const NamedFormula* find_formula(const PatternSet& ps, Mode ambient) {
  for (const auto& f : known_formulas())
    if (f.patterns == ps && f.ambient == ambient) return &f;
  return nullptr;
}

// ---- (p,q) continued fraction ----------------------------------------------

namespace {

BigInt ipow(long base, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

using Series = std::vector<PolynomialInT>;  // coefficient of x^i at index i

// 1 / (1 - a), a with zero constant term, truncated to a.size() terms.
Series invert_one_minus(const Series& a) {
  Series b(a.size());
  if (b.empty()) return b;
  b[0] = PolynomialInT(1);
  for (std::size_t n = 1; n < a.size(); ++n) {
    PolynomialInT s;
    for (std::size_t i = 1; i <= n; ++i)
      if (!a[i].is_zero() && !b[n - i].is_zero()) s += a[i] * b[n - i];
    b[n] = s;
  }
  return b;
}

}  // namespace

BigInt pq_integer(long k, long p, long q) {
  BigInt s = 0;
  for (long i = 0; i < k; ++i) s += ipow(p, i) * ipow(q, k - 1 - i);
  return s;
}

BigInt pq_binomial(long n, long k, long p, long q) {
  if (k < 0 || n < 0 || k > n) return 0;
  // Row-by-row Pascal table; n is small in practice.
  std::vector<BigInt> row{1};
  for (long m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m + 1));
    for (long j = 0; j <= m; ++j) {
      BigInt v = 0;
      if (j >= 1) v += ipow(p, m - j) * row[static_cast<std::size_t>(j - 1)];
      if (j <= m - 1) v += ipow(q, j) * row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

std::optional<BigInt> pq_binomial_quotient(long n, long k, long p, long q) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= pq_integer(n - i, p, q);
    den *= pq_integer(i + 1, p, q);
  }
  if (den == 0) return std::nullopt;
  if (num % den != 0) throw InvalidInput("(p,q)-binomial quotient is not exact");
  return num / den;
}

std::vector<PolynomialInT> d_series(long p, long q, std::size_t N) {
  if (N == 0) return {};
  const std::size_t depth = N;
  Series tail(N);  // S_{depth} truncated to zero
  for (std::size_t j = depth; j-- > 0;) {
    const long level = static_cast<long>(j);
    Series a(N);
    if (N > 1) a[1] = PolynomialInT(pq_integer(level + 1, p, q));
    const PolynomialInT weight = PolynomialInT::monomial(pq_binomial(level + 2, 2, p, q), 1);
    for (std::size_t i = 0; i + 2 < N; ++i)
      if (!tail[i].is_zero()) a[i + 2] += weight * tail[i];
    tail = invert_one_minus(a);
  }
  return tail;  // index n holds D_{n+1}
}

// ---- identities ------------------------------------------------------------

bool IdentityReport::ok() const noexcept {
  for (const auto& r : rows)
    if (!r.ok) return false;
  return true;
}

std::string IdentityReport::to_text() const {
  std::ostringstream os;
  os << title << '\n';
  for (const auto& r : rows) {
    os << "  n=" << r.n;
    if (r.m) os << " m=" << *r.m;
    os << "  " << r.lhs << (r.ok ? " == " : " != ") << r.rhs << '\n';
  }
  os << (ok() ? "all equal" : "MISMATCH") << '\n';
  return os.str();
}

std::string IdentityReport::to_rows(char d) const {
  std::ostringstream os;
  os << "n" << d << "m" << d << "lhs" << d << "rhs" << d << "equal\n";
  for (const auto& r : rows)
    os << r.n << d << (r.m ? std::to_string(*r.m) : "") << d << delimited_field(r.lhs, d) << d
       << delimited_field(r.rhs, d) << d << (r.ok ? "yes" : "no") << '\n';
  return os.str();
}

IdentityReport check_recurrence_132(std::size_t n_max) {
  IdentityReport rep;
  rep.title = "2|I_n(132)| = 3|I_{n-1}(132)| + (n-1)|I_{n-2}(132)| - (n-1)|I_{n-3}(132)|";
  for (std::size_t n = 4; n <= n_max; ++n) {
    const BigInt lhs = 2 * formula_I132(n);
    const BigInt k = n - 1;
    const BigInt rhs = 3 * formula_I132(n - 1) + k * formula_I132(n - 2) - k * formula_I132(n - 3);
    rep.rows.push_back({n, std::nullopt, lhs.str(), rhs.str(), lhs == rhs});
  }
  return rep;
}

namespace {

void require_fpf_patterns(const PatternSet& R) {
  for (const auto& p : R.patterns())
    if (!is_fpf_involution(p)) throw ModeMismatch("pattern " + p.to_string() + " has fixed points");
}

std::vector<BigInt> fpf_counts(const PatternSet& R, std::size_t n_max, unsigned threads) {
  std::vector<BigInt> f(n_max + 1);
  const PatternSet rf = R.with_mode(Mode::F);
  for (std::size_t k = 0; k <= n_max; k += 2) f[k] = count_avoiders(rf, Mode::F, k, threads);
  return f;
}

}  // namespace

IdentityReport check_fixed_point_identity(const PatternSet& R, std::size_t n_max, std::size_t s_refined_max,
                                          unsigned threads) {
  require_fpf_patterns(R);
  IdentityReport rep;
  rep.title = "|I_{n,m}(R)| = binom(n,m) |F_{n-m}(R)| for R = " + R.to_string() +
              "; rows without m count fixed-point sets S with |I_{n,S}(R)| = |F_{n-|S|}(R)|";
  const auto f = fpf_counts(R, n_max, threads);
  const Avoider avoider(R.with_mode(Mode::I));
  for (std::size_t n = 0; n <= n_max; ++n) {
    const bool by_set = n <= s_refined_max;
    struct Acc {
      std::vector<std::uint64_t> by_fix;
      std::map<std::uint32_t, std::uint64_t> by_set;
    };
    SweepOptions opt;
    opt.threads = threads;
    auto accs = parallel_sweep<Acc>(
        Family::Involutions, n,
        [&](Acc& a, const Permutation& p) {
          if (!avoider.avoids(p)) return;
          const auto fixed = kernels::active().cycle_roles(p.storage().data(), n).fixed;
          if (a.by_fix.empty()) a.by_fix.assign(n + 1, 0);
          ++a.by_fix[static_cast<std::size_t>(std::popcount(fixed))];
          if (by_set) ++a.by_set[fixed];
        },
        opt);
    std::vector<BigInt> by_fix(n + 1);
    std::map<std::uint32_t, std::uint64_t> sets;
    for (const auto& a : accs) {
      for (std::size_t m = 0; m < a.by_fix.size(); ++m) by_fix[m] += a.by_fix[m];
      for (const auto& [s, c] : a.by_set) sets[s] += c;
    }
    for (std::size_t m = 0; m <= n; ++m) {
      const BigInt rhs = binomial(static_cast<long>(n), static_cast<long>(m)) * f[n - m];
      rep.rows.push_back({n, m, by_fix[m].str(), rhs.str(), by_fix[m] == rhs});
    }
    if (by_set) {
      std::uint64_t good = 0;
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t s = 0; s < total; ++s) {
        auto it = sets.find(static_cast<std::uint32_t>(s));
        const BigInt lhs = it == sets.end() ? BigInt(0) : BigInt(it->second);
        if (lhs == f[n - static_cast<std::size_t>(std::popcount(s))]) ++good;
      }
      rep.rows.push_back({n, std::nullopt, std::to_string(good) + " sets agree",
                          std::to_string(total) + " sets", good == total});
    }
  }
  return rep;
}

Permutation stanley_crossing_pattern(std::size_t m) {
  std::vector<int> w;
  for (std::size_t i = m + 1; i <= 2 * m; ++i) w.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i <= m; ++i) w.push_back(static_cast<int>(i));
  return Permutation(std::span<const int>(w));
}

Permutation stanley_nesting_pattern(std::size_t m) { return Permutation::longest(2 * m); }

IdentityReport check_corollary_stanley(std::size_t m, std::size_t n_max, unsigned threads) {
  if (m == 0) throw InvalidInput("m must be positive");
  const Permutation a = stanley_crossing_pattern(m), b = stanley_nesting_pattern(m);
  IdentityReport rep;
  rep.title = "|I_n(" + a.to_string() + ")| = |I_n(" + b.to_string() + ")|";
  const PatternSet pa({a}, Mode::I), pb({b}, Mode::I);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const BigInt x = count_avoiders(pa, Mode::I, n, threads), y = count_avoiders(pb, Mode::I, n, threads);
    rep.rows.push_back({n, std::nullopt, x.str(), y.str(), x == y});
  }
  return rep;
}

IdentityReport egf_identity_report(const PatternSet& R, std::size_t n_max, unsigned threads) {
  require_fpf_patterns(R);
  IdentityReport rep;
  rep.title = "|I_n(R)| = sum_m binom(n,m) |F_{n-m}(R)| for R = " + R.to_string();
  const auto f = fpf_counts(R, n_max, threads);
  const PatternSet ri = R.with_mode(Mode::I);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const BigInt lhs = count_avoiders(ri, Mode::I, n, threads);
    BigInt rhs = 0;
    for (std::size_t m = 0; m <= n; ++m) rhs += binomial(static_cast<long>(n), static_cast<long>(m)) * f[n - m];
    rep.rows.push_back({n, std::nullopt, lhs.str(), rhs.str(), lhs == rhs});
  }
  return rep;
}

}  // namespace invpat
