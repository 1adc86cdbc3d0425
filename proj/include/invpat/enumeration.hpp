#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invpat/bigint.hpp"
#include "invpat/classes.hpp"
#include "invpat/polynomial.hpp"

namespace invpat {

// ---- brute-force counting --------------------------------------------------

struct CountTable {
  Mode ambient = Mode::I;
  PatternSet patterns;
  std::map<std::size_t, BigInt> counts;                                       // n -> |avoiders|
  std::optional<std::map<std::pair<std::size_t, std::size_t>, BigInt>> refined;  // (n, fix) -> count

  /// Sum of t^(number of 2-cycles) over the size-n avoiders; needs `refined`.
  PolynomialInT two_cycle_polynomial(std::size_t n) const;
  /// Refined entries sum to the totals.
  bool consistent() const;

  std::string to_text() const;
  /// "n,count" or, when refined, "n,m,count" rows after a header line.
  std::string to_rows(char delimiter = ',') const;
};

/// Adds the size-n row (and refined rows) of avoiders of `ps` in the ambient family.
void count_avoiders(CountTable& table, std::size_t n, unsigned threads = 1);
CountTable count_table(const PatternSet& ps, Mode ambient, std::size_t from, std::size_t to,
                       bool refine_by_fixed_points, unsigned threads = 1);
BigInt count_avoiders(const PatternSet& ps, Mode ambient, std::size_t n, unsigned threads = 1);

// ---- closed forms ----------------------------------------------------------

BigInt formula_I321(std::size_t n);           // binom(n, floor(n/2))
PolynomialInT formula_I132_poly(std::size_t n);  // sum_k binom(n-k, k) k! t^k
BigInt formula_I132(std::size_t n);
BigInt formula_I123(std::size_t n);
BigInt formula_I2143(std::size_t n);          // sum_k binom(n, 2k) k!
BigInt formula_I12(std::size_t n);            // floor(n/2)!
BigInt formula_F2143(std::size_t n);          // (n/2)! for even n, else 0

struct NamedFormula {
  std::string name;
  PatternSet patterns;
  Mode ambient;
  BigInt (*value)(std::size_t);
};
/// Closed forms with the class they count, keyed by short names (321, 132, 213, 123, 2143, 12, F2143).
const std::vector<NamedFormula>& known_formulas();
const NamedFormula* find_formula(const PatternSet& ps, Mode ambient);

// ---- (p,q) continued fraction ----------------------------------------------

BigInt pq_integer(long k, long p, long q);  // [k]_{p,q}
/// Via the Pascal-type recurrence binom(n,k) = p^(n-k) binom(n-1,k-1) + q^k binom(n-1,k).
BigInt pq_binomial(long n, long k, long p, long q);
/// Via the product/quotient formula; nullopt when a denominator factor vanishes.
std::optional<BigInt> pq_binomial_quotient(long n, long k, long p, long q);

/// D_1 .. D_N of the continued fraction sum_n D_{n+1} x^n, as polynomials in t.
std::vector<PolynomialInT> d_series(long p, long q, std::size_t N);

// ---- identities ------------------------------------------------------------

struct IdentityRow {
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::string lhs, rhs;
  bool ok = false;
};

struct IdentityReport {
  std::string title;
  std::vector<IdentityRow> rows;
  bool ok() const noexcept;
  std::string to_text() const;
  std::string to_rows(char delimiter = ',') const;
};

/// 2 a(n) = 3 a(n-1) + (n-1) a(n-2) - (n-1) a(n-3) with a = |I_n(132)|, 4 <= n <= n_max.
IdentityReport check_recurrence_132(std::size_t n_max);

/// |I_{n,m}(R)| = binom(n,m) |F_{n-m}(R)| for n <= n_max, and |I_{n,S}(R)| = |F_{n-|S|}(R)|
/// for every fixed-point set S when n <= s_refined_max. R must be fixed-point-free.
IdentityReport check_fixed_point_identity(const PatternSet& R, std::size_t n_max,
                                          std::size_t s_refined_max = 8, unsigned threads = 1);

/// |I_n(m+1..2m 1..m)| = |I_n(2m..1)| for n <= n_max.
IdentityReport check_corollary_stanley(std::size_t m, std::size_t n_max, unsigned threads = 1);

/// |I_n(R)| = sum_m binom(n,m) |F_{n-m}(R)|, the coefficientwise form of I_R = e^x F_R.
IdentityReport egf_identity_report(const PatternSet& R, std::size_t n_max, unsigned threads = 1);

/// Patterns m+1 .. 2m 1 .. m and 2m .. 1.
Permutation stanley_crossing_pattern(std::size_t m);
Permutation stanley_nesting_pattern(std::size_t m);

}  // namespace invpat
