#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "invpat/enumeration.hpp"

using namespace invpat;

namespace {

// Brute-force oracle: every permutation of [n] via next_permutation, filtered to
// involutions, tested with the BFS containment (not the plan used by the library).
std::vector<std::vector<int>> brute_involutions(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = w[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] == i + 1;
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

long long brute_count(const char* pattern, int n, Mode order) {
  const Permutation pat = Permutation::parse(pattern);
  long long c = 0;
  for (const auto& w : brute_involutions(n)) {
    const Permutation p{std::span<const int>(w)};
    if (order == Mode::F && !is_fpf_involution(p)) continue;
    if (!contains(p, pat, order)) ++c;
  }
  return c;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients of the truncated continued fraction, computed numerically with
// doubles at a fixed t, by direct evaluation of nested fractions in x.
std::vector<long double> cf_numeric(long p, long q, long double t, std::size_t N) {
  auto pq = [&](long k) {
    long double s = 0;
    for (long i = 0; i < k; ++i) s += std::pow((long double)p, i) * std::pow((long double)q, k - 1 - i);
    return s;
  };
  auto pq_binom2 = [&](long n) {  // [n][n-1]/[2] when [2] != 0, else the recurrence value
    long double a = 0;            // binom(n,2) = p^{n-2} binom(n-1,1) + q^2 binom(n-1,2)
    long double prev = 0;         // binom(1,2) = 0
    for (long m = 2; m <= n; ++m) {
      a = std::pow((long double)p, m - 2) * pq(m - 1) + q * (long double)q * prev;
      prev = a;
    }
    return a;
  };
  std::vector<long double> tail(N, 0);
  for (std::size_t j = N; j-- > 0;) {
    std::vector<long double> a(N, 0);
    if (N > 1) a[1] = pq(static_cast<long>(j) + 1);
    const long double w = pq_binom2(static_cast<long>(j) + 2) * t;
    for (std::size_t i = 0; i + 2 < N; ++i) a[i + 2] += w * tail[i];
    std::vector<long double> b(N, 0);
    b[0] = 1;
    for (std::size_t n = 1; n < N; ++n)
      for (std::size_t i = 1; i <= n; ++i) b[n] += a[i] * b[n - i];
    tail = b;
  }
  return tail;
}

}  // namespace

TEST_CASE("counts match brute force") {
  for (const char* pat : {"12", "123", "132", "213", "321", "2143", "3412", "4321"})
    for (int n = 1; n <= 7; ++n) {
      INFO(pat << " n=" << n);
      CHECK(count_avoiders(PatternSet::parse(pat, Mode::I), Mode::I, static_cast<std::size_t>(n)) ==
            brute_count(pat, n, Mode::I));
    }
  for (const char* pat : {"2143", "3412", "4321"})
    for (int n = 2; n <= 8; n += 2)
      CHECK(count_avoiders(PatternSet::parse(pat, Mode::F), Mode::F, static_cast<std::size_t>(n)) ==
            brute_count(pat, n, Mode::F));
}

TEST_CASE("closed forms agree with enumeration") {
  for (const auto& f : known_formulas())
    for (std::size_t n = 1; n <= 11; ++n) {
      INFO(f.name << " n=" << n);
      CHECK(f.value(n) == count_avoiders(f.patterns, f.ambient, n));
    }
  CHECK(find_formula(PatternSet::parse("2143", Mode::F), Mode::F)->name == "F2143");
  CHECK(find_formula(PatternSet::parse("2143", Mode::I), Mode::I)->name == "2143");
  CHECK(find_formula(PatternSet::parse("4321", Mode::I), Mode::I) == nullptr);
  // Independent binomial sums.
  for (long long n = 1; n <= 15; ++n) {
    long long s = 0, f = 1;
    for (long long k = 0; 2 * k <= n; ++k) {
      if (k) f *= k;
      s += binom(n - k, k) * f;
    }
    CHECK(formula_I132(static_cast<std::size_t>(n)) == s);
    CHECK(formula_I321(static_cast<std::size_t>(n)) == binom(n, n / 2));
  }
}

TEST_CASE("refined tables") {
  const auto t = count_table(PatternSet::parse("132", Mode::I), Mode::I, 1, 9, true);
  CHECK(t.consistent());
  for (std::size_t n = 1; n <= 9; ++n) CHECK(t.two_cycle_polynomial(n) == formula_I132_poly(n));
  // 132 and 213 are exchanged by reverse-complement, which keeps the cycle type.
  const auto u = count_table(PatternSet::parse("213", Mode::I), Mode::I, 1, 9, true);
  CHECK(*t.refined == *u.refined);
  CHECK(formula_I132_poly(4).to_string() == "1 + 3t + 2t^2");
  CHECK(count_table(PatternSet::parse("321", Mode::I), Mode::I, 1, 3, false).to_rows() == "n,count\n1,1\n2,2\n3,3\n");
  CHECK_THROWS_AS(count_table(PatternSet::parse("321", Mode::I), Mode::I, 1, 3, false).two_cycle_polynomial(3),
                  InvalidInput);
  // Thread count does not change anything.
  const auto a = count_table(PatternSet::parse("4321", Mode::I), Mode::I, 8, 10, true, 1);
  const auto b = count_table(PatternSet::parse("4321", Mode::I), Mode::I, 8, 10, true, 4);
  CHECK(a.to_rows() == b.to_rows());
}

TEST_CASE("123 versus 132 ratio") {
  // |I_n(123)| / |I_n(132)| climbs from 1 at n = 4 but dips once, 7 -> 8, so only
  // the same-parity steps are monotone.
  auto ratio = [](std::size_t n) {
    return formula_I123(n).convert_to<double>() / formula_I132(n).convert_to<double>();
  };
  CHECK(ratio(4) == 1.0);
  for (std::size_t n = 6; n + 2 <= 14; ++n) CHECK(ratio(n + 2) > ratio(n));
  CHECK(ratio(8) < ratio(7));
  CHECK(ratio(14) > 1.8);
}

TEST_CASE("(p,q)-integers and binomials") {
  CHECK(pq_integer(0, 2, 3) == 0);
  CHECK(pq_integer(3, 2, 3) == 4 + 6 + 9);
  CHECK(pq_integer(4, 1, 1) == 4);
  CHECK(pq_integer(2, 1, -1) == 0);
  for (long p = -2; p <= 3; ++p)
    for (long q = -2; q <= 3; ++q)
      for (long n = 0; n <= 7; ++n)
        for (long k = 0; k <= n; ++k) {
          const auto viaq = pq_binomial_quotient(n, k, p, q);
          if (viaq) CHECK(*viaq == pq_binomial(n, k, p, q));
        }
  // [2]_{1,-1} = 0 so the quotient form is undefined, yet the recurrence still gives a value.
  CHECK_FALSE(pq_binomial_quotient(3, 2, 1, -1).has_value());
  CHECK(pq_binomial(3, 2, 1, -1) == 1);
  CHECK(pq_binomial(5, 2, 1, 1) == 10);
}

TEST_CASE("continued fraction") {
  // Compare with a floating-point evaluation of the same truncated fraction.
  for (long p = -2; p <= 3; ++p)
    for (long q = -1; q <= 2; ++q) {
      const auto d = d_series(p, q, 8);
      REQUIRE(d.size() == 8);
      for (long double t : {1.0L, 2.0L, -1.0L}) {
        const auto num = cf_numeric(p, q, t, 8);
        for (std::size_t i = 0; i < 8; ++i) {
          INFO("p=" << p << " q=" << q << " t=" << (double)t << " i=" << i);
          CHECK(d[i].evaluate(static_cast<long>(t)).convert_to<long double>() == doctest::Approx((double)num[i]));
        }
      }
    }
  // Small cases by hand: D_1 = 1, D_2 = [1]x coefficient = 1, D_3 = [1]^2 + binom(2,2) t = 1 + t.
  const auto d = d_series(1, 1, 4);
  CHECK(d[0] == PolynomialInT(1));
  CHECK(d[1] == PolynomialInT(1));
  CHECK(d[2] == PolynomialInT({1, 1}));
  // D_{n+1}(1,-1,1) = |I_n(132)|.
  const auto e = d_series(1, -1, 12);
  for (std::size_t n = 1; n + 1 < e.size(); ++n) CHECK(e[n].evaluate(1) == formula_I132(n));
}

TEST_CASE("identity reports") {
  CHECK(check_recurrence_132(20).ok());
  const auto id = check_fixed_point_identity(PatternSet::parse("2143", Mode::F), 8, 6);
  CHECK(id.ok());
  CHECK(id.to_rows().rfind("n,m,lhs,rhs,equal\n", 0) == 0);
  CHECK(id.to_text().find("all equal") != std::string::npos);
  CHECK_THROWS_AS(check_fixed_point_identity(PatternSet::parse("132", Mode::I), 4), ModeMismatch);
  CHECK(egf_identity_report(PatternSet::parse("3412 4321", Mode::F), 8).ok());
  CHECK(stanley_crossing_pattern(2) == Permutation::parse("3412"));
  CHECK(stanley_nesting_pattern(2) == Permutation::parse("4321"));
  CHECK(check_corollary_stanley(2, 9).ok());
  CHECK(check_corollary_stanley(1, 6).ok());
  IdentityReport bad;
  bad.rows.push_back({3, std::nullopt, "4", "3", false});
  CHECK_FALSE(bad.ok());
  CHECK(bad.to_text().find("MISMATCH") != std::string::npos);
}
