#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "invpat/generate.hpp"
#include "invpat/involution.hpp"
#include "invpat/statistics.hpp"

using namespace invpat;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }
Involution Inv(std::string_view s) { return Involution::parse(s); }

// Oracle: every permutation of [n] that squares to the identity, via next_permutation.
std::vector<Permutation> involutions_by_filter(std::size_t n, bool fpf_only) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = w[static_cast<std::size_t>(w[i] - 1)] == static_cast<int>(i + 1);
      if (fpf_only && w[i] == static_cast<int>(i + 1)) ok = false;
    }
    if (ok) out.push_back(Permutation(std::span<const int>(w)));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> code_oracle(const Permutation& t, bool strict) {
  const int n = static_cast<int>(t.size());
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    int c = 0;
    for (int j = 1; j <= n; ++j) {
      const int tj = t(static_cast<std::size_t>(j));
      const bool below = strict ? tj < i : tj <= i;
      if (below && i < j && t(static_cast<std::size_t>(i)) > tj) ++c;
    }
    out.push_back(c);
  }
  return out;
}

bool oracle_21s43(const Permutation& t) {
  const int n = static_cast<int>(t.size());
  auto tau = [&](int i) { return t(static_cast<std::size_t>(i)); };
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c) {
      const int b = tau(a), d = tau(c);
      if (!(a < b && b < c && c < d)) continue;
      int fixed = 0;
      for (int x = b; x <= c; ++x) fixed += tau(x) == x;
      if (fixed % 2 == 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("standardize") {
  CHECK(standardize(std::vector<int>{3, 6, 2}) == P("231"));
  CHECK(standardize(std::vector<int>{1, 2, 3}) == P("123"));
  CHECK(standardize(std::vector<double>{0.5, -2.0, 7.25}) == P("213"));
  CHECK_THROWS_AS(standardize(std::vector<int>{1, 4, 1}), InvalidInput);
  for (const auto& p : collect_family<Permutation>(Family::Permutations, 5)) {
    const auto v = p.to_vector();
    CHECK(standardize(v) == p);
  }
}

TEST_CASE("definition example deletes down to 1432") {
  // Keep positions 1,3,4,6 of 21647358: drop (57), (8), and the entry 2 of (12).
  const Permutation tau = P("21647358");
  const std::uint32_t keep = (1u << 0) | (1u << 2) | (1u << 3) | (1u << 5);
  CHECK(restrict_to_positions(tau, keep) == P("1432"));
}

TEST_CASE("symmetries") {
  CHECK(inverse(P("231")) == P("312"));
  CHECK(inverse(P("21")) == P("21"));
  CHECK(inverse(P("3412")) == P("3412"));
  CHECK(reverse_complement(P("132")) == P("213"));
  CHECK(reverse_complement(P("123")) == P("123"));
  CHECK(reverse_complement(P("2143")) == P("2143"));
  CHECK(skew_sum(P("1"), P("1")) == P("21"));
  CHECK(skew_sum(P("21"), P("21")) == P("4321"));
  CHECK(skew_sum(P("12"), P("12")) == P("3412"));
  for (const auto& p : collect_family<Permutation>(Family::Permutations, 6)) {
    CHECK(compose(p, inverse(p)) == Permutation::identity(6));
    CHECK(reverse_complement(reverse_complement(p)) == p);
  }
}

TEST_CASE("reverse-complement preserves cycle type") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& t : collect_family<Involution>(Family::Involutions, n)) {
      auto lengths = [](const Involution& x) {
        std::multiset<int> s;
        for (const Cycle& c : x.cycles()) s.insert(c.second - c.first);
        return s;
      };
      const Involution r(reverse_complement(t.perm()));
      CHECK(lengths(r) == lengths(t));
    }
  }
}

TEST_CASE("parsing and printing") {
  CHECK(Inv("(12)(36)(4)(57)(8)").perm() == P("21647358"));
  CHECK(Inv("21647358").to_cycle_string() == "(12)(36)(4)(57)(8)");
  const Permutation big = P("10,2,3,4,5,6,7,8,9,1");
  CHECK(big.size() == 10);
  CHECK(big.to_string() == "10,2,3,4,5,6,7,8,9,1");
  CHECK(Involution(big).to_cycle_string() == "(1,10)(2,2)(3,3)(4,4)(5,5)(6,6)(7,7)(8,8)(9,9)");
  CHECK(Inv("(1,10)(2,2)(3,3)(4,4)(5,5)(6,6)(7,7)(8,8)(9,9)").perm() == big);
  CHECK(Permutation::parse("").size() == 0);
  CHECK_THROWS_AS(P("1224"), InvalidInput);
  CHECK_THROWS_AS(P("132x"), InvalidInput);
  CHECK_THROWS_AS(Inv("231"), InvalidInput);
  CHECK_THROWS_AS(FpfInvolution::parse("132"), InvalidInput);
}

TEST_CASE("cycles") {
  const auto cyc = Inv("426153").cycles();
  CHECK(cyc == std::vector<Cycle>{{1, 4}, {2, 2}, {3, 6}, {5, 5}});
  CHECK(Inv("123").cycles() == std::vector<Cycle>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(Inv("21").cycles() == std::vector<Cycle>{{1, 2}});
  const Involution empty(Permutation{});
  CHECK(empty.is_fixed_point_free());
  CHECK(empty.cycles().empty());
}

TEST_CASE("generators match filtered permutations in the same order") {
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(collect_family<Permutation>(Family::Involutions, n) == involutions_by_filter(n, false));
    CHECK(collect_family<Permutation>(Family::FixedPointFree, n) == involutions_by_filter(n, true));
  }
}

TEST_CASE("family counts") {
  // Independent recurrence oracle.
  std::vector<unsigned long long> a{1, 1};
  for (std::size_t n = 2; n <= 16; ++n) a.push_back(a[n - 1] + (n - 1) * a[n - 2]);
  CHECK(a[4] == 10);
  CHECK(a[16] == 46206736ull);
  for (std::size_t n = 0; n <= 12; ++n) {
    std::size_t seen = 0;
    for_each_involution(n, [&](const Permutation&) { ++seen; });
    CHECK(seen == a[n]);
    CHECK(involution_count(n) == a[n]);
  }
  CHECK(involution_count(16) == 46206736);
  CHECK(fpf_count(4) == 3);
  CHECK(collect_family<Permutation>(Family::FixedPointFree, 4).size() == 3);
  CHECK(fpf_count(12) == 10395);
}

TEST_CASE("prefix partition covers the family in order") {
  for (Family f : {Family::Permutations, Family::Involutions, Family::FixedPointFree}) {
    for (std::size_t n : {0u, 1u, 4u, 7u, 8u}) {
      const auto full = collect_family<Permutation>(f, n);
      for (std::size_t depth : {1u, 2u, 3u}) {
        std::vector<Permutation> joined;
        for (const auto& pre : family_prefixes(f, n, depth))
          for_each_in_family(f, n, [&](const Permutation& p) { joined.push_back(p); }, pre);
        CHECK(joined == full);
      }
    }
  }
}

TEST_CASE("parallel sweep is deterministic across thread counts") {
  struct Acc {
    std::vector<Permutation> seen;
  };
  auto run = [](unsigned threads) {
    SweepOptions opt;
    opt.threads = threads;
    opt.prefix_depth = 3;
    auto accs = parallel_sweep<Acc>(Family::Involutions, 9,
                                    [](Acc& a, const Permutation& p) { a.seen.push_back(p); }, opt);
    std::vector<Permutation> all;
    for (auto& a : accs) all.insert(all.end(), a.seen.begin(), a.seen.end());
    return all;
  };
  const auto one = run(1);
  CHECK(one == collect_family<Permutation>(Family::Involutions, 9));
  CHECK(run(4) == one);
}

TEST_CASE("codes and visible descents match the definition") {
  CHECK(involution_code(Inv("21")) == std::vector<int>{1});
  CHECK(involution_code(Inv("12345")) == std::vector<int>(4, 0));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& p : collect_family<Permutation>(Family::Involutions, n)) {
      const auto code = code_oracle(p, false);
      CHECK(involution_code(Involution(p)) == code);
      std::vector<int> desc;
      for (std::size_t i = 1; i < n; ++i) {
        const int ti = p(i), tj = p(i + 1);
        if (tj <= static_cast<int>(i) && ti > tj) desc.push_back(static_cast<int>(i));
      }
      CHECK(visible_descents(Involution(p)) == desc);
    }
    for (const auto& p : collect_family<Permutation>(Family::FixedPointFree, n)) {
      CHECK(fpf_code(FpfInvolution(p)) == code_oracle(p, true));
      std::vector<int> desc;
      for (std::size_t i = 1; i < n; ++i) {
        const int ti = p(i), tj = p(i + 1);
        if (tj < static_cast<int>(i) && ti > tj) desc.push_back(static_cast<int>(i));
      }
      CHECK(fpf_visible_descents(FpfInvolution(p)) == desc);
    }
  }
  CHECK(fpf_code(FpfInvolution::parse("2143")) == code_oracle(P("2143"), true));
}

TEST_CASE("21*43 condition") {
  CHECK(satisfies_21s43(Inv("21354")));
  CHECK_FALSE(satisfies_21s43(Inv("2143")));
  CHECK(satisfies_21s43(Inv("4321")));
  CHECK(satisfies_21s43(Inv("1")));
  for (std::size_t n = 0; n <= 9; ++n)
    for (const auto& p : collect_family<Permutation>(Family::Involutions, n))
      CHECK(satisfies_21s43(Involution(p)) == oracle_21s43(p));
}

TEST_CASE("left-to-right minima") {
  auto lr = lr_minima(Inv("426153"));
  CHECK(lr.cycles == std::vector<Cycle>{{1, 4}, {2, 2}});
  CHECK(lr.positions == std::vector<int>{1, 2, 4});
  lr = lr_minima(Inv("123456"));
  CHECK(lr.cycles == std::vector<Cycle>{{1, 1}});
  CHECK(lr.positions == std::vector<int>{1});
  lr = lr_minima(Inv("4321"));
  CHECK(lr.cycles == std::vector<Cycle>{{1, 4}, {2, 3}});
  CHECK(lr.positions == std::vector<int>{1, 2, 3, 4});
}
