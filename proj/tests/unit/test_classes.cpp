#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "invpat/classes.hpp"
#include "invpat/statistics.hpp"

using namespace invpat;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

std::vector<Permutation> Ps(std::initializer_list<const char*> xs) {
  std::vector<Permutation> out;
  for (const char* x : xs) out.push_back(P(x));
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long fact(unsigned n) { return n <= 1 ? 1 : n * fact(n - 1); }

std::vector<Permutation> involutions_upto(std::size_t n, bool fpf) {
  std::vector<Permutation> out;
  for (std::size_t k = 1; k <= n; ++k)
    for_each_involution(k, [&](const Permutation& p) { out.push_back(p); }, !fpf);
  return out;
}

}  // namespace

TEST_CASE("pattern sets") {
  const auto ps = PatternSet::parse("2143; 132 132\n(12)(3)", Mode::I);
  CHECK(ps.patterns() == Ps({"132", "213", "2143"}));
  CHECK(ps.to_string() == "{132, 213, 2143}");
  CHECK(PatternSet::parse("", Mode::I).empty());
  CHECK_THROWS_AS(PatternSet::parse("231", Mode::I), ModeMismatch);
  CHECK_THROWS_AS(PatternSet::parse("132", Mode::F), ModeMismatch);
  CHECK_THROWS_AS(PatternSet::parse("13a", Mode::Classical), InvalidInput);

  const std::string path = "test_classes_patterns.txt";
  {
    std::ofstream out(path);
    out << "# a comment\n351624\n\n64827153   # trailing comment\n";
  }
  CHECK(PatternSet::from_file(path, Mode::F).patterns() == Ps({"351624", "64827153"}));
  std::remove(path.c_str());
  CHECK_THROWS_AS(PatternSet::from_file("no/such/file", Mode::F), InvalidInput);
}

TEST_CASE("avoids_all") {
  CHECK(avoids_all(P("65872143"), PatternSet::parse("2143 456123", Mode::F)));
  CHECK(avoids_all(P("65872143"), PatternSet::parse("2143 456123", Mode::I)));
  CHECK(avoids_all(P("4321"), PatternSet{}));
  CHECK_FALSE(avoids_all(P("21354"), PatternSet::parse("2143", Mode::Classical)));
}

TEST_CASE("class sizes") {
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(class_members(PatternSet::parse("2143", Mode::F), Mode::F, 2 * n).size() == fact(n));
  for (unsigned n = 1; n <= 8; ++n)
    CHECK(class_members(PatternSet::parse("12", Mode::I), Mode::I, n).size() == fact(n / 2));
  CHECK(class_members(PatternSet::parse("132", Mode::I), Mode::I, 3).size() == 3);
  // Permutational matchings: every opener sits in the first half.
  for (const auto& p : class_members(PatternSet::parse("2143", Mode::F), Mode::F, 8))
    for (std::size_t i = 1; i <= 4; ++i) CHECK(p(i) > 4);
}

TEST_CASE("bases of the size-3 patterns") {
  struct Row {
    const char* pattern;
    std::vector<Permutation> i_basis, f_basis;
  };
  const std::vector<Row> rows = {
      {"123", Ps({"123", "14523", "34125", "351624", "456123"}),
       Ps({"214365", "341265", "215634", "351624", "456123"})},
      {"132", Ps({"132", "35142", "465132"}), Ps({"2143", "465132"})},
      {"213", Ps({"213", "42513", "546213"}), Ps({"2143", "546213"})},
      {"231", Ps({"3412", "4231"}), Ps({"3412", "632541"})},
      {"312", Ps({"3412", "4231"}), Ps({"3412", "632541"})},
      {"321", Ps({"321"}), Ps({"4321"})},
  };
  for (const auto& row : rows) {
    INFO("pattern " << row.pattern);
    const auto pi = PatternSet::parse(row.pattern, Mode::Classical);
    CHECK(compute_basis(pi, Mode::I, 6).elements() == row.i_basis);
    CHECK(compute_basis(pi, Mode::F, 6).elements() == row.f_basis);
  }
  // 3412 contains 12 but each deletion leaves 21, so it is minimal too.
  CHECK(compute_basis(PatternSet::parse("12", Mode::Classical), Mode::I, 4).elements() == Ps({"12", "3412"}));
  CHECK_THROWS_AS(compute_basis(PatternSet::parse("1234", Mode::Classical), Mode::I, 3), InvalidInput);
  CHECK_THROWS_AS(compute_basis(PatternSet::parse("21", Mode::I), Mode::I, 3), ModeMismatch);
}

TEST_CASE("minimal violators") {
  const auto pi = PatternSet::parse("321", Mode::Classical);
  CHECK(is_minimal_violator(P("4321"), pi, Mode::F));
  CHECK(is_minimal_violator(P("321"), pi, Mode::I));
  CHECK_FALSE(is_minimal_violator(P("54321"), pi, Mode::I));
  CHECK_FALSE(is_minimal_violator(P("123"), pi, Mode::I));
}

TEST_CASE("basis report formats and thread determinism") {
  const auto pi = PatternSet::parse("132", Mode::Classical);
  const auto one = compute_basis(pi, Mode::I, 6, 1);
  const auto many = compute_basis(pi, Mode::I, 6, 3);
  CHECK(one.to_rows() == many.to_rows());
  CHECK(one.to_rows() == "size,one_line,cycle_form\n3,132,(1)(23)\n5,35142,(13)(25)(4)\n6,465132,(14)(26)(35)\n");
  CHECK(one.largest_size() == 6);
  CHECK(one.complete());
  CHECK(one.to_text().find("size 5:\n  35142  (13)(25)(4)") != std::string::npos);
  CHECK(delimited_field("(1,10)(2,2)", ',') == "\"(1,10)(2,2)\"");
}

TEST_CASE("bases for every set of size-3 patterns are complete antichains") {
  const auto s3 = collect_family<Permutation>(Family::Permutations, 3);
  const auto invs = involutions_upto(8, false);
  const auto fpfs = involutions_upto(8, true);
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<Permutation> pats;
    for (unsigned i = 0; i < 6; ++i)
      if (mask & (1u << i)) pats.push_back(s3[i]);
    const PatternSet pi(pats, Mode::Classical);
    const Avoider classical(pi);
    for (Mode ambient : {Mode::I, Mode::F}) {
      INFO("patterns " << pi.to_string() << " ambient " << to_string(ambient));
      const auto basis = compute_basis(pi, ambient, 6).elements();
      std::vector<EmbeddingPlan> plans;
      for (const auto& b : basis) plans.emplace_back(b, ambient);
      for (const auto& a : basis)
        for (const auto& plan : plans)
          if (plan.pattern() != a) CHECK_FALSE(plan.matches(InvolutionIndex(a)));
      for (const auto& tau : ambient == Mode::F ? fpfs : invs) {
        const InvolutionIndex idx(tau);
        bool hit = false;
        for (const auto& plan : plans) hit = hit || plan.matches(idx);
        CHECK(hit == !classical.avoids(tau));
      }
    }
  }
}

TEST_CASE("singleton classes below 12 and 2143 agree with classical avoidance") {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (const auto& tau : class_members(PatternSet::parse("12", Mode::I), Mode::I, k)) {
      const Avoider i_mode(PatternSet({tau}, Mode::I));
      const Avoider cl(PatternSet({tau}, Mode::Classical));
      for (std::size_t n = 1; n <= 8; ++n)
        for_each_involution(n, [&](const Permutation& p) { CHECK(i_mode.avoids(p) == cl.avoids(p)); });
    }
  }
}

TEST_CASE("subsets of I(12) give classical classes") {
  std::vector<Permutation> gens;
  for (std::size_t k = 1; k <= 5; ++k) {
    auto v = class_members(PatternSet::parse("12", Mode::I), Mode::I, k);
    gens.insert(gens.end(), v.begin(), v.end());
  }
  REQUIRE(gens.size() == 7);
  std::vector<Permutation> texts = involutions_upto(9, false);
  for (unsigned mask = 1; mask < (1u << gens.size()); ++mask) {
    std::vector<Permutation> t;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask & (1u << i)) t.push_back(gens[i]);
    const Avoider i_mode(PatternSet(t, Mode::I)), cl(PatternSet(t, Mode::Classical));
    for (const auto& p : texts) CHECK(i_mode.avoids(p) == cl.avoids(p));
  }
}

TEST_CASE("123-avoiders split into two 12-avoiders along left-to-right minima") {
  const Avoider avoid123(PatternSet::parse("123", Mode::I));
  const Avoider avoid12(PatternSet::parse("12", Mode::I));
  for (std::size_t n = 1; n <= 10; ++n) {
    for_each_involution(n, [&](const Permutation& p) {
      if (!avoid123.avoids(p)) return;
      const auto lr = lr_minima(Involution(p));
      std::uint32_t in_i = 0;
      for (int x : lr.positions) in_i |= 1u << (x - 1);
      const std::uint32_t in_j = kernels::full_mask(n) & ~in_i;
      CHECK(avoid12.avoids(restrict_to_positions(p, in_i)));
      CHECK(avoid12.avoids(restrict_to_positions(p, in_j)));
      const std::size_t k = lr.positions.size();
      for (std::size_t x = 1; x <= k / 2 + 1; ++x) CHECK(((in_i >> (x - 1)) & 1u) == 1u);
    });
  }
}
