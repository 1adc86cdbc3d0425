#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "invpat/classes.hpp"
#include "invpat/mcgovern.hpp"

using namespace invpat;

namespace {
Permutation P(std::string_view s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("pattern lists") {
  const auto& s = mcgovern_sets();
  CHECK(s.pi.size() == 24);
  CHECK(s.pi_prime.size() == 17);
  CHECK(std::set<Permutation>(s.pi.begin(), s.pi.end()).size() == 24);
  CHECK(std::set<Permutation>(s.pi_prime.begin(), s.pi_prime.end()).size() == 17);
  for (const auto& p : s.pi) {
    CHECK(is_involution(p));
    CHECK(p.size() >= 5);
    CHECK(p.size() <= 8);
  }
  for (const auto& p : s.pi_prime) {
    CHECK(is_fpf_involution(p));
    CHECK(p.size() >= 6);
    CHECK(p.size() <= 8);
  }
  CHECK(s.smooth_extra == std::vector<Permutation>{P("2143"), P("1324")});
  CHECK(part1_patterns(Mode::IPrime).size() == 26);
}

TEST_CASE("predicates") {
  CHECK(rational_smoothness_F(P("21")));
  CHECK_FALSE(rational_smoothness_F(P("351624")));
  CHECK_THROWS_AS(rational_smoothness_F(P("1")), InvalidInput);
  CHECK_FALSE(rational_smoothness_I(P("2143")));
  CHECK(rational_smoothness_I(P("1")));
  CHECK_FALSE(smoothness_I(P("1324")));
  CHECK_FALSE(smoothness_I(P("14325")));
  CHECK(smoothness_I(P("4321")));
  // A single 2-cycle satisfies 21*43 vacuously, so 1324 is rationally smooth but not smooth.
  CHECK(rational_smoothness_I(P("1324")));
}

TEST_CASE("part 1 small sizes") {
  const auto rep = verify_part1(9, {.threads = 2, .checkpoint_path = {}, .progress = {}});
  CHECK(rep.ok());
  REQUIRE(rep.rows.size() == 9);
  const std::vector<std::uint64_t> involutions = {1, 2, 4, 10, 26, 76, 232, 764, 2620};
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(rep.rows[i].n == i + 1);
    CHECK(rep.rows[i].total == involutions[i]);
    CHECK(rep.rows[i].equal());
  }
  // At n=4 only 2143 and 1324 drop out; at n=5 also the patterns of size 5 themselves.
  CHECK(rep.rows[3].classical == 8);
  CHECK(rep.rows[4].classical < 26 - 3);
  CHECK(rep.to_text().find("equal at all sizes <= 9") != std::string::npos);
  CHECK(rep.to_rows().rfind("n,total,classical,i_prime,order,equal\n1,1,1,1,1,yes\n", 0) == 0);
  // Reports are cumulative: a shorter run is a prefix.
  const auto shorter = verify_part1(6, {.threads = 1, .checkpoint_path = {}, .progress = {}});
  CHECK(rep.to_rows().rfind(shorter.to_rows(), 0) == 0);
}

TEST_CASE("part 2 small sizes") {
  const auto rep = verify_part2(10);
  CHECK(rep.ok());
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[2].n == 6);
  CHECK(rep.rows[2].total == 15);
  CHECK(rep.rows[2].classical == 14);  // 351624 is the only size-6 pattern
  CHECK(rep.to_text().find("equal at all sizes <= 10") != std::string::npos);
}

TEST_CASE("counterexamples are found and classified") {
  // 132 I'-avoids 12 but collapsing (23) exposes it; at n=4, 3412 I-avoids 12 as well.
  const auto a = verify_classes(PatternSet::parse("12", Mode::Classical), Mode::I, 6);
  REQUIRE(a.counterexample);
  CHECK(a.counterexample->element == P("132"));
  CHECK(a.counterexample->inclusion == "I'(P) != I(P)");
  CHECK(a.rows[3].classical == 1);
  CHECK(a.rows[3].order == 2);
  CHECK(a.rows[3].i_prime > a.rows[3].order);
  CHECK_FALSE(a.rows[3].equal());

  // Fixed-point-free patterns cannot separate I from I', so the break is against I_S.
  const auto r = verify_classes(PatternSet::parse("2143 456123", Mode::Classical), Mode::I, 8);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->element == P("426153"));
  CHECK(r.counterexample->inclusion == "I(P) != I_S(P)");
  for (const auto& row : r.rows) CHECK(row.i_prime == row.order);

  const auto b = verify_classes(PatternSet::parse("132", Mode::Classical), Mode::I, 6);
  REQUIRE(b.counterexample);
  CHECK(b.counterexample->element == P("2143"));
  CHECK(b.counterexample->inclusion == "I'(P) != I(P)");

  const auto c = verify_classes(PatternSet::parse("2143", Mode::Classical), Mode::F, 8);
  REQUIRE(c.counterexample);
  CHECK(c.counterexample->inclusion == "F(P) != F_S(P)");
  CHECK(c.rows.back().order == 24);

  CHECK_THROWS_AS(verify_classes(PatternSet::parse("132", Mode::Classical), Mode::F, 4), ModeMismatch);
  CHECK_THROWS_AS(verify_part1(0), InvalidInput);
}

TEST_CASE("checkpoint resume") {
  const std::string path = "test_mcgovern.ckpt";
  std::remove(path.c_str());
  VerifyOptions opt;
  opt.threads = 2;
  opt.checkpoint_path = path;
  std::size_t calls = 0;
  opt.progress = [&](std::size_t, std::size_t done, std::size_t total) {
    ++calls;
    CHECK(done <= total);
  };
  const auto first = verify_part1(8, opt);
  CHECK(calls > 0);

  // Keep the header and half of the task lines, as if the run had been interrupted.
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  REQUIRE(lines.size() > 4);
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i < lines.size() / 2; ++i) out << lines[i] << '\n';
  }
  calls = 0;
  const auto resumed = verify_part1(8, opt);
  CHECK(resumed.to_rows() == first.to_rows());
  CHECK(calls < lines.size() - 1);

  CHECK_THROWS_AS(verify_part2(6, opt), InvalidInput);  // header belongs to part 1
  std::remove(path.c_str());
}

TEST_CASE("part 1 matches the basis computation") {
  // The I'-basis-style check: every minimal non-member of I_S(P) up to size 8 is a pattern of P.
  const auto report = compute_basis(part1_patterns(Mode::Classical), Mode::I, 8);
  const auto pats = part1_patterns(Mode::Classical).patterns();
  for (const auto& b : report.elements()) CHECK(std::find(pats.begin(), pats.end(), b) != pats.end());
}
