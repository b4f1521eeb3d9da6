#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "excoll/diophantine.hpp"
#include "excoll/vanishing.hpp"

using namespace excoll;

namespace {

Coeff f(Coeff a, Coeff b) { return a * a + 5 * a + 6 - 2 * a * b - 5 * b * b + b; }

}  // namespace

TEST_CASE("pair form") {
  for (Coeff a = -20; a <= 20; ++a)
    for (Coeff b = -20; b <= 20; ++b) CHECK(6 * cubic_pair_form(a, b) == (a + 2 * b + 1) * f(a, b));
}

TEST_CASE("conic points") {
  const auto pts = conic_points(50);
  CHECK(pts.size() == 16u);
  for (const auto& p : pts) CHECK(f(-p.a, -p.b) == 0);
}

TEST_CASE("triples") {
  const auto sols = solve_conic_triples(50);
  const std::vector<ConicTriple> want{
      {0, 1, 2, 0, -3, 3}, {0, 1, 2, 0, 3, 0}, {1, -1, 2, -1, 4, -2}, {7, -4, 2, -1, 4, -2}};
  CHECK(sols == want);
  for (const auto& s : sols) {
    for (int i = 0; i < 3; ++i) CHECK(f(-s[2 * i], -s[2 * i + 1]) == 0);
    // None of them has all three negated classes in an undecided region.
    bool all_undecided = true;
    for (int i = 0; i < 3; ++i)
      all_undecided = all_undecided && cubic_undecided_region({-s[2 * i], -s[2 * i + 1]}) != CubicRegion::None;
    CHECK_FALSE(all_undecided);
  }
  CHECK(solve_conic_triples(10) == want);
  CHECK_THROWS_AS(solve_conic_triples(0), std::invalid_argument);
}

TEST_CASE("family chains") {
  const auto one = family_chains(VarietyTag::BlowupPoint, {0, 1}, {1, -1}, 1, 5);
  CHECK(one.size() == 11u);
  const auto two = family_chains(VarietyTag::BlowupPoint, {0, 1}, {1, -1}, 2, 5);
  for (const auto& p : two) CHECK((p[1] - p[0] == 1 || p[1] - p[0] == 2));
  CHECK(two.size() == 10u + 9u);
  const auto three = family_chains(VarietyTag::BlowupCubic, {1, 0}, {2, -1}, 3, 5);
  for (const auto& p : three) CHECK((p[1] == p[0] + 1 && p[2] == p[1] + 1));
  CHECK(three.size() == 9u);
  CHECK(family_chains(VarietyTag::BlowupCubic, {1, 0}, {2, -1}, 4, 5).empty());
}
