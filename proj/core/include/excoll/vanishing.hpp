#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "excoll/divisor.hpp"
#include "excoll/geometry.hpp"

namespace excoll {

/// Outcome of the cohomological-vanishing oracle. Unknown only arises on the
/// twisted-cubic blow-up, for the two undecided regions of the conic f = 0.
enum class Verdict { Zero, Nonzero, Unknown };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Three-valued conjunction: Nonzero dominates, then Unknown, then Zero.
Verdict meet(Verdict x, Verdict y);

/// One line of a vanishing classification: either a line c_a*a + c_b*b = rhs
/// or a single class.
struct VanishingCase {
  int number = 0;
  bool is_line = false;
  Coeff coeff_a = 0;
  Coeff coeff_b = 0;
  Coeff rhs = 0;
  DivisorClass point{};

  [[nodiscard]] bool matches(DivisorClass d) const;
};

/// The classified cohomologically-zero cases for a variety. For the point and
/// line blow-ups these are necessary and sufficient; for the twisted cubic
/// they are only sufficient (cases 1-9).
std::span<const VanishingCase> vanishing_cases(VarietyTag tag);

/// Number of the first case D satisfies, if any.
std::optional<int> matching_case(VarietyTag tag, DivisorClass d);

bool h0_vanishes(const VarietyModel& model, DivisorClass d);
bool h3_vanishes(const VarietyModel& model, DivisorClass d);

/// Which undecided region of the twisted-cubic blow-up D falls into.
enum class CubicRegion {
  None,
  Negative,  // a < -3, a + 2b > 3, f(a,b) = 0
  Positive,  // a > -1, a + 2b < -3, f(a,b) = 0
};

CubicRegion cubic_undecided_region(DivisorClass d);

/// Decides whether O_X(D) is cohomologically zero.
///   point, line: Zero iff D matches the case list, else Nonzero.
///   cubic: case list -> Zero; else vanishing obstruction (H^0, H^3 or chi)
///          -> Nonzero; else the undecided regions -> Unknown.
Verdict coh_zero(const VarietyModel& model, DivisorClass d);

/// Second route for point and line: Zero iff h0 and h3 vanish and chi = 0,
/// which suffices there because h^1 h^2 = 0 for every line bundle.
/// Throws std::invalid_argument for the twisted cubic.
Verdict coh_zero_via_chi(const VarietyModel& model, DivisorClass d);

/// A class s S + f F on P^1 x P^1 (the exceptional divisor E with basis
/// (S, F), or the quadric Q with basis (C1, C2)).
struct RuledSurfaceClass {
  Coeff s = 0;
  Coeff f = 0;

  friend auto operator<=>(const RuledSurfaceClass&, const RuledSurfaceClass&) = default;
};

/// O(sS + fF) on P^1 x P^1 is cohomologically zero iff s = -1 or f = -1.
bool p1p1_coh_zero(RuledSurfaceClass c);

namespace cubic {

/// Restriction to E ~ P^1 x P^1: H|E = 3F, E|E = -S + 5F.
RuledSurfaceClass restrict_to_exceptional(DivisorClass d);

/// Restriction to the quadric Q (class 2H - E): H|Q = C1 + C2, (2H-E)|Q = C2.
RuledSurfaceClass restrict_to_quadric(DivisorClass d);

}  // namespace cubic

}  // namespace excoll
