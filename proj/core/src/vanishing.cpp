#include "excoll/vanishing.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace excoll {

namespace {

constexpr VanishingCase line_case(int n, Coeff ca, Coeff cb, Coeff rhs) {
  return {n, true, ca, cb, rhs, {}};
}
constexpr VanishingCase point_case(int n, Coeff a, Coeff b) {
  return {n, false, 0, 0, 0, {a, b}};
}

constexpr std::array kPointCases{
    line_case(1, 1, 1, -1), point_case(2, -1, 1), point_case(3, -1, 2), point_case(4, -2, 0),
    point_case(5, -2, 2),   point_case(6, -3, 0), point_case(7, -3, 1),
};

constexpr std::array kLineCases{
    line_case(1, 1, 1, -1),
    line_case(2, 1, 1, -2),
    point_case(3, -1, 1),
    point_case(4, -3, 0),
};

constexpr std::array kCubicCases{
    line_case(1, 1, 2, -1), point_case(2, -1, 1), point_case(3, -2, 0),
    point_case(4, -2, 1),   point_case(5, -3, 0), point_case(6, -4, 2),
    point_case(7, -7, 4),   point_case(8, 0, -1), point_case(9, 3, -3),
};

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "zero";
    case Verdict::Nonzero: return "nonzero";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (const auto v : {Verdict::Zero, Verdict::Nonzero, Verdict::Unknown}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

Verdict meet(Verdict x, Verdict y) {
  if (x == Verdict::Nonzero || y == Verdict::Nonzero) return Verdict::Nonzero;
  if (x == Verdict::Unknown || y == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Zero;
}

bool VanishingCase::matches(DivisorClass d) const {
  if (is_line) {
    return checked::add(checked::mul(coeff_a, d.a), checked::mul(coeff_b, d.b)) == rhs;
  }
  return d == point;
}

std::span<const VanishingCase> vanishing_cases(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::BlowupPoint: return kPointCases;
    case VarietyTag::BlowupLine: return kLineCases;
    case VarietyTag::BlowupCubic: return kCubicCases;
  }
  throw std::invalid_argument("unknown variety tag");
}

std::optional<int> matching_case(VarietyTag tag, DivisorClass d) {
  for (const auto& c : vanishing_cases(tag)) {
    if (c.matches(d)) return c.number;
  }
  return std::nullopt;
}

bool h0_vanishes(const VarietyModel& model, DivisorClass d) {
  // Effective iff a >= 0 and (H-E)^2 D >= 0 (point, line) or (2H-E)^2 D >= 0 (cubic).
  const Coeff e_weight = model.tag == VarietyTag::BlowupCubic ? 2 : 1;
  return d.a < 0 || checked::add(d.a, checked::mul(e_weight, d.b)) < 0;
}

bool h3_vanishes(const VarietyModel& model, DivisorClass d) {
  return h0_vanishes(model, serre_dual(model, d));
}

CubicRegion cubic_undecided_region(DivisorClass d) {
  const Coeff s = checked::add(d.a, checked::mul(2, d.b));
  if (d.a < -3 && s > 3 && cubic_conic(d.a, d.b) == 0) return CubicRegion::Negative;
  if (d.a > -1 && s < -3 && cubic_conic(d.a, d.b) == 0) return CubicRegion::Positive;
  return CubicRegion::None;
}

Verdict coh_zero(const VarietyModel& model, DivisorClass d) {
  if (matching_case(model.tag, d)) return Verdict::Zero;
  if (model.tag != VarietyTag::BlowupCubic) return Verdict::Nonzero;

  if (!h0_vanishes(model, d) || !h3_vanishes(model, d) || euler_char(model, d) != 0) {
    return Verdict::Nonzero;
  }
  if (cubic_undecided_region(d) != CubicRegion::None) return Verdict::Unknown;
  throw std::logic_error("class " + format_pair(d) +
                         " has h0 = h3 = chi = 0 but matches no known case or region");
}

Verdict coh_zero_via_chi(const VarietyModel& model, DivisorClass d) {
  if (model.tag == VarietyTag::BlowupCubic) {
    throw std::invalid_argument(
        "coh_zero_via_chi needs h^1 h^2 = 0, which is not available on the cubic blow-up");
  }
  const bool zero = h0_vanishes(model, d) && h3_vanishes(model, d) && euler_char(model, d) == 0;
  return zero ? Verdict::Zero : Verdict::Nonzero;
}

bool p1p1_coh_zero(RuledSurfaceClass c) { return c.s == -1 || c.f == -1; }

namespace cubic {

RuledSurfaceClass restrict_to_exceptional(DivisorClass d) {
  // a (0, 3) + b (-1, 5)
  return {checked::neg(d.b), checked::add(checked::mul(3, d.a), checked::mul(5, d.b))};
}

RuledSurfaceClass restrict_to_quadric(DivisorClass d) {
  // D = x (2H - E) + y H with x = -b, y = a + 2b; x (0, 1) + y (1, 1).
  const Coeff x = checked::neg(d.b);
  const Coeff y = checked::add(d.a, checked::mul(2, d.b));
  return {y, checked::add(x, y)};
}

}  // namespace cubic

}  // namespace excoll
