#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "excoll/divisor.hpp"

namespace excoll {

/// The three blow-ups of P^3 handled here.
enum class VarietyTag { BlowupPoint, BlowupLine, BlowupCubic };

inline constexpr std::array<VarietyTag, 3> kAllVarieties{
    VarietyTag::BlowupPoint, VarietyTag::BlowupLine, VarietyTag::BlowupCubic};

/// "point" / "line" / "cubic".
std::string_view to_string(VarietyTag tag);
std::optional<VarietyTag> parse_variety(std::string_view text);

/// Intersection numbers H^3, H^2E, HE^2, E^3.
struct TripleNumbers {
  Coeff hhh = 0;
  Coeff hhe = 0;
  Coeff hee = 0;
  Coeff eee = 0;

  friend bool operator==(const TripleNumbers&, const TripleNumbers&) = default;
};

/// c2(X) = h2 * H^2 + he * HE.
struct SecondChernClass {
  Coeff h2 = 0;
  Coeff he = 0;

  friend bool operator==(const SecondChernClass&, const SecondChernClass&) = default;
};

struct VarietyModel {
  VarietyTag tag;
  TripleNumbers triples;
  DivisorClass canonical;  // K_X
  SecondChernClass c2;
};

const VarietyModel& variety_model(VarietyTag tag);

/// Symmetric trilinear intersection form D1 * D2 * D3.
Coeff triple_product(const VarietyModel& model, DivisorClass d1, DivisorClass d2, DivisorClass d3);

/// chi(O_X(D)) by Hirzebruch-Riemann-Roch:
///   c1 c2 / 24 + (c1^2 + c2) D / 12 + c1 D^2 / 4 + D^3 / 6,  c1 = -K_X.
/// The sum is formed over the common denominator 24 and must be integral;
/// a remainder throws std::logic_error (it would mean corrupted model data).
Coeff euler_char(const VarietyModel& model, DivisorClass d);

/// chi(O_X(D)) from the per-variety factored cubic:
///   point: ((a+1)(a+2)(a+3) + b(b-1)(b-2)) / 6
///   line:  (a-2b+3)(a+b+1)(a+b+2) / 6
///   cubic: (a+2b+1) f(a,b) / 6,  f(a,b) = a^2+5a+6-2ab-5b^2+b
Coeff euler_char_closed(const VarietyModel& model, DivisorClass d);

/// The conic f(a,b) = a^2 + 5a + 6 - 2ab - 5b^2 + b of the twisted-cubic blow-up.
Coeff cubic_conic(Coeff a, Coeff b);

/// K_X - D.
DivisorClass serre_dual(const VarietyModel& model, DivisorClass d);

/// -K_X.
inline DivisorClass anticanonical(const VarietyModel& model) { return -model.canonical; }

}  // namespace excoll
