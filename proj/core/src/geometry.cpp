#include "excoll/geometry.hpp"

#include <stdexcept>
#include <string>

namespace excoll {

namespace {

const VarietyModel kPoint{VarietyTag::BlowupPoint, {1, 0, 0, 1}, {-4, 2}, {6, 0}};
const VarietyModel kLine{VarietyTag::BlowupLine, {1, 0, -1, -2}, {-4, 1}, {7, -4}};
const VarietyModel kCubic{VarietyTag::BlowupCubic, {1, 0, -3, -10}, {-4, 1}, {9, -4}};

Coeff exact_div(Coeff numerator, Coeff denominator, const char* what) {
  if (numerator % denominator != 0) {
    throw std::logic_error(std::string("non-integral Euler characteristic in ") + what + ": " +
                           std::to_string(numerator) + "/" + std::to_string(denominator));
  }
  return numerator / denominator;
}

}  // namespace

std::string_view to_string(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::BlowupPoint: return "point";
    case VarietyTag::BlowupLine: return "line";
    case VarietyTag::BlowupCubic: return "cubic";
  }
  return "?";
}

std::optional<VarietyTag> parse_variety(std::string_view text) {
  for (const auto tag : kAllVarieties) {
    if (to_string(tag) == text) return tag;
  }
  return std::nullopt;
}

const VarietyModel& variety_model(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::BlowupPoint: return kPoint;
    case VarietyTag::BlowupLine: return kLine;
    case VarietyTag::BlowupCubic: return kCubic;
  }
  throw std::invalid_argument("unknown variety tag");
}

Coeff triple_product(const VarietyModel& model, DivisorClass d1, DivisorClass d2, DivisorClass d3) {
  using checked::add;
  using checked::mul;
  // Indexed by the number of E factors chosen.
  const std::array<Coeff, 4> numbers{model.triples.hhh, model.triples.hhe, model.triples.hee,
                                     model.triples.eee};
  const std::array<DivisorClass, 3> ds{d1, d2, d3};
  Coeff total = 0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    Coeff term = 1;
    int e_count = 0;
    for (unsigned i = 0; i < 3; ++i) {
      const bool pick_e = (mask >> i) & 1U;
      term = mul(term, pick_e ? ds[i].b : ds[i].a);
      e_count += pick_e ? 1 : 0;
    }
    total = add(total, mul(term, numbers[static_cast<std::size_t>(e_count)]));
  }
  return total;
}

Coeff euler_char(const VarietyModel& model, DivisorClass d) {
  using checked::add;
  using checked::mul;
  const DivisorClass c1 = anticanonical(model);
  auto t = [&](DivisorClass x, DivisorClass y, DivisorClass z) {
    return triple_product(model, x, y, z);
  };
  // c2 . Z for a divisor Z, with c2 expressed in the basis {H^2, HE}.
  auto c2_dot = [&](DivisorClass z) {
    return add(mul(model.c2.h2, t(z, kH, kH)), mul(model.c2.he, t(z, kH, kE)));
  };

  const Coeff c1c2 = c2_dot(c1);
  const Coeff linear = add(t(c1, c1, d), c2_dot(d));
  const Coeff quadratic = t(c1, d, d);
  const Coeff cubic = t(d, d, d);

  // 24 * chi = c1c2 + 2 (c1^2 + c2) D + 6 c1 D^2 + 4 D^3
  const Coeff numerator =
      add(add(c1c2, mul(2, linear)), add(mul(6, quadratic), mul(4, cubic)));
  return exact_div(numerator, 24, "Riemann-Roch expansion");
}

Coeff cubic_conic(Coeff a, Coeff b) {
  using checked::add;
  using checked::mul;
  using checked::sub;
  Coeff v = add(mul(a, a), mul(5, a));
  v = add(v, 6);
  v = sub(v, mul(2, mul(a, b)));
  v = sub(v, mul(5, mul(b, b)));
  return add(v, b);
}

Coeff euler_char_closed(const VarietyModel& model, DivisorClass d) {
  using checked::add;
  using checked::mul;
  using checked::sub;
  const Coeff a = d.a;
  const Coeff b = d.b;
  switch (model.tag) {
    case VarietyTag::BlowupPoint: {
      const Coeff left = mul(mul(add(a, 1), add(a, 2)), add(a, 3));
      const Coeff right = mul(mul(b, sub(b, 1)), sub(b, 2));
      return exact_div(add(left, right), 6, "point closed form");
    }
    case VarietyTag::BlowupLine: {
      const Coeff s = add(a, b);
      const Coeff p = mul(mul(add(sub(a, mul(2, b)), 3), add(s, 1)), add(s, 2));
      return exact_div(p, 6, "line closed form");
    }
    case VarietyTag::BlowupCubic: {
      const Coeff p = mul(add(add(a, mul(2, b)), 1), cubic_conic(a, b));
      return exact_div(p, 6, "cubic closed form");
    }
  }
  throw std::invalid_argument("unknown variety tag");
}

DivisorClass serre_dual(const VarietyModel& model, DivisorClass d) { return model.canonical - d; }

}  // namespace excoll
