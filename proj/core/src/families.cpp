#include "excoll/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace excoll {

namespace {

LineBundleFamily linear(std::string label, DivisorClass base, DivisorClass dir, char param) {
  return {std::move(label), FamilyKind::Linear, base, dir, CubicRegion::None, param};
}
LineBundleFamily sporadic(std::string label, Coeff a, Coeff b) {
  return {std::move(label), FamilyKind::Sporadic, {a, b}, {}, CubicRegion::None, 0};
}
LineBundleFamily region(std::string label, CubicRegion r) {
  return {std::move(label), FamilyKind::Region, {}, {}, r, 0};
}

const std::vector<LineBundleFamily> kPointFamilies{
    linear("B0", {0, 1}, {1, -1}, 'a'),  // aH - (a-1)E
    sporadic("B1", 1, -1), sporadic("B2", 1, -2), sporadic("B3", 2, 0),
    sporadic("B4", 2, -2), sporadic("B5", 3, 0),  sporadic("B6", 3, -1),
};

const std::vector<LineBundleFamily> kLineFamilies{
    linear("B0", {0, 1}, {1, -1}, 'a'),  // aH - (a-1)E
    linear("B1", {0, 2}, {1, -1}, 'b'),  // bH - (b-2)E
    sporadic("B2", 1, -1),
    sporadic("B3", 3, 0),
};

// B0 is parameterized as (1-2b)H + bE; in terms of the collection types'
// (2b+1)H - bE this is the same family with b negated.
const std::vector<LineBundleFamily> kCubicFamilies{
    linear("B0", {1, 0}, {-2, 1}, 'b'),
    sporadic("B1", 1, -1), sporadic("B2", 2, 0),  sporadic("B3", 2, -1),
    sporadic("B4", 3, 0),  sporadic("B5", 4, -2), sporadic("B6", 7, -4),
    sporadic("B7", 0, 1),  sporadic("B8", -3, 3),
    region("B9", CubicRegion::Negative),
    region("B10", CubicRegion::Positive),
};

// --- collection type catalogs ---------------------------------------------

AffineDivisor fixed(Coeff a, Coeff b) { return {{a, b}, {}}; }
AffineDivisor first(Coeff a, Coeff b, DivisorClass dir) { return {{a, b}, {dir, {}}}; }
AffineDivisor second(Coeff a, Coeff b, DivisorClass dir) { return {{a, b}, {DivisorClass{}, dir}}; }

constexpr DivisorClass kSlope{1, -1};  // aH - (a-1)E steps
constexpr DivisorClass kCubicSlope{2, -1};

using P = VarietyTag;

const std::vector<CollectionType> kPointTypes{
    {P::BlowupPoint, 1, 1,
     {fixed(1, -1), fixed(2, -2), first(0, 1, kSlope), first(1, 0, kSlope), first(2, -1, kSlope)}},
    {P::BlowupPoint, 2, 1,
     {fixed(1, -1), first(0, 1, kSlope), first(1, 0, kSlope), first(2, -1, kSlope), fixed(3, -1)}},
    {P::BlowupPoint, 3, 1,
     {first(0, 1, kSlope), first(1, 0, kSlope), first(2, -1, kSlope), fixed(2, 0), fixed(3, -1)}},
    {P::BlowupPoint, 4, 0, {fixed(1, -1), fixed(1, 0), fixed(2, -2), fixed(2, -1), fixed(3, -2)}},
    {P::BlowupPoint, 5, 0, {fixed(0, 1), fixed(1, -1), fixed(1, 0), fixed(2, -1), fixed(3, -1)}},
    {P::BlowupPoint, 6, 0, {fixed(1, -2), fixed(1, -1), fixed(2, -2), fixed(3, -2), fixed(4, -3)}},
    {P::BlowupPoint, 7, 0, {fixed(0, 1), fixed(1, 0), fixed(2, 0), fixed(3, -1), fixed(3, 0)}},
    {P::BlowupPoint, 8, 0, {fixed(1, -1), fixed(2, -1), fixed(3, -2), fixed(3, -1), fixed(4, -3)}},
    {P::BlowupPoint, 9, 0, {fixed(1, 0), fixed(2, -1), fixed(2, 0), fixed(3, -2), fixed(3, -1)}},
};

const std::vector<CollectionType> kLineTypes{
    {P::BlowupLine, 1, 2,
     {first(0, 1, kSlope), first(1, 0, kSlope), second(0, 2, kSlope), second(1, 1, kSlope),
      fixed(3, 0)}},
    {P::BlowupLine, 2, 2,
     {fixed(1, -1), first(0, 1, kSlope), first(1, 0, kSlope), second(0, 2, kSlope),
      second(1, 1, kSlope)}},
};

// (2b-3)H - (b-2)E, (2b-1)H - (b-1)E, (2b+1)H - bE
AffineDivisor tail(int k) {
  switch (k) {
    case 0: return first(-3, 2, kCubicSlope);
    case 1: return first(-1, 1, kCubicSlope);
    default: return first(1, 0, kCubicSlope);
  }
}

const std::vector<CollectionType> kCubicTypes{
    {P::BlowupCubic, 1, 0, {fixed(1, 0), fixed(3, -1), fixed(0, 1), fixed(2, 0), fixed(3, 0)}},
    {P::BlowupCubic, 2, 0, {fixed(2, -1), fixed(-1, 1), fixed(1, 0), fixed(2, 0), fixed(3, -1)}},
    {P::BlowupCubic, 3, 0, {fixed(-3, 2), fixed(-1, 1), fixed(0, 1), fixed(1, 0), fixed(2, 0)}},
    {P::BlowupCubic, 4, 0, {fixed(2, -1), fixed(3, -1), fixed(4, -2), fixed(5, -2), fixed(7, -3)}},
    {P::BlowupCubic, 5, 0, {fixed(1, 0), fixed(2, -1), fixed(3, -1), fixed(5, -2), fixed(2, 0)}},
    {P::BlowupCubic, 6, 0, {fixed(1, -1), fixed(2, -1), fixed(4, -2), fixed(1, 0), fixed(3, -1)}},
    {P::BlowupCubic, 7, 0, {fixed(2, -1), fixed(-3, 2), fixed(4, -2), fixed(-1, 1), fixed(1, 0)}},
    {P::BlowupCubic, 8, 0, {fixed(-5, 3), fixed(2, -1), fixed(-3, 2), fixed(-1, 1), fixed(2, 0)}},
    {P::BlowupCubic, 9, 0, {fixed(7, -4), fixed(2, -1), fixed(4, -2), fixed(7, -3), fixed(9, -4)}},
    {P::BlowupCubic, 10, 0, {fixed(-5, 3), fixed(-3, 2), fixed(0, 1), fixed(2, 0), fixed(-3, 3)}},
    {P::BlowupCubic, 11, 0, {fixed(2, -1), fixed(5, -2), fixed(7, -3), fixed(2, 0), fixed(9, -4)}},
    {P::BlowupCubic, 12, 0, {fixed(3, -1), fixed(5, -2), fixed(0, 1), fixed(7, -3), fixed(2, 0)}},
    {P::BlowupCubic, 13, 1, {fixed(2, -1), fixed(4, -2), tail(0), tail(1), tail(2)}},
    {P::BlowupCubic, 14, 1, {fixed(2, -1), tail(0), tail(1), tail(2), fixed(2, 0)}},
    {P::BlowupCubic, 15, 1, {tail(0), tail(1), tail(2), fixed(0, 1), fixed(2, 0)}},
};

// t with t * dir == diff, if any.
std::optional<Coeff> solve_multiple(DivisorClass diff, DivisorClass dir) {
  if (dir.is_zero()) return std::nullopt;
  const Coeff num = dir.a != 0 ? diff.a : diff.b;
  const Coeff den = dir.a != 0 ? dir.a : dir.b;
  if (num % den != 0) return std::nullopt;
  const Coeff t = num / den;
  if (t * dir != diff) return std::nullopt;
  return t;
}

std::optional<std::vector<Coeff>> unify(const CollectionType& type, const Collection& seq) {
  const auto n = static_cast<std::size_t>(type.param_count);
  std::vector<std::optional<Coeff>> params(n);
  // Each entry of the catalog involves at most one parameter, so a single
  // sweep determines every parameter that appears.
  for (std::size_t k = 0; k < type.entries.size(); ++k) {
    const auto& expr = type.entries[k];
    for (std::size_t p = 0; p < n; ++p) {
      if (expr.coeffs[p].is_zero() || params[p]) continue;
      const auto t = solve_multiple(seq.entries[k + 1] - expr.constant, expr.coeffs[p]);
      if (!t) return std::nullopt;
      params[p] = t;
    }
  }
  std::vector<Coeff> solved;
  for (const auto& p : params) {
    if (!p) return std::nullopt;
    solved.push_back(*p);
  }
  for (std::size_t k = 0; k < type.entries.size(); ++k) {
    if (type.entries[k].eval(solved) != seq.entries[k + 1]) return std::nullopt;
  }
  return solved;
}

const CollectionType& find_type(VarietyTag tag, int index) {
  for (const auto& t : collection_types(tag)) {
    if (t.index == index) return t;
  }
  throw std::invalid_argument("no type (" + std::to_string(index) + ") for variety " +
                              std::string(to_string(tag)));
}

}  // namespace

std::optional<Coeff> LineBundleFamily::parameter_of(DivisorClass d) const {
  if (kind != FamilyKind::Linear) return std::nullopt;
  return solve_multiple(d - base, direction);
}

bool LineBundleFamily::contains(DivisorClass d) const {
  switch (kind) {
    case FamilyKind::Sporadic: return d == base;
    case FamilyKind::Linear: return parameter_of(d).has_value();
    case FamilyKind::Region: return cubic_undecided_region(-d) == region;
  }
  return false;
}

std::span<const LineBundleFamily> line_bundle_families(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::BlowupPoint: return kPointFamilies;
    case VarietyTag::BlowupLine: return kLineFamilies;
    case VarietyTag::BlowupCubic: return kCubicFamilies;
  }
  throw std::invalid_argument("unknown variety tag");
}

const LineBundleFamily& family_by_label(VarietyTag tag, std::string_view label) {
  for (const auto& f : line_bundle_families(tag)) {
    if (f.label == label) return f;
  }
  throw std::invalid_argument("unknown family label " + std::string(label));
}

std::vector<TaggedClass> candidate_classes(VarietyTag tag, Coeff window) {
  if (window < 1) throw std::invalid_argument("candidate window must be >= 1");
  const auto& model = variety_model(tag);
  const auto families = line_bundle_families(tag);
  std::vector<TaggedClass> out;
  for (Coeff a = -window; a <= window; ++a) {
    for (Coeff b = -window; b <= window; ++b) {
      const DivisorClass d{a, b};
      const Verdict v = coh_zero(model, -d);
      if (v == Verdict::Nonzero) continue;

      const LineBundleFamily* hit = nullptr;
      for (const auto kind : {FamilyKind::Linear, FamilyKind::Sporadic, FamilyKind::Region}) {
        for (const auto& f : families) {
          if (f.kind == kind && f.contains(d)) {
            hit = &f;
            break;
          }
        }
        if (hit) break;
      }
      if (!hit) {
        throw std::logic_error("candidate class " + format_divisor(d) + " on " +
                               std::string(to_string(tag)) + " belongs to no listed family");
      }
      out.push_back({d, hit->label, hit->parameter_of(d), v});
    }
  }
  return out;
}

DivisorClass AffineDivisor::eval(std::span<const Coeff> params) const {
  DivisorClass d = constant;
  for (std::size_t p = 0; p < params.size() && p < coeffs.size(); ++p) {
    d = d + params[p] * coeffs[p];
  }
  return d;
}

std::span<const CollectionType> collection_types(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::BlowupPoint: return kPointTypes;
    case VarietyTag::BlowupLine: return kLineTypes;
    case VarietyTag::BlowupCubic: return kCubicTypes;
  }
  throw std::invalid_argument("unknown variety tag");
}

std::string format_label(const TypeLabel& label) {
  std::string out = "(" + std::to_string(label.index) + ")";
  if (label.params.empty()) return out;
  out += "_";
  if (label.params.size() == 1) return out + std::to_string(label.params[0]);
  out += "{";
  for (std::size_t i = 0; i < label.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(label.params[i]);
  }
  return out + "}";
}

Collection instantiate(const TypeLabel& label) {
  const auto& type = find_type(label.variety, label.index);
  if (label.params.size() != static_cast<std::size_t>(type.param_count)) {
    throw std::invalid_argument("type " + format_label(label) + " expects " +
                                std::to_string(type.param_count) + " parameter(s)");
  }
  Collection out{label.variety, {DivisorClass{}}};
  for (const auto& e : type.entries) out.entries.push_back(e.eval(label.params));
  return out;
}

std::vector<TypeLabel> classify_collection(const Collection& seq) {
  std::vector<TypeLabel> out;
  if (seq.size() != kFullLength || !seq.is_normalized()) return out;
  for (const auto& type : collection_types(seq.variety)) {
    if (auto params = unify(type, seq)) out.push_back({seq.variety, type.index, std::move(*params)});
  }
  return out;
}

std::vector<TypeLabel> type_instances_in_window(VarietyTag tag, Coeff window) {
  // Every parameterized entry moves by at least 1 in some coordinate per
  // unit step and has constant part within 10, so this range is exhaustive.
  const Coeff reach = window + 10;
  auto fits = [&](const Collection& c) {
    return std::all_of(c.entries.begin(), c.entries.end(), [&](DivisorClass d) {
      return d.a >= -window && d.a <= window && d.b >= -window && d.b <= window;
    });
  };
  std::vector<TypeLabel> out;
  for (const auto& type : collection_types(tag)) {
    std::vector<std::vector<Coeff>> param_sets;
    if (type.param_count == 0) {
      param_sets.push_back({});
    } else if (type.param_count == 1) {
      for (Coeff t = -reach; t <= reach; ++t) param_sets.push_back({t});
    } else {
      for (Coeff s = -reach; s <= reach; ++s)
        for (Coeff t = -reach; t <= reach; ++t) param_sets.push_back({s, t});
    }
    for (auto& params : param_sets) {
      TypeLabel label{tag, type.index, std::move(params)};
      if (fits(instantiate(label))) out.push_back(std::move(label));
    }
  }
  return out;
}

}  // namespace excoll
