#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "excoll/collection.hpp"
#include "excoll/divisor.hpp"
#include "excoll/geometry.hpp"
#include "excoll/vanishing.hpp"

namespace excoll {

// ---------------------------------------------------------------------------
// Line-bundle families (the B-symbols): every class D whose negative is
// cohomologically zero (or undecided) lies in exactly one of them.
// ---------------------------------------------------------------------------

enum class FamilyKind {
  Sporadic,  // a single class; direction is zero
  Linear,    // base + t * direction, t in Z
  Region,    // cubic only: -D in an undecided region
};

struct LineBundleFamily {
  std::string label;  // "B0", "B1", ...
  FamilyKind kind = FamilyKind::Sporadic;
  DivisorClass base{};
  DivisorClass direction{};
  CubicRegion region = CubicRegion::None;  // only for FamilyKind::Region
  char param = 0;                          // parameter letter used when rendering

  [[nodiscard]] DivisorClass member(Coeff t) const { return base + t * direction; }

  /// For a linear family, the parameter t with member(t) == d.
  [[nodiscard]] std::optional<Coeff> parameter_of(DivisorClass d) const;

  [[nodiscard]] bool contains(DivisorClass d) const;
};

std::span<const LineBundleFamily> line_bundle_families(VarietyTag tag);

const LineBundleFamily& family_by_label(VarietyTag tag, std::string_view label);

struct TaggedClass {
  DivisorClass divisor;
  std::string family;
  std::optional<Coeff> param;  // for linear families
  Verdict negation_verdict;    // coh_zero(-divisor)

  friend bool operator==(const TaggedClass&, const TaggedClass&) = default;
};

/// All D with |a|, |b| <= window and coh_zero(-D) in {Zero, Unknown}, each
/// tagged with its family. Linear families win over sporadic coincidences.
/// Throws std::logic_error if some candidate belongs to no family.
std::vector<TaggedClass> candidate_classes(VarietyTag tag, Coeff window);

// ---------------------------------------------------------------------------
// Classified collection types.
// ---------------------------------------------------------------------------

/// constant + p0 * coeffs[0] + p1 * coeffs[1].
struct AffineDivisor {
  DivisorClass constant{};
  std::array<DivisorClass, 2> coeffs{};

  [[nodiscard]] DivisorClass eval(std::span<const Coeff> params) const;
};

struct CollectionType {
  VarietyTag variety;
  int index;
  int param_count;
  std::array<AffineDivisor, 5> entries;  // D1..D5 after the leading O_X
};

std::span<const CollectionType> collection_types(VarietyTag tag);

/// Family identity: variety, type number, and parameters.
struct TypeLabel {
  VarietyTag variety = VarietyTag::BlowupPoint;
  int index = 0;
  std::vector<Coeff> params;

  friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;
};

/// "(1)_3", "(2)_{0,3}", "(4)".
std::string format_label(const TypeLabel& label);

/// Normalized length-6 collection of a labelled type. Throws
/// std::invalid_argument for an unknown index or wrong parameter count.
Collection instantiate(const TypeLabel& label);

/// All labels whose entries unify with the five nonzero entries of seq.
/// Empty when nothing matches or seq is not normalized of length 6.
std::vector<TypeLabel> classify_collection(const Collection& seq);

/// All type instances whose six entries satisfy |a|, |b| <= window.
std::vector<TypeLabel> type_instances_in_window(VarietyTag tag, Coeff window);

}  // namespace excoll
