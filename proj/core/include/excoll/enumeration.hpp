#pragma once

#include <vector>

#include "excoll/collection.hpp"
#include "excoll/families.hpp"

namespace excoll {

struct ConfirmedCollection {
  Collection collection;
  std::vector<TypeLabel> labels;  // empty if no listed type matches

  friend bool operator==(const ConfirmedCollection&, const ConfirmedCollection&) = default;
};

struct EnumerationReport {
  VarietyTag variety = VarietyTag::BlowupPoint;
  Coeff window = 0;
  std::vector<ConfirmedCollection> confirmed;  // verdict Zero, sorted by collection
  std::vector<Collection> undetermined;        // verdict Unknown, sorted

  friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

/// Every normalized length-6 sequence (0, D1, ..., D5) with entries drawn
/// from candidate_classes(tag, window) and no Nonzero backward pair.
/// Subtrees under each D1 are searched concurrently. Requires window >= 1.
EnumerationReport enumerate_collections(VarietyTag tag, Coeff window);

}  // namespace excoll
