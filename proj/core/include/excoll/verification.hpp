#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "excoll/divisor.hpp"
#include "excoll/geometry.hpp"

namespace excoll {

enum class VerifyTarget {
  PointVanishing,   // "prop4.3"
  LineVanishing,    // "prop5.5"
  CubicVanishing,   // "prop6.4"
  PointCollections, // "thm4.4"
  LineCollections,  // "thm5.6"
  CubicCollections, // "thm6.5"
  PairTables,       // "tables"
  Relations,        // "relations"
  PointChains,      // "claim4.5"
  CubicChains,      // "claim6.2"
  ConicTriples,     // "claim6.3"
};

std::string_view to_string(VerifyTarget target);
std::optional<VerifyTarget> parse_verify_target(std::string_view text);
std::span<const VerifyTarget> all_verify_targets();

struct VerifyOptions {
  std::optional<Coeff> window;       // target-specific default when absent
  std::optional<Coeff> param_range;  // relations only
  std::optional<VarietyTag> variety; // restricts tables / relations
};

struct VerificationResult {
  std::string target;
  bool passed = true;
  std::vector<std::string> summary;
  std::vector<std::string> mismatches;
};

/// Runs one reproduction check. Never stops at the first mismatch.
/// Throws std::invalid_argument for option values out of range.
VerificationResult verify(VerifyTarget target, const VerifyOptions& options = {});

/// The four published solutions of the conic triple system.
std::span<const std::array<Coeff, 6>> published_conic_triples();

}  // namespace excoll
