#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "excoll/divisor.hpp"
#include "excoll/geometry.hpp"
#include "excoll/vanishing.hpp"

namespace excoll {

/// An ordered list of line bundles O_X(D_0), ..., O_X(D_{n-1}) on one variety.
/// Value type; every move below returns a fresh normalized collection.
struct Collection {
  VarietyTag variety = VarietyTag::BlowupPoint;
  std::vector<DivisorClass> entries;

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] bool is_normalized() const { return !entries.empty() && entries.front().is_zero(); }

  friend auto operator<=>(const Collection&, const Collection&) = default;
};

inline constexpr std::size_t kFullLength = 6;

/// Raised when a transposition is requested for a pair that is not completely
/// orthogonal.
class NotOrthogonalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subtracts entries[0] from every entry. Requires a nonempty collection.
Collection normalize(const Collection& seq);

/// Verdict for the ordered pair (O(dj), O(di)): coh_zero(dj - di).
Verdict pair_verdict(const VarietyModel& model, DivisorClass dj, DivisorClass di);

/// Meet of pair_verdict over all index pairs j < i.
Verdict collection_verdict(const VarietyModel& model, std::span<const DivisorClass> entries);
Verdict collection_verdict(const Collection& seq);

/// Drops entries[0], appends entries[0] - K_X, normalizes.
Collection helix_rotate_right(const Collection& seq);

/// Drops the last entry, prepends it + K_X, normalizes.
Collection helix_rotate_left(const Collection& seq);

/// True when entries i and i+1 are mutually orthogonal (both pair verdicts Zero).
bool is_orthogonal_pair(const Collection& seq, std::size_t i);

/// Swaps entries i and i+1 (0-based) and normalizes. Throws
/// NotOrthogonalError unless the pair is completely orthogonal, and
/// std::out_of_range for a bad index.
Collection transpose_orthogonal(const Collection& seq, std::size_t i);

/// Augmentation of a collection O(d_1 H), ..., O(d_l H) on P^3 to the blow-up
/// of P^3 at a point, switching at the 1-based position `index`
/// (n - 1 <= index <= l with n = 3). Returns the length l + 2 collection
/// (unnormalized). Throws std::out_of_range for an inadmissible index and
/// std::invalid_argument when l < 4.
Collection augment_point_blowup(std::span<const Coeff> degrees, std::size_t index);

}  // namespace excoll
