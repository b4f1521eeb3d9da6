#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "excoll/collection.hpp"
#include "excoll/families.hpp"

namespace excoll {

enum class MoveKind { RotateRight, RotateLeft, Transpose };

/// One step of a mutation path. For Transpose, `index` is the 0-based
/// position i of the swapped pair (i, i+1); it prints 1-based as "T{i+1}".
struct MoveStep {
  MoveKind kind = MoveKind::RotateRight;
  std::size_t index = 0;

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

std::string to_string(MoveStep step);
std::optional<MoveStep> parse_move(std::string_view text);
std::string format_moves(const std::vector<MoveStep>& moves);

Collection apply_move(const Collection& seq, MoveStep step);
Collection apply_moves(Collection seq, const std::vector<MoveStep>& moves);

/// Moves applicable to a normalized length-6 collection, paired with results.
std::vector<std::pair<MoveStep, Collection>> neighbours(const Collection& seq);

inline constexpr std::size_t kDefaultSearchDepth = 8;

/// Shortest move sequence from `from` to `to` (both normalized), or nullopt
/// if none exists within max_depth moves.
std::optional<std::vector<MoveStep>> find_move_sequence(const Collection& from, const Collection& to,
                                                        std::size_t max_depth = kDefaultSearchDepth);

struct RelationLink {
  TypeLabel from;
  TypeLabel to;
  std::optional<std::vector<MoveStep>> moves;

  friend bool operator==(const RelationLink&, const RelationLink&) = default;
};

/// One instance of a stated relation chain: consecutive links plus whether
/// the composed moves lead back to the starting collection.
struct RelationChain {
  std::string name;
  std::vector<Coeff> params;
  std::vector<RelationLink> links;
  bool cyclic = false;  // chain is stated to return to its start
  bool closes = false;  // every link found and (if cyclic) composition returns to start

  friend bool operator==(const RelationChain&, const RelationChain&) = default;
};

struct MutationReport {
  VarietyTag variety = VarietyTag::BlowupPoint;
  Coeff param_range = 0;
  std::vector<RelationChain> chains;
  std::vector<std::string> diagnostics;

  [[nodiscard]] bool all_realized() const;
  [[nodiscard]] std::size_t link_count() const;
  [[nodiscard]] std::size_t realized_count() const;

  friend bool operator==(const MutationReport&, const MutationReport&) = default;
};

/// Searches every stated relation chain for all parameters in
/// [-param_range, param_range]. Requires param_range >= 3.
MutationReport verify_mutation_relations(VarietyTag tag, Coeff param_range);

}  // namespace excoll
