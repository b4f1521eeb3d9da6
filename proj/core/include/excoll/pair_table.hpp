#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "excoll/divisor.hpp"
#include "excoll/families.hpp"
#include "excoll/geometry.hpp"

namespace excoll {

/// The condition under which (B_s, B_t) is an exceptional pair.
enum class CellKind {
  Never,
  Always,
  RowIn,      // row parameter in `values`
  ColIn,      // column parameter in `values`
  Offset,     // column parameter - row parameter in `values`
  Unknown,    // undecidable with the available vanishing results
  Irregular,  // observed data fits none of the shapes above
};

std::string_view to_string(CellKind kind);
std::optional<CellKind> parse_cell_kind(std::string_view text);

struct CellCondition {
  CellKind kind = CellKind::Never;
  std::vector<Coeff> values;  // sorted ascending

  friend bool operator==(const CellCondition&, const CellCondition&) = default;
};

struct PairCell {
  std::string row;
  std::string col;
  CellCondition condition;
  std::size_t zero_count = 0;
  std::size_t unknown_count = 0;
  std::size_t nonzero_count = 0;

  friend bool operator==(const PairCell&, const PairCell&) = default;
};

struct PairTable {
  VarietyTag variety = VarietyTag::BlowupPoint;
  Coeff param_window = 0;
  Coeff region_window = 0;
  std::vector<std::string> labels;
  std::vector<PairCell> cells;  // row-major over labels x labels

  [[nodiscard]] const PairCell& cell(std::string_view row, std::string_view col) const;

  friend bool operator==(const PairTable&, const PairTable&) = default;
};

/// Evaluates pair_verdict over every parameter choice in [-param_window,
/// param_window] (region families: classes with |a|,|b| <= 4 * param_window)
/// and fits each cell's condition. Requires param_window >= 10.
PairTable pair_table(VarietyTag tag, Coeff param_window);

/// The published exceptional-pair tables, cell by cell, row-major over the
/// family labels.
std::vector<std::vector<CellCondition>> published_pair_conditions(VarietyTag tag);

/// Cell-by-cell differences between a computed table and the published one.
/// Empty means identical.
std::vector<std::string> diff_against_published(const PairTable& table);

/// Text of one cell as it would appear in the table ("a'=a+1, a+2", "√", "?").
std::string render_condition(VarietyTag tag, std::string_view row, std::string_view col,
                             const CellCondition& condition);

std::string render_markdown(const PairTable& table);
std::string render_csv(const PairTable& table);

}  // namespace excoll
