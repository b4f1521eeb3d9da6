#include "excoll/pair_table.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "excoll/collection.hpp"

namespace excoll {

namespace {

struct Member {
  DivisorClass divisor;
  Coeff param = 0;
};

std::vector<Member> members(const LineBundleFamily& f, Coeff param_window, Coeff region_window) {
  std::vector<Member> out;
  switch (f.kind) {
    case FamilyKind::Sporadic: out.push_back({f.base, 0}); break;
    case FamilyKind::Linear:
      for (Coeff t = -param_window; t <= param_window; ++t) out.push_back({f.member(t), t});
      break;
    case FamilyKind::Region:
      for (Coeff a = -region_window; a <= region_window; ++a)
        for (Coeff b = -region_window; b <= region_window; ++b)
          if (f.contains({a, b})) out.push_back({{a, b}, 0});
      break;
  }
  return out;
}

CellCondition fit(const LineBundleFamily& row_family, const LineBundleFamily& col_family,
                  const std::vector<Member>& rows, const std::vector<Member>& cols,
                  const std::vector<std::vector<Verdict>>& grid, const PairCell& counts) {
  if (row_family.kind == FamilyKind::Region && col_family.kind == FamilyKind::Region) {
    return {CellKind::Unknown, {}};
  }
  if (counts.unknown_count > 0) return {CellKind::Unknown, {}};
  if (counts.zero_count == 0) return {CellKind::Never, {}};
  if (counts.nonzero_count == 0) return {CellKind::Always, {}};

  const bool row_linear = row_family.kind == FamilyKind::Linear;
  const bool col_linear = col_family.kind == FamilyKind::Linear;
  auto zero = [&](std::size_t i, std::size_t j) { return grid[i][j] == Verdict::Zero; };

  auto values_of = [](const std::set<Coeff>& s) { return std::vector<Coeff>(s.begin(), s.end()); };

  if (row_linear) {
    std::set<Coeff> s;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (zero(i, j)) s.insert(rows[i].param);
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i)
      for (std::size_t j = 0; j < cols.size() && ok; ++j)
        ok = zero(i, j) == (s.count(rows[i].param) > 0);
    if (ok) return {CellKind::RowIn, values_of(s)};
  }
  if (col_linear) {
    std::set<Coeff> s;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (zero(i, j)) s.insert(cols[j].param);
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i)
      for (std::size_t j = 0; j < cols.size() && ok; ++j)
        ok = zero(i, j) == (s.count(cols[j].param) > 0);
    if (ok) return {CellKind::ColIn, values_of(s)};
  }
  if (row_linear && col_linear) {
    std::set<Coeff> s;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (zero(i, j)) s.insert(cols[j].param - rows[i].param);
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i)
      for (std::size_t j = 0; j < cols.size() && ok; ++j)
        ok = zero(i, j) == (s.count(cols[j].param - rows[i].param) > 0);
    if (ok) return {CellKind::Offset, values_of(s)};
  }
  return {CellKind::Irregular, {}};
}

// Shorthands for the published tables.
CellCondition never() { return {CellKind::Never, {}}; }
CellCondition always() { return {CellKind::Always, {}}; }
CellCondition unknown() { return {CellKind::Unknown, {}}; }
CellCondition row_in(std::vector<Coeff> v) {
  std::sort(v.begin(), v.end());
  return {CellKind::RowIn, std::move(v)};
}
CellCondition col_in(std::vector<Coeff> v) {
  std::sort(v.begin(), v.end());
  return {CellKind::ColIn, std::move(v)};
}
CellCondition offset(std::vector<Coeff> v) {
  std::sort(v.begin(), v.end());
  return {CellKind::Offset, std::move(v)};
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string signed_offset(Coeff k) {
  if (k == 0) return "";
  return (k > 0 ? "+" : "-") + std::to_string(k > 0 ? k : -k);
}

std::string column_header(const LineBundleFamily& f) {
  return f.kind == FamilyKind::Linear ? f.label + "'" : f.label;
}

}  // namespace

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::Never: return "never";
    case CellKind::Always: return "always";
    case CellKind::RowIn: return "row_in";
    case CellKind::ColIn: return "col_in";
    case CellKind::Offset: return "offset";
    case CellKind::Unknown: return "unknown";
    case CellKind::Irregular: return "irregular";
  }
  return "?";
}

std::optional<CellKind> parse_cell_kind(std::string_view text) {
  for (const auto k : {CellKind::Never, CellKind::Always, CellKind::RowIn, CellKind::ColIn,
                       CellKind::Offset, CellKind::Unknown, CellKind::Irregular}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

const PairCell& PairTable::cell(std::string_view row, std::string_view col) const {
  for (const auto& c : cells) {
    if (c.row == row && c.col == col) return c;
  }
  throw std::out_of_range("no cell (" + std::string(row) + ", " + std::string(col) + ")");
}

PairTable pair_table(VarietyTag tag, Coeff param_window) {
  if (param_window < 10) throw std::invalid_argument("pair table parameter window must be >= 10");
  const auto& model = variety_model(tag);
  const auto families = line_bundle_families(tag);

  PairTable table{tag, param_window, 4 * param_window, {}, {}};
  std::vector<std::vector<Member>> domain;
  for (const auto& f : families) {
    table.labels.push_back(f.label);
    domain.push_back(members(f, table.param_window, table.region_window));
  }

  for (std::size_t s = 0; s < families.size(); ++s) {
    for (std::size_t t = 0; t < families.size(); ++t) {
      const auto& rows = domain[s];
      const auto& cols = domain[t];
      PairCell cell{families[s].label, families[t].label, {}, 0, 0, 0};
      std::vector<std::vector<Verdict>> grid(rows.size(), std::vector<Verdict>(cols.size()));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          const Verdict v = pair_verdict(model, rows[i].divisor, cols[j].divisor);
          grid[i][j] = v;
          switch (v) {
            case Verdict::Zero: ++cell.zero_count; break;
            case Verdict::Unknown: ++cell.unknown_count; break;
            case Verdict::Nonzero: ++cell.nonzero_count; break;
          }
        }
      }
      cell.condition = fit(families[s], families[t], rows, cols, grid, cell);
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

std::vector<std::vector<CellCondition>> published_pair_conditions(VarietyTag tag) {
  const auto N = never();
  const auto A = always();
  const auto U = unknown();
  switch (tag) {
    case VarietyTag::BlowupPoint:
      //        B0'                B1              B2  B3  B4              B5                  B6
      return {
          {offset({1, 2}), row_in({0}), N, A, row_in({1}), row_in({0, 1}), A},  // B0
          {A, N, N, N, A, N, A},                                                // B1
          {col_in({3, 4}), A, N, N, A, N, N},                                   // B2
          {col_in({3}), N, N, N, N, A, A},                                      // B3
          {A, N, N, N, N, N, N},                                                // B4
          {N, N, N, N, N, N, N},                                                // B5
          {col_in({4}), N, N, N, N, A, N},                                      // B6
      };
    case VarietyTag::BlowupLine:
      //        B0'          B1'          B2 B3
      return {
          {offset({1}), A, N, A},  // B0
          {N, offset({1}), N, A},  // B1
          {A, A, N, N},            // B2
          {N, N, N, N},            // B3
      };
    case VarietyTag::BlowupCubic:
      // B0 parameter as in the table: b = b' + 1, b' + 2 means b' - b in {-1, -2}.
      //   B0'              B1  B2  B3              B4               B5               B6 B7 B8              B9 B10
      return {
          {offset({-2, -1}), N, A, row_in({0, 3}), row_in({-1, 0}), row_in({-1, 2}), N, A, row_in({2, 3}), N, N},
          {col_in({-1, 0}), N, N, A, N, A, N, N, N, N, N},     // B1
          {col_in({-4, -1}), N, N, N, A, N, N, N, A, N, N},    // B2
          {A, N, A, N, N, A, N, N, N, N, N},                   // B3
          {N, N, N, N, N, N, N, N, N, N, N},                   // B4
          {A, N, N, N, N, N, N, N, N, N, N},                   // B5
          {col_in({-4, -3}), N, N, A, N, A, N, N, N, N, N},    // B6
          {col_in({-3, 0}), N, A, N, A, N, N, N, A, N, N},     // B7
          {N, N, N, N, N, N, N, N, N, N, N},                   // B8
          {N, N, N, N, N, N, N, N, N, U, U},                   // B9
          {N, N, N, N, N, N, N, N, N, U, U},                   // B10
      };
  }
  throw std::invalid_argument("unknown variety tag");
}

std::vector<std::string> diff_against_published(const PairTable& table) {
  std::vector<std::string> diffs;
  const auto expected = published_pair_conditions(table.variety);
  const auto families = line_bundle_families(table.variety);
  if (table.labels.size() != families.size() || expected.size() != families.size()) {
    diffs.push_back("label set differs from the published table");
    return diffs;
  }
  for (std::size_t s = 0; s < families.size(); ++s) {
    for (std::size_t t = 0; t < families.size(); ++t) {
      const auto& row = families[s].label;
      const auto& col = families[t].label;
      const auto& got = table.cell(row, col).condition;
      const auto& want = expected[s][t];
      if (!(got == want)) {
        diffs.push_back("(" + row + ", " + column_header(families[t]) + "): expected '" +
                        render_condition(table.variety, row, col, want) + "' [" +
                        std::string(to_string(want.kind)) + "], computed '" +
                        render_condition(table.variety, row, col, got) + "' [" +
                        std::string(to_string(got.kind)) + "]");
      }
    }
  }
  return diffs;
}

std::string render_condition(VarietyTag tag, std::string_view row, std::string_view col,
                             const CellCondition& condition) {
  const auto& rf = family_by_label(tag, row);
  const auto& cf = family_by_label(tag, col);
  const std::string rp(1, rf.param ? rf.param : '?');
  const std::string cp = std::string(1, cf.param ? cf.param : '?') + "'";
  std::vector<std::string> parts;
  switch (condition.kind) {
    case CellKind::Never: return "";
    case CellKind::Unknown: return "?";
    case CellKind::Irregular: return "irregular";
    case CellKind::Always: {
      std::vector<std::string> free;
      if (rf.kind == FamilyKind::Linear) free.push_back(rp);
      if (cf.kind == FamilyKind::Linear) free.push_back(cp);
      return free.empty() ? "√" : "∀" + join(free, ", ");
    }
    case CellKind::RowIn:
      for (const auto v : condition.values) parts.push_back(std::to_string(v));
      return rp + "=" + join(parts, ", ");
    case CellKind::ColIn:
      for (const auto v : condition.values) parts.push_back(std::to_string(v));
      return cp + "=" + join(parts, ", ");
    case CellKind::Offset:
      for (const auto v : condition.values) parts.push_back(rp + signed_offset(v));
      return cp + "=" + join(parts, ", ");
  }
  return "";
}

std::string render_markdown(const PairTable& table) {
  const auto families = line_bundle_families(table.variety);
  std::ostringstream out;
  out << "| |";
  for (const auto& f : families) out << ' ' << column_header(f) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < families.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& rf : families) {
    out << "| " << rf.label << " |";
    for (const auto& cf : families) {
      const auto text =
          render_condition(table.variety, rf.label, cf.label, table.cell(rf.label, cf.label).condition);
      out << ' ' << text << " |";
    }
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const PairTable& table) {
  std::ostringstream out;
  out << "row,col,kind,values,zero,unknown,nonzero\n";
  for (const auto& c : table.cells) {
    out << c.row << ',' << c.col << ',' << to_string(c.condition.kind) << ",\"";
    for (std::size_t i = 0; i < c.condition.values.size(); ++i) {
      if (i) out << ' ';
      out << c.condition.values[i];
    }
    out << "\"," << c.zero_count << ',' << c.unknown_count << ',' << c.nonzero_count << '\n';
  }
  return out.str();
}

}  // namespace excoll
