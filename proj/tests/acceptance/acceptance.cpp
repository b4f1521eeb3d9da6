// Acceptance suite: one PASS/FAIL line per criterion. Expected values are
// transcribed here independently of the library's own tables.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "excoll/collection.hpp"
#include "excoll/diophantine.hpp"
#include "excoll/enumeration.hpp"
#include "excoll/families.hpp"
#include "excoll/geometry.hpp"
#include "excoll/mutation.hpp"
#include "excoll/pair_table.hpp"
#include "excoll/vanishing.hpp"

using namespace excoll;

namespace {

using Pt = std::pair<Coeff, Coeff>;
using Entries = std::vector<Pt>;  // D1..D5

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome failure(std::string detail) { return {false, std::move(detail)}; }

int g_failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = failure(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++g_failures;
  std::printf("%s %2d  %s  [%.3f s", pass ? "PASS" : "FAIL", number, title, secs);
  if (limit_seconds > 0) std::printf(" / limit %.0f s", limit_seconds);
  std::printf("]");
  if (!out.detail.empty()) std::printf("  %s", out.detail.c_str());
  if (!in_time) std::printf("  time limit exceeded");
  std::printf("\n");
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// Vanishing case lists.

bool point_zero(Coeff a, Coeff b) {
  static const std::set<Pt> pts{{-1, 1}, {-1, 2}, {-2, 0}, {-2, 2}, {-3, 0}, {-3, 1}};
  return a + b == -1 || pts.contains({a, b});
}

bool line_zero(Coeff a, Coeff b) {
  static const std::set<Pt> pts{{-1, 1}, {-3, 0}};
  return a + b == -1 || a + b == -2 || pts.contains({a, b});
}

bool cubic_zero(Coeff a, Coeff b) {
  static const std::set<Pt> pts{{-1, 1}, {-2, 0}, {-2, 1}, {-3, 0}, {-4, 2}, {-7, 4}, {0, -1}, {3, -3}};
  return a + 2 * b == -1 || pts.contains({a, b});
}

Coeff conic(Coeff a, Coeff b) { return a * a + 5 * a + 6 - 2 * a * b - 5 * b * b + b; }

bool cubic_unknown(Coeff a, Coeff b) {
  return conic(a, b) == 0 && ((a < -3 && a + 2 * b > 3) || (a > -1 && a + 2 * b < -3));
}

Outcome zero_set_check(VarietyTag tag, bool (*zero)(Coeff, Coeff)) {
  const auto& m = variety_model(tag);
  std::size_t n = 0;
  for (Coeff a = -30; a <= 30; ++a)
    for (Coeff b = -30; b <= 30; ++b) {
      const Verdict want = zero(a, b) ? Verdict::Zero : Verdict::Nonzero;
      if (coh_zero(m, {a, b}) != want) return failure("mismatch at (" + format_pair({a, b}) + ")");
      n += want == Verdict::Zero;
    }
  return {true, std::to_string(n) + " zero classes"};
}

// ---------------------------------------------------------------------------
// Euler characteristic closed forms.

Coeff chi_closed(VarietyTag tag, Coeff a, Coeff b) {
  switch (tag) {
    case VarietyTag::BlowupPoint: return ((a + 1) * (a + 2) * (a + 3) + b * (b - 1) * (b - 2)) / 6;
    case VarietyTag::BlowupLine: return (a - 2 * b + 3) * (a + b + 1) * (a + b + 2) / 6;
    case VarietyTag::BlowupCubic: return (a + 2 * b + 1) * conic(a, b) / 6;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Pair tables. Cell codes: "" never, "A" always, "?" unknown,
// "r:..." row parameter in set, "c:..." column parameter in set,
// "o:..." column parameter minus row parameter in set. The twisted-cubic
// B0 row/column parameter is read with B0 = (1-2b)H + bE.

using Grid = std::vector<std::vector<std::string>>;

const Grid kPointGrid{
    {"o:1,2", "r:0", "", "A", "r:1", "r:0,1", "A"},
    {"A", "", "", "", "A", "", "A"},
    {"c:3,4", "A", "", "", "A", "", ""},
    {"c:3", "", "", "", "", "A", "A"},
    {"A", "", "", "", "", "", ""},
    {"", "", "", "", "", "", ""},
    {"c:4", "", "", "", "", "A", ""},
};

const Grid kLineGrid{
    {"o:1", "A", "", "A"},
    {"", "o:1", "", "A"},
    {"A", "A", "", ""},
    {"", "", "", ""},
};

const Grid kCubicGrid{
    {"o:-1,-2", "", "A", "r:0,3", "r:0,-1", "r:-1,2", "", "A", "r:2,3", "", ""},
    {"c:0,-1", "", "", "A", "", "A", "", "", "", "", ""},
    {"c:-1,-4", "", "", "", "A", "", "", "", "A", "", ""},
    {"A", "", "A", "", "", "A", "", "", "", "", ""},
    {"", "", "", "", "", "", "", "", "", "", ""},
    {"A", "", "", "", "", "", "", "", "", "", ""},
    {"c:-3,-4", "", "", "A", "", "A", "", "", "", "", ""},
    {"c:0,-3", "", "A", "", "A", "", "", "", "A", "", ""},
    {"", "", "", "", "", "", "", "", "", "", ""},
    {"", "", "", "", "", "", "", "", "", "?", "?"},
    {"", "", "", "", "", "", "", "", "", "?", "?"},
};

CellCondition decode(const std::string& code) {
  if (code.empty()) return {CellKind::Never, {}};
  if (code == "A") return {CellKind::Always, {}};
  if (code == "?") return {CellKind::Unknown, {}};
  CellCondition c;
  c.kind = code[0] == 'r' ? CellKind::RowIn : code[0] == 'c' ? CellKind::ColIn : CellKind::Offset;
  std::stringstream ss(code.substr(2));
  std::string item;
  while (std::getline(ss, item, ',')) c.values.push_back(std::stoll(item));
  std::sort(c.values.begin(), c.values.end());
  return c;
}

Outcome table_check(VarietyTag tag, const Grid& grid, const std::vector<std::string>& labels) {
  const auto t = pair_table(tag, 15);
  if (t.labels != labels) return failure("labels differ");
  std::size_t unknown = 0;
  for (std::size_t s = 0; s < labels.size(); ++s)
    for (std::size_t u = 0; u < labels.size(); ++u) {
      const auto want = decode(grid[s][u]);
      if (!(t.cell(labels[s], labels[u]).condition == want))
        return failure(std::string(to_string(tag)) + " cell (" + labels[s] + "," + labels[u] + ")");
      unknown += want.kind == CellKind::Unknown;
    }
  return {true, std::to_string(labels.size() * labels.size()) + " cells, " + std::to_string(unknown) + " unknown"};
}

// ---------------------------------------------------------------------------
// Classified collection types, written out entry by entry.

Pt point_b0(Coeff a) { return {a, 1 - a}; }
Pt line_b0(Coeff a) { return {a, 1 - a}; }
Pt line_b1(Coeff b) { return {b, 2 - b}; }
std::vector<Pt> cubic_tail(Coeff b) { return {{2 * b - 3, 2 - b}, {2 * b - 1, 1 - b}, {2 * b + 1, -b}}; }

using Catalog = std::map<std::string, Entries>;

Catalog point_catalog() {
  Catalog c;
  for (Coeff a = -40; a <= 40; ++a) {
    const auto s = std::to_string(a);
    c["(1)_" + s] = {{1, -1}, {2, -2}, point_b0(a), point_b0(a + 1), point_b0(a + 2)};
    c["(2)_" + s] = {{1, -1}, point_b0(a), point_b0(a + 1), point_b0(a + 2), {3, -1}};
    c["(3)_" + s] = {point_b0(a), point_b0(a + 1), point_b0(a + 2), {2, 0}, {3, -1}};
  }
  c["(4)"] = {{1, -1}, {1, 0}, {2, -2}, {2, -1}, {3, -2}};
  c["(5)"] = {{0, 1}, {1, -1}, {1, 0}, {2, -1}, {3, -1}};
  c["(6)"] = {{1, -2}, {1, -1}, {2, -2}, {3, -2}, {4, -3}};
  c["(7)"] = {{0, 1}, {1, 0}, {2, 0}, {3, -1}, {3, 0}};
  c["(8)"] = {{1, -1}, {2, -1}, {3, -2}, {3, -1}, {4, -3}};
  c["(9)"] = {{1, 0}, {2, -1}, {2, 0}, {3, -2}, {3, -1}};
  return c;
}

Catalog line_catalog() {
  Catalog c;
  for (Coeff a = -40; a <= 40; ++a)
    for (Coeff b = -40; b <= 40; ++b) {
      const auto s = "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
      c["(1)" + s] = {line_b0(a), line_b0(a + 1), line_b1(b), line_b1(b + 1), {3, 0}};
      c["(2)" + s] = {{1, -1}, line_b0(a), line_b0(a + 1), line_b1(b), line_b1(b + 1)};
    }
  return c;
}

Catalog cubic_catalog() {
  Catalog c;
  c["(1)"] = {{1, 0}, {3, -1}, {0, 1}, {2, 0}, {3, 0}};
  c["(2)"] = {{2, -1}, {-1, 1}, {1, 0}, {2, 0}, {3, -1}};
  c["(3)"] = {{-3, 2}, {-1, 1}, {0, 1}, {1, 0}, {2, 0}};
  c["(4)"] = {{2, -1}, {3, -1}, {4, -2}, {5, -2}, {7, -3}};
  c["(5)"] = {{1, 0}, {2, -1}, {3, -1}, {5, -2}, {2, 0}};
  c["(6)"] = {{1, -1}, {2, -1}, {4, -2}, {1, 0}, {3, -1}};
  c["(7)"] = {{2, -1}, {-3, 2}, {4, -2}, {-1, 1}, {1, 0}};
  c["(8)"] = {{-5, 3}, {2, -1}, {-3, 2}, {-1, 1}, {2, 0}};
  c["(9)"] = {{7, -4}, {2, -1}, {4, -2}, {7, -3}, {9, -4}};
  c["(10)"] = {{-5, 3}, {-3, 2}, {0, 1}, {2, 0}, {-3, 3}};
  c["(11)"] = {{2, -1}, {5, -2}, {7, -3}, {2, 0}, {9, -4}};
  c["(12)"] = {{3, -1}, {5, -2}, {0, 1}, {7, -3}, {2, 0}};
  for (Coeff b = -40; b <= 40; ++b) {
    const auto t = cubic_tail(b);
    const auto s = std::to_string(b);
    c["(13)_" + s] = {{2, -1}, {4, -2}, t[0], t[1], t[2]};
    c["(14)_" + s] = {{2, -1}, t[0], t[1], t[2], {2, 0}};
    c["(15)_" + s] = {t[0], t[1], t[2], {0, 1}, {2, 0}};
  }
  return c;
}

Collection as_collection(VarietyTag tag, const Entries& e) {
  Collection c{tag, {{0, 0}}};
  for (const auto& [a, b] : e) c.entries.push_back({a, b});
  return c;
}

std::string family_of(const std::string& name) { return name.substr(0, name.find(')') + 1); }

Outcome enumeration_check(VarietyTag tag, const Catalog& catalog, std::size_t families) {
  const Coeff W = 15;
  std::map<Collection, std::set<std::string>> listed;
  for (const auto& [name, e] : catalog) {
    bool fits = true;
    for (const auto& [a, b] : e) fits = fits && a >= -W && a <= W && b >= -W && b <= W;
    if (fits) listed[as_collection(tag, e)].insert(name);
  }
  const auto report = enumerate_collections(tag, W);
  if (!report.undetermined.empty())
    return failure(std::to_string(report.undetermined.size()) + " undetermined collections");
  std::set<Collection> found;
  std::set<std::string> seen_families;
  const auto& m = variety_model(tag);
  for (const auto& c : report.confirmed) {
    found.insert(c.collection);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (coh_zero(m, c.collection.entries[j] - c.collection.entries[i]) != Verdict::Zero)
          return failure("confirmed collection fails a pair re-check");
    const auto it = listed.find(c.collection);
    if (it == listed.end()) return failure("unlisted collection found");
    std::set<std::string> names;
    for (const auto& l : c.labels) names.insert(format_label(l));
    if (names != it->second) return failure("label mismatch for " + *it->second.begin());
    for (const auto& n : names) seen_families.insert(family_of(n));
  }
  for (const auto& [c, names] : listed)
    if (!found.contains(c)) return failure("listed instance missing: " + *names.begin());
  if (seen_families.size() != families) return failure(std::to_string(seen_families.size()) + " families");
  return {true, std::to_string(found.size()) + " collections, " + std::to_string(seen_families.size()) +
                    " families, undetermined 0"};
}

// ---------------------------------------------------------------------------
// Relation chains: each entry lists consecutive type names.

std::vector<std::vector<std::string>> expected_chains(VarietyTag tag) {
  std::vector<std::vector<std::string>> out;
  auto n = [](Coeff v) { return std::to_string(v); };
  switch (tag) {
    case VarietyTag::BlowupPoint:
      for (Coeff a = -5; a <= 5; ++a)
        out.push_back({"(1)_" + n(a), "(2)_" + n(a - 1), "(3)_" + n(a - 2), "(1)_" + n(4 - a), "(2)_" + n(3 - a),
                       "(3)_" + n(2 - a), "(1)_" + n(a)});
      out.push_back({"(4)", "(5)", "(6)", "(7)", "(8)", "(9)", "(4)"});
      break;
    case VarietyTag::BlowupLine:
      for (Coeff a = -5; a <= 5; ++a)
        for (Coeff b = -5; b <= 5; ++b)
          out.push_back({"(1)_{" + n(a) + "," + n(b) + "}", "(2)_{" + n(b - a) + "," + n(3 - a) + "}",
                         "(1)_{" + n(b - a - 1) + "," + n(2 - a) + "}"});
      break;
    case VarietyTag::BlowupCubic:
      out.push_back({"(1)", "(2)", "(3)", "(4)", "(5)", "(6)", "(1)"});
      out.push_back({"(7)", "(8)", "(9)", "(10)", "(11)", "(12)", "(7)"});
      for (Coeff b = -5; b <= 5; ++b)
        out.push_back({"(13)_" + n(b), "(14)_" + n(b - 1), "(15)_" + n(b - 2), "(13)_" + n(5 - b),
                       "(14)_" + n(4 - b), "(15)_" + n(3 - b), "(13)_" + n(b)});
      break;
  }
  return out;
}

Outcome relations_check() {
  std::size_t links = 0;
  for (const auto tag : kAllVarieties) {
    const Catalog catalog = tag == VarietyTag::BlowupPoint  ? point_catalog()
                            : tag == VarietyTag::BlowupLine ? line_catalog()
                                                            : cubic_catalog();
    const auto report = verify_mutation_relations(tag, 5);
    std::map<std::pair<std::string, std::string>, std::vector<MoveStep>> found;
    for (const auto& chain : report.chains)
      for (const auto& link : chain.links)
        if (link.moves) found[{format_label(link.from), format_label(link.to)}] = *link.moves;
    for (const auto& chain : expected_chains(tag)) {
      Collection cur = as_collection(tag, catalog.at(chain.front()));
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto it = found.find({chain[i], chain[i + 1]});
        if (it == found.end()) return failure("no path " + chain[i] + " -> " + chain[i + 1]);
        cur = apply_moves(cur, it->second);
        if (cur != as_collection(tag, catalog.at(chain[i + 1])))
          return failure("moves for " + chain[i] + " -> " + chain[i + 1] + " land elsewhere");
        ++links;
      }
      if (chain.front() == chain.back() && cur != as_collection(tag, catalog.at(chain.front())))
        return failure("cycle from " + chain.front() + " does not close");
    }
  }
  return {true, std::to_string(links) + " links realized, all cycles close"};
}

// ---------------------------------------------------------------------------
// Within-family chains.

Outcome chain_check(VarietyTag tag, DivisorClass base, DivisorClass dir) {
  const Coeff W = 10;
  std::vector<std::size_t> counts;
  for (std::size_t len = 1; len <= 4; ++len) {
    const auto got = family_chains(tag, base, dir, len, W);
    std::set<std::vector<Coeff>> g(got.begin(), got.end());
    std::set<std::vector<Coeff>> want;
    for (Coeff x = -W; x <= W; ++x) {
      if (len == 1) want.insert({x});
      for (Coeff y = -W; y <= W; ++y) {
        if (len == 2 && (x == y - 1 || x == y - 2)) want.insert({x, y});
        if (len == 3 && x + 1 == y && y + 1 <= W) want.insert({x, y, y + 1});
      }
    }
    if (g != want) return failure("length " + std::to_string(len) + " differs");
    counts.push_back(g.size());
  }
  return {true, "chain counts " + std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" +
                    std::to_string(counts[2]) + "/" + std::to_string(counts[3])};
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");

  criterion(1, "point-blow-up vanishing set equals its 7 cases over [-30,30]^2", 1.0,
            [] { return zero_set_check(VarietyTag::BlowupPoint, point_zero); });

  criterion(2, "line-blow-up vanishing set equals its 4 cases over [-30,30]^2", 1.0,
            [] { return zero_set_check(VarietyTag::BlowupLine, line_zero); });

  criterion(3, "cubic-blow-up zero / unknown / nonzero partition over [-30,30]^2", 1.0, [] {
    const auto& m = variety_model(VarietyTag::BlowupCubic);
    std::size_t zero = 0, unknown = 0;
    for (Coeff a = -30; a <= 30; ++a)
      for (Coeff b = -30; b <= 30; ++b) {
        const Verdict want = cubic_zero(a, b)      ? Verdict::Zero
                             : cubic_unknown(a, b) ? Verdict::Unknown
                                                   : Verdict::Nonzero;
        if (coh_zero(m, {a, b}) != want) return failure("mismatch at (" + format_pair({a, b}) + ")");
        zero += want == Verdict::Zero;
        unknown += want == Verdict::Unknown;
      }
    return Outcome{true, std::to_string(zero) + " zero, " + std::to_string(unknown) + " unknown"};
  });

  criterion(4, "Euler characteristic: Riemann-Roch = closed form, chi(O)=1, chi(D) = -chi(K-D)", 1.0, [] {
    for (const auto tag : kAllVarieties) {
      const auto& m = variety_model(tag);
      if (euler_char(m, {0, 0}) != 1) return failure("chi(O) != 1");
      for (Coeff a = -30; a <= 30; ++a)
        for (Coeff b = -30; b <= 30; ++b) {
          const Coeff chi = euler_char(m, {a, b});
          if (chi != chi_closed(tag, a, b)) return failure("closed form differs at (" + format_pair({a, b}) + ")");
          if (chi != -euler_char(m, m.canonical - DivisorClass{a, b}))
            return failure("duality fails at (" + format_pair({a, b}) + ")");
        }
    }
    return Outcome{true, "3 models x 3721 classes"};
  });

  criterion(5, "exceptional-pair tables match the golden tables cell by cell", 0, [] {
    const std::vector<std::pair<VarietyTag, std::pair<const Grid*, std::vector<std::string>>>> cases{
        {VarietyTag::BlowupPoint, {&kPointGrid, {"B0", "B1", "B2", "B3", "B4", "B5", "B6"}}},
        {VarietyTag::BlowupLine, {&kLineGrid, {"B0", "B1", "B2", "B3"}}},
        {VarietyTag::BlowupCubic,
         {&kCubicGrid, {"B0", "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10"}}},
    };
    std::string detail;
    for (const auto& [tag, grid] : cases) {
      const auto r = table_check(tag, *grid.first, grid.second);
      if (!r.ok) return r;
      detail += (detail.empty() ? "" : "; ") + std::string(to_string(tag)) + " " + r.detail;
    }
    return Outcome{true, detail};
  });

  criterion(6, "point blow-up: enumeration (window 15) equals the nine listed types", 10.0,
            [] { return enumeration_check(VarietyTag::BlowupPoint, point_catalog(), 9); });

  criterion(7, "line blow-up: enumeration (window 15) equals the two listed types", 30.0,
            [] { return enumeration_check(VarietyTag::BlowupLine, line_catalog(), 2); });

  criterion(8, "cubic blow-up: enumeration (window 15) equals the fifteen listed types", 60.0,
            [] { return enumeration_check(VarietyTag::BlowupCubic, cubic_catalog(), 15); });

  criterion(9, "conic triple system (window 50) has exactly the four listed solutions", 30.0, [] {
    const std::set<ConicTriple> want{
        {0, 1, 2, 0, -3, 3}, {0, 1, 2, 0, 3, 0}, {1, -1, 2, -1, 4, -2}, {7, -4, 2, -1, 4, -2}};
    const auto got = solve_conic_triples(50);
    if (std::set<ConicTriple>(got.begin(), got.end()) != want || got.size() != 4)
      return failure(std::to_string(got.size()) + " solutions");
    return Outcome{true, "4 solutions"};
  });

  criterion(10, "mutation relation chains realized for parameters in [-5,5], cycles close", 10.0, relations_check);

  criterion(11, "augmentation of (0,1,2,3) at i=3 normalizes to type (4); all admissible i exceptional", 0, [] {
    const std::vector<Coeff> degrees{0, 1, 2, 3};
    const auto c = normalize(augment_point_blowup(degrees, 3));
    if (c != as_collection(VarietyTag::BlowupPoint, point_catalog().at("(4)"))) return failure("not type (4)");
    if (collection_verdict(c) != Verdict::Zero) return failure("verdict not zero");
    for (std::size_t i = 2; i <= 4; ++i)
      if (collection_verdict(augment_point_blowup(degrees, i)) != Verdict::Zero)
        return failure("index " + std::to_string(i) + " not exceptional");
    return Outcome{true, "indices 2..4"};
  });

  criterion(12, "within-family chains: length 2 and 3 conditions exact, no length 4 (parameters in [-10,10])", 0,
            [] {
              const auto p = chain_check(VarietyTag::BlowupPoint, {0, 1}, {1, -1});
              if (!p.ok) return Outcome{false, "point: " + p.detail};
              const auto c = chain_check(VarietyTag::BlowupCubic, {1, 0}, {2, -1});
              if (!c.ok) return Outcome{false, "cubic: " + c.detail};
              return Outcome{true, "point " + p.detail + "; cubic " + c.detail};
            });

  std::printf("%d of 12 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
