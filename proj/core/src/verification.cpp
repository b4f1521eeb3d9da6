#include "excoll/verification.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "excoll/collection.hpp"
#include "excoll/diophantine.hpp"
#include "excoll/enumeration.hpp"
#include "excoll/families.hpp"
#include "excoll/mutation.hpp"
#include "excoll/pair_table.hpp"
#include "excoll/vanishing.hpp"

namespace excoll {

namespace {

struct TargetName {
  VerifyTarget target;
  std::string_view name;
};

constexpr std::array<TargetName, 11> kTargets{{
    {VerifyTarget::PointVanishing, "prop4.3"},
    {VerifyTarget::LineVanishing, "prop5.5"},
    {VerifyTarget::CubicVanishing, "prop6.4"},
    {VerifyTarget::PointCollections, "thm4.4"},
    {VerifyTarget::LineCollections, "thm5.6"},
    {VerifyTarget::CubicCollections, "thm6.5"},
    {VerifyTarget::PairTables, "tables"},
    {VerifyTarget::Relations, "relations"},
    {VerifyTarget::PointChains, "claim4.5"},
    {VerifyTarget::CubicChains, "claim6.2"},
    {VerifyTarget::ConicTriples, "claim6.3"},
}};

constexpr std::array<VerifyTarget, 11> kTargetList{
    VerifyTarget::PointVanishing,   VerifyTarget::LineVanishing,  VerifyTarget::CubicVanishing,
    VerifyTarget::PointCollections, VerifyTarget::LineCollections, VerifyTarget::CubicCollections,
    VerifyTarget::PairTables,       VerifyTarget::Relations,       VerifyTarget::PointChains,
    VerifyTarget::CubicChains,      VerifyTarget::ConicTriples,
};

constexpr std::array<std::array<Coeff, 6>, 4> kConicTriples{{
    {0, 1, 2, 0, -3, 3},
    {0, 1, 2, 0, 3, 0},
    {1, -1, 2, -1, 4, -2},
    {7, -4, 2, -1, 4, -2},
}};

Coeff require_window(const VerifyOptions& o, Coeff fallback, Coeff minimum) {
  const Coeff w = o.window.value_or(fallback);
  if (w < minimum) throw std::invalid_argument("window must be >= " + std::to_string(minimum));
  return w;
}

std::vector<VarietyTag> selected(const VerifyOptions& o) {
  if (o.variety) return {*o.variety};
  return {kAllVarieties.begin(), kAllVarieties.end()};
}

void fail(VerificationResult& r, std::string message) {
  r.passed = false;
  r.mismatches.push_back(std::move(message));
}

VerificationResult vanishing_check(VerifyTarget target, VarietyTag tag, Coeff window) {
  VerificationResult r{std::string(to_string(target)), true, {}, {}};
  const auto& model = variety_model(tag);
  std::size_t zero = 0;
  std::size_t unknown = 0;
  std::set<int> cases_hit;
  for (Coeff a = -window; a <= window; ++a) {
    for (Coeff b = -window; b <= window; ++b) {
      const DivisorClass d{a, b};
      const Verdict v = coh_zero(model, d);
      const auto c = matching_case(tag, d);
      if (c) cases_hit.insert(*c);
      const bool undecided = tag == VarietyTag::BlowupCubic && cubic_undecided_region(d) != CubicRegion::None;
      const Verdict expected = c ? Verdict::Zero : (undecided ? Verdict::Unknown : Verdict::Nonzero);
      if (v != expected) {
        fail(r, "(" + format_pair(d) + "): verdict " + std::string(to_string(v)) + ", case list says " +
                    std::string(to_string(expected)));
      }
      if (tag != VarietyTag::BlowupCubic && coh_zero_via_chi(model, d) != v) {
        fail(r, "(" + format_pair(d) + "): Euler-characteristic route disagrees");
      }
      if (v == Verdict::Zero) {
        ++zero;
        if (euler_char(model, d) != 0 || !h0_vanishes(model, d) || !h3_vanishes(model, d)) {
          fail(r, "(" + format_pair(d) + "): Zero verdict with a nonvanishing necessary condition");
        }
      }
      if (v == Verdict::Unknown) {
        ++unknown;
        if (euler_char(model, d) != 0 || !h0_vanishes(model, d) || !h3_vanishes(model, d)) {
          fail(r, "(" + format_pair(d) + "): Unknown verdict where a necessary condition already fails");
        }
      }
    }
  }
  const auto total_cases = vanishing_cases(tag).size();
  if (cases_hit.size() != total_cases) {
    fail(r, "only " + std::to_string(cases_hit.size()) + " of " + std::to_string(total_cases) +
                " cases occur in the window");
  }
  r.summary.push_back("variety: " + std::string(to_string(tag)) + ", window: " + std::to_string(window));
  r.summary.push_back("cases: " + std::to_string(total_cases) + ", zero classes: " + std::to_string(zero) +
                      ", unknown classes: " + std::to_string(unknown));
  return r;
}

VerificationResult collections_check(VerifyTarget target, VarietyTag tag, Coeff window) {
  VerificationResult r{std::string(to_string(target)), true, {}, {}};
  const auto& model = variety_model(tag);
  const auto report = enumerate_collections(tag, window);

  std::set<Collection> expected;
  for (const auto& label : type_instances_in_window(tag, window)) expected.insert(instantiate(label));

  std::set<Collection> found;
  std::set<int> families;
  for (const auto& c : report.confirmed) {
    found.insert(c.collection);
    for (std::size_t i = 0; i < c.collection.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pair_verdict(model, c.collection.entries[j], c.collection.entries[i]) != Verdict::Zero) {
          fail(r, "confirmed collection fails pair re-check: " + format_pair(c.collection.entries[j]) + " / " +
                      format_pair(c.collection.entries[i]));
        }
      }
    }
    if (c.labels.empty()) {
      std::string entries;
      for (const auto& d : c.collection.entries) entries += " (" + format_pair(d) + ")";
      fail(r, "confirmed collection matches no listed type:" + entries);
    }
    if (c.labels.size() > 1) {
      std::string names;
      for (const auto& l : c.labels) names += " " + format_label(l);
      r.summary.push_back("multiple type matches:" + names);
    }
    for (const auto& l : c.labels) families.insert(l.index);
  }
  for (const auto& c : expected) {
    if (!found.contains(c)) {
      const auto labels = classify_collection(c);
      fail(r, "listed instance not found by the search: " + (labels.empty() ? "?" : format_label(labels.front())));
    }
  }
  for (const auto& c : report.undetermined) {
    std::string entries;
    for (const auto& d : c.entries) entries += " (" + format_pair(d) + ")";
    fail(r, "undetermined collection:" + entries);
  }
  r.summary.push_back("variety: " + std::string(to_string(tag)) + ", window: " + std::to_string(window));
  r.summary.push_back("confirmed collections: " + std::to_string(report.confirmed.size()) +
                      ", listed instances: " + std::to_string(expected.size()));
  r.summary.push_back("confirmed families: " + std::to_string(families.size()) +
                      ", undetermined: " + std::to_string(report.undetermined.size()));
  return r;
}

VerificationResult tables_check(const VerifyOptions& o) {
  VerificationResult r{"tables", true, {}, {}};
  const Coeff w = require_window(o, 15, 10);
  for (const auto tag : selected(o)) {
    const auto table = pair_table(tag, w);
    const auto diffs = diff_against_published(table);
    for (const auto& d : diffs) fail(r, std::string(to_string(tag)) + " " + d);
    r.summary.push_back(std::string(to_string(tag)) + ": " + std::to_string(table.cells.size()) + " cells, " +
                        std::to_string(diffs.size()) + " mismatches");
  }
  return r;
}

VerificationResult relations_check(const VerifyOptions& o) {
  VerificationResult r{"relations", true, {}, {}};
  const Coeff range = o.param_range.value_or(5);
  if (range < 3) throw std::invalid_argument("param range must be >= 3");
  for (const auto tag : selected(o)) {
    const auto report = verify_mutation_relations(tag, range);
    for (const auto& chain : report.chains) {
      if (chain.closes) continue;
      std::string params;
      for (const auto p : chain.params) params += (params.empty() ? "" : ",") + std::to_string(p);
      fail(r, std::string(to_string(tag)) + " " + chain.name + " [" + params + "] not realized");
    }
    r.summary.push_back(std::string(to_string(tag)) + ": links realized " + std::to_string(report.realized_count()) +
                        "/" + std::to_string(report.link_count()) + ", chains " +
                        std::to_string(report.chains.size()));
    for (const auto& d : report.diagnostics) r.summary.push_back("note: " + d);
  }
  return r;
}

VerificationResult chains_check(VerifyTarget target, VarietyTag tag, DivisorClass base, DivisorClass direction,
                                Coeff window) {
  VerificationResult r{std::string(to_string(target)), true, {}, {}};
  r.summary.push_back("variety: " + std::string(to_string(tag)) + ", family: " + format_divisor(base) + " + t(" +
                      format_divisor(direction) + ")");
  using Params = std::vector<Coeff>;
  auto compare = [&](std::size_t length, auto predicate) {
    const auto got = family_chains(tag, base, direction, length, window);
    std::set<Params> got_set(got.begin(), got.end());
    std::set<Params> want;
    Params p(length);
    // Enumerate the window product directly.
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == length) {
        if (predicate(p)) want.insert(p);
        return;
      }
      for (Coeff t = -window; t <= window; ++t) {
        p[k] = t;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    if (got_set != want) {
      fail(r, "length " + std::to_string(length) + ": " + std::to_string(got_set.size()) + " chains found, " +
                  std::to_string(want.size()) + " expected by the stated condition");
    }
    r.summary.push_back("length " + std::to_string(length) + ": " + std::to_string(got_set.size()) + " chains");
  };
  compare(1, [](const Params&) { return true; });
  compare(2, [](const Params& p) { return p[0] == p[1] - 1 || p[0] == p[1] - 2; });
  compare(3, [](const Params& p) { return p[0] + 1 == p[1] && p[1] == p[2] - 1; });
  const auto four = family_chains(tag, base, direction, 4, window);
  if (!four.empty()) fail(r, "length 4: " + std::to_string(four.size()) + " chains found, none expected");
  r.summary.push_back("length 4: " + std::to_string(four.size()) + " chains");
  r.summary.push_back("parameter window: " + std::to_string(window));
  return r;
}

VerificationResult conic_check(Coeff window) {
  VerificationResult r{"claim6.3", true, {}, {}};
  const auto sols = solve_conic_triples(window);
  std::set<ConicTriple> got(sols.begin(), sols.end());
  std::set<ConicTriple> want(kConicTriples.begin(), kConicTriples.end());
  auto fmt = [](const ConicTriple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
  };
  for (const auto& t : got)
    if (!want.contains(t)) fail(r, "unexpected solution " + fmt(t));
  for (const auto& t : want)
    if (!got.contains(t)) fail(r, "missing solution " + fmt(t));
  const auto& model = variety_model(VarietyTag::BlowupCubic);
  // The system only constrains f and chi. A solution would contradict the
  // claim only if every -D_i lay in an undecided region and all three pairs
  // were exceptional.
  for (const auto& t : sols) {
    const std::array<DivisorClass, 3> p{DivisorClass{t[0], t[1]}, {t[2], t[3]}, {t[4], t[5]}};
    bool all_undecided = true;
    for (const auto& d : p) all_undecided = all_undecided && cubic_undecided_region(-d) != CubicRegion::None;
    std::string verdicts;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        verdicts += (verdicts.empty() ? "" : " ") + std::string(to_string(pair_verdict(model, p[i], p[j])));
    if (all_undecided) fail(r, "solution " + fmt(t) + " has every -D_i in an undecided region");
    r.summary.push_back(fmt(t) + " pair verdicts: " + verdicts + (all_undecided ? "" : ", not all -D_i undecided"));
  }
  r.summary.insert(r.summary.begin(), "window: " + std::to_string(window) + ", solutions: " + std::to_string(sols.size()));
  return r;
}

}  // namespace

std::string_view to_string(VerifyTarget target) {
  for (const auto& t : kTargets)
    if (t.target == target) return t.name;
  return "?";
}

std::optional<VerifyTarget> parse_verify_target(std::string_view text) {
  for (const auto& t : kTargets)
    if (t.name == text) return t.target;
  return std::nullopt;
}

std::span<const VerifyTarget> all_verify_targets() { return kTargetList; }

std::span<const std::array<Coeff, 6>> published_conic_triples() { return kConicTriples; }

VerificationResult verify(VerifyTarget target, const VerifyOptions& o) {
  switch (target) {
    case VerifyTarget::PointVanishing:
      return vanishing_check(target, VarietyTag::BlowupPoint, require_window(o, 30, 1));
    case VerifyTarget::LineVanishing:
      return vanishing_check(target, VarietyTag::BlowupLine, require_window(o, 30, 1));
    case VerifyTarget::CubicVanishing:
      return vanishing_check(target, VarietyTag::BlowupCubic, require_window(o, 30, 1));
    case VerifyTarget::PointCollections:
      return collections_check(target, VarietyTag::BlowupPoint, require_window(o, 15, 10));
    case VerifyTarget::LineCollections:
      return collections_check(target, VarietyTag::BlowupLine, require_window(o, 15, 10));
    case VerifyTarget::CubicCollections:
      return collections_check(target, VarietyTag::BlowupCubic, require_window(o, 15, 10));
    case VerifyTarget::PairTables: return tables_check(o);
    case VerifyTarget::Relations: return relations_check(o);
    case VerifyTarget::PointChains:
      return chains_check(target, VarietyTag::BlowupPoint, {0, 1}, {1, -1}, require_window(o, 10, 3));
    case VerifyTarget::CubicChains:
      return chains_check(target, VarietyTag::BlowupCubic, {1, 0}, {2, -1}, require_window(o, 10, 3));
    case VerifyTarget::ConicTriples: return conic_check(require_window(o, 50, 10));
  }
  throw std::invalid_argument("unknown verification target");
}

}  // namespace excoll
