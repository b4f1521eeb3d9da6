#include "excoll/serialization.hpp"

#include <stdexcept>

namespace excoll {

using nlohmann::json;

void to_json(json& j, VarietyTag tag) { j = std::string(to_string(tag)); }

void from_json(const json& j, VarietyTag& tag) {
  const auto parsed = parse_variety(j.get<std::string>());
  if (!parsed) throw std::invalid_argument("unknown variety tag '" + j.get<std::string>() + "'");
  tag = *parsed;
}

void to_json(json& j, Verdict v) { j = std::string(to_string(v)); }

void from_json(const json& j, Verdict& v) {
  const auto parsed = parse_verdict(j.get<std::string>());
  if (!parsed) throw std::invalid_argument("unknown verdict '" + j.get<std::string>() + "'");
  v = *parsed;
}

void to_json(json& j, const DivisorClass& d) { j = json::array({d.a, d.b}); }

void from_json(const json& j, DivisorClass& d) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("divisor must be a two-element array");
  d = {j.at(0).get<Coeff>(), j.at(1).get<Coeff>()};
}

void to_json(json& j, const Collection& c) { j = json{{"variety", c.variety}, {"entries", c.entries}}; }

void from_json(const json& j, Collection& c) {
  c.variety = j.at("variety").get<VarietyTag>();
  c.entries = j.at("entries").get<std::vector<DivisorClass>>();
}

void to_json(json& j, const TypeLabel& l) {
  j = json{{"variety", l.variety}, {"index", l.index}, {"params", l.params}, {"name", format_label(l)}};
}

void from_json(const json& j, TypeLabel& l) {
  l.variety = j.at("variety").get<VarietyTag>();
  l.index = j.at("index").get<int>();
  l.params = j.at("params").get<std::vector<Coeff>>();
}

void to_json(json& j, const TaggedClass& t) {
  j = json{{"divisor", t.divisor}, {"family", t.family}, {"negation_verdict", t.negation_verdict}};
  j["param"] = t.param ? json(*t.param) : json(nullptr);
}

void from_json(const json& j, TaggedClass& t) {
  t.divisor = j.at("divisor").get<DivisorClass>();
  t.family = j.at("family").get<std::string>();
  t.param = j.at("param").is_null() ? std::nullopt : std::optional<Coeff>(j.at("param").get<Coeff>());
  t.negation_verdict = j.at("negation_verdict").get<Verdict>();
}

void to_json(json& j, const CellCondition& c) {
  j = json{{"kind", std::string(to_string(c.kind))}, {"values", c.values}};
}

void from_json(const json& j, CellCondition& c) {
  const auto kind = parse_cell_kind(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown cell kind");
  c.kind = *kind;
  c.values = j.at("values").get<std::vector<Coeff>>();
}

void to_json(json& j, const PairCell& c) {
  j = json{{"row", c.row},
           {"col", c.col},
           {"condition", c.condition},
           {"zero", c.zero_count},
           {"unknown", c.unknown_count},
           {"nonzero", c.nonzero_count}};
}

void from_json(const json& j, PairCell& c) {
  c.row = j.at("row").get<std::string>();
  c.col = j.at("col").get<std::string>();
  c.condition = j.at("condition").get<CellCondition>();
  c.zero_count = j.at("zero").get<std::size_t>();
  c.unknown_count = j.at("unknown").get<std::size_t>();
  c.nonzero_count = j.at("nonzero").get<std::size_t>();
}

void to_json(json& j, const PairTable& t) {
  j = json{{"variety", t.variety},
           {"param_window", t.param_window},
           {"region_window", t.region_window},
           {"labels", t.labels},
           {"cells", t.cells}};
}

void from_json(const json& j, PairTable& t) {
  t.variety = j.at("variety").get<VarietyTag>();
  t.param_window = j.at("param_window").get<Coeff>();
  t.region_window = j.at("region_window").get<Coeff>();
  t.labels = j.at("labels").get<std::vector<std::string>>();
  t.cells = j.at("cells").get<std::vector<PairCell>>();
}

void to_json(json& j, const ConfirmedCollection& c) {
  j = json{{"collection", c.collection}, {"labels", c.labels}};
}

void from_json(const json& j, ConfirmedCollection& c) {
  c.collection = j.at("collection").get<Collection>();
  c.labels = j.at("labels").get<std::vector<TypeLabel>>();
}

void to_json(json& j, const EnumerationReport& r) {
  j = json{{"variety", r.variety}, {"window", r.window}, {"confirmed", r.confirmed}, {"undetermined", r.undetermined}};
}

void from_json(const json& j, EnumerationReport& r) {
  r.variety = j.at("variety").get<VarietyTag>();
  r.window = j.at("window").get<Coeff>();
  r.confirmed = j.at("confirmed").get<std::vector<ConfirmedCollection>>();
  r.undetermined = j.at("undetermined").get<std::vector<Collection>>();
}

void to_json(json& j, const MoveStep& m) { j = to_string(m); }

void from_json(const json& j, MoveStep& m) {
  const auto parsed = parse_move(j.get<std::string>());
  if (!parsed) throw std::invalid_argument("unknown move '" + j.get<std::string>() + "'");
  m = *parsed;
}

void to_json(json& j, const RelationLink& l) {
  j = json{{"from", l.from}, {"to", l.to}};
  j["moves"] = l.moves ? json(*l.moves) : json(nullptr);
}

void from_json(const json& j, RelationLink& l) {
  l.from = j.at("from").get<TypeLabel>();
  l.to = j.at("to").get<TypeLabel>();
  l.moves = j.at("moves").is_null() ? std::nullopt
                                    : std::optional<std::vector<MoveStep>>(j.at("moves").get<std::vector<MoveStep>>());
}

void to_json(json& j, const RelationChain& c) {
  j = json{{"name", c.name}, {"params", c.params}, {"links", c.links}, {"cyclic", c.cyclic}, {"closes", c.closes}};
}

void from_json(const json& j, RelationChain& c) {
  c.name = j.at("name").get<std::string>();
  c.params = j.at("params").get<std::vector<Coeff>>();
  c.links = j.at("links").get<std::vector<RelationLink>>();
  c.cyclic = j.at("cyclic").get<bool>();
  c.closes = j.at("closes").get<bool>();
}

void to_json(json& j, const MutationReport& r) {
  j = json{{"variety", r.variety},
           {"param_range", r.param_range},
           {"chains", r.chains},
           {"diagnostics", r.diagnostics}};
}

void from_json(const json& j, MutationReport& r) {
  r.variety = j.at("variety").get<VarietyTag>();
  r.param_range = j.at("param_range").get<Coeff>();
  r.chains = j.at("chains").get<std::vector<RelationChain>>();
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace excoll
