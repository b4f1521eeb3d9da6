#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "excoll/collection.hpp"
#include "excoll/divisor.hpp"
#include "excoll/enumeration.hpp"
#include "excoll/families.hpp"
#include "excoll/geometry.hpp"
#include "excoll/mutation.hpp"
#include "excoll/pair_table.hpp"
#include "excoll/vanishing.hpp"

// JSON forms. Objects use nlohmann::json's ordered std::map, so keys are
// always emitted sorted. from_json throws nlohmann::json::exception or
// std::invalid_argument on malformed input.

namespace excoll {

void to_json(nlohmann::json& j, VarietyTag tag);
void from_json(const nlohmann::json& j, VarietyTag& tag);

void to_json(nlohmann::json& j, Verdict v);
void from_json(const nlohmann::json& j, Verdict& v);

void to_json(nlohmann::json& j, const DivisorClass& d);  // [a, b]
void from_json(const nlohmann::json& j, DivisorClass& d);

void to_json(nlohmann::json& j, const Collection& c);  // {"entries": [[a,b],...], "variety": tag}
void from_json(const nlohmann::json& j, Collection& c);

void to_json(nlohmann::json& j, const TypeLabel& l);
void from_json(const nlohmann::json& j, TypeLabel& l);

void to_json(nlohmann::json& j, const TaggedClass& t);
void from_json(const nlohmann::json& j, TaggedClass& t);

void to_json(nlohmann::json& j, const CellCondition& c);
void from_json(const nlohmann::json& j, CellCondition& c);

void to_json(nlohmann::json& j, const PairCell& c);
void from_json(const nlohmann::json& j, PairCell& c);

void to_json(nlohmann::json& j, const PairTable& t);
void from_json(const nlohmann::json& j, PairTable& t);

void to_json(nlohmann::json& j, const ConfirmedCollection& c);
void from_json(const nlohmann::json& j, ConfirmedCollection& c);

void to_json(nlohmann::json& j, const EnumerationReport& r);
void from_json(const nlohmann::json& j, EnumerationReport& r);

void to_json(nlohmann::json& j, const MoveStep& m);  // "R", "L", "T3"
void from_json(const nlohmann::json& j, MoveStep& m);

void to_json(nlohmann::json& j, const RelationLink& l);
void from_json(const nlohmann::json& j, RelationLink& l);

void to_json(nlohmann::json& j, const RelationChain& c);
void from_json(const nlohmann::json& j, RelationChain& c);

void to_json(nlohmann::json& j, const MutationReport& r);
void from_json(const nlohmann::json& j, MutationReport& r);

/// Two-space indented rendering with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace excoll
