#pragma once

#include <string>

#include <json.hpp>

#include "tspread/betti.hpp"
#include "tspread/extremal.hpp"
#include "tspread/ideal.hpp"
#include "tspread/oracle.hpp"

namespace tspread {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt& value);

Json monomial_to_json(const Monomial& u);

/// `{"n": .., "t": .., "gens": [[..], ..]}`
Json ideal_to_json(const SpreadIdeal& ideal);
/// Reads the generators as given and minimalizes them. Throws ParseError.
SpreadIdeal ideal_from_json(const Json& j);
/// Parses the raw generator list and context without minimalizing.
std::pair<Context, std::vector<Monomial>> generators_from_json(const Json& j);

/// `{"rows": {"2": [..], ..}}`
Json betti_to_json(const BettiTable& table);
/// `{"corners": [[k, l], ..], "values": [..]}`
Json corners_to_json(const CornerSequence& seq);
Json report_to_json(const ConstructionReport& report);
Json cell_to_json(const TableCell& cell);
Json disagreement_to_json(const Disagreement& d);

}  // namespace tspread
