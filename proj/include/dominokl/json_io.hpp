#pragma once

#include <json.hpp>

#include "dominokl/cells.hpp"
#include "dominokl/characters.hpp"
#include "dominokl/hecke.hpp"
#include "dominokl/rs.hpp"
#include "dominokl/symbols.hpp"

namespace dkl {

using Json = nlohmann::ordered_json;

Json toJson(const Partition& p);                 // [4,3,3,1]
Json toJson(const Bipartition& bp);              // {"d":[...],"f":[...]}
Json toJson(const DominoTableau& t);             // {"rank":..,"shape":..,"dominoes":[..]}
Json toJson(const Cycle& c);
Json toJson(const Symbol& s);                    // {"epsilon":"1/2","top":[..],"bottom":[..]}
Json toJson(const Laurent& p);                   // [[-2,1],[0,3]] sorted exp:coeff pairs
Json toJson(const TableauPair& pair);
Json cellsToJson(const WGroup& W, const CellPartition& cells);
Json cellsToJson(const WGroup& W, const std::vector<CombinatorialCell>& cells);
Json toJson(const PropertyReport& rep);
Json toJson(const VerificationReport& rep);

// One row per (n,a,b) with pass/fail flags per check.
std::string reportCsvHeader();
std::string reportCsvRow(const VerificationReport& rep);

Partition partitionFromJson(const Json& j);
DominoTableau tableauFromJson(const Json& j);

}  // namespace dkl
