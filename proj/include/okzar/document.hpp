#pragma once

// JSON variety documents, divisor expressions, and exact-number encoding.
//
// Variety document:
//   {
//     "name": "incidence3",
//     "dim": 3,
//     "basis_change": [ [[1,1,0],[0,1,1],[0,0,1]], [[1,1],[0,1]], [[1]] ],
//     "restriction": [ [1,-1], [-1] ],
//     "subcones": { "flag": ["D2", "D3"] }
//   }
// basis_change[k] is row-major; its columns are D_1..D_{n-k} of level k.
//
// Cone document (accepted by commands that only need a cone):
//   { "name": "...", "dim": 2, "rays": [[1,0],[1,2]] }

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "okzar/variety.hpp"

namespace okzar {

using Json = nlohmann::ordered_json;

struct ConeDocument {
  std::string name;
  ConeRep cone;
};

using Document = std::variant<VarietyData, ConeDocument>;

Json read_json_file(const std::filesystem::path& path);
/// Parses and validates; structural problems are Data errors with a JSON path.
VarietyData parse_variety(const Json& doc);
ConeDocument parse_cone_document(const Json& doc);
Document parse_document(const Json& doc);
VarietyData load_variety_file(const std::filesystem::path& path);

/// Linear expression over E1..En and D1..Dn, e.g. "D1+D2+D3", "D2 + 2E2",
/// "1/2*E3 - E1". Returns E-coordinates at the given level.
RatVec parse_divisor(const VarietyData& v, std::string_view expr, std::size_t level = 0);

Json to_json(const Rat& r);
Json to_json(const Int& z);
Json to_json(const RatVec& v);
Json to_json(const IntVec& v);
Json to_json(const std::vector<IntVec>& vs);
Json to_json(const std::vector<RatVec>& vs);
Json to_json(const ConeRep& c);
Json to_json(const Polytope& p);

Rat rat_from_json(const Json& j);

}  // namespace okzar
