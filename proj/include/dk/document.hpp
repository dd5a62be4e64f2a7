#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "dk/chain.hpp"
#include "dk/crossed.hpp"
#include "dk/simplicial.hpp"

namespace dk {

using Json = nlohmann::json;

using Payload = std::variant<ChainComplex, SimplicialModule, SemiSimplicialModule, CrossedModule, SemiCrossedModule,
                             ChainMap, SimplicialMap, SemiSimplicialMap, CrossedMap, SemiCrossedMap>;

struct Document {
  std::string name;
  Payload payload;
};

/// Reads a document. Map sources and targets given as strings are resolved
/// relative to `base_dir`. Throws ParseError naming the offending location.
Document parse_document(const Json& j, const std::filesystem::path& base_dir = ".");
Document load_document(const std::filesystem::path& path);

Json to_json(const Document& doc);
Json to_json(const Payload& payload, const std::string& name = "");

/// Runs the payload's own validator.
Report validate(const Payload& payload);

/// "chain", "simplicial", "semisimplicial", "crossed" or "map".
std::string type_name(const Payload& payload);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& where);

}  // namespace dk
