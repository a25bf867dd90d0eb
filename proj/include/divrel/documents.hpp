#pragma once

#include <string>
#include <vector>

#include "divrel/monomial.hpp"
#include "divrel/relation.hpp"

#include <json.hpp>

namespace divrel {

using Json = nlohmann::ordered_json;

// {"variables": [...], "generators": [[exponents...], ...]}. With
// monomial_strings, generators are canonical monomial strings instead of
// exponent rows.
Json ideal_to_json(const GeneratorList& gens, bool monomial_strings = false);
GeneratorList ideal_from_json(const Json& doc);

// {"q": N, "relations": [[base, [targets...]], ...]}.
Json relations_to_json(const RelationSet& rels);
RelationSet relations_from_json(const Json& doc);

// Canonical serialization: UTF-8, two-space indent, trailing newline.
std::string dump_document(const Json& doc);
Json parse_document(const std::string& text);

GeneratorList ideal_from_file(const std::string& path);
RelationSet relations_from_file(const std::string& path);

} // namespace divrel
