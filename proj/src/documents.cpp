#include "divrel/documents.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace divrel {

Json ideal_to_json(const GeneratorList& gens, bool monomial_strings) {
    Json doc;
    doc["variables"] = gens.vars->names();
    Json rows = Json::array();
    for (const auto& g : gens.gens) {
        if (monomial_strings) {
            rows.push_back(g.str());
            continue;
        }
        Json row = Json::array();
        for (std::size_t pos = 0; pos < gens.vars->size(); ++pos) {
            Exponent e = g.exponent(static_cast<int>(pos));
            if (e > std::numeric_limits<std::int64_t>::max())
                throw InputError("exponent too large for JSON serialization");
            row.push_back(e.convert_to<std::int64_t>());
        }
        rows.push_back(std::move(row));
    }
    doc["generators"] = std::move(rows);
    return doc;
}

GeneratorList ideal_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("generators"))
        throw InputError("ideal document needs 'variables' and 'generators'");
    if (!doc["variables"].is_array())
        throw InputError("'variables' must be an array of names");
    std::vector<std::string> names;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string())
            throw InputError("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    VarsPtr vars = make_variables(std::move(names));

    if (!doc["generators"].is_array())
        throw InputError("'generators' must be an array");
    std::vector<Monomial> gens;
    for (const auto& row : doc["generators"]) {
        if (row.is_string()) {
            gens.push_back(parse_monomial(vars, row.get<std::string>()));
            continue;
        }
        if (!row.is_array() || row.size() != vars->size())
            throw InputError("generator rows must match the variable count");
        std::vector<Monomial::Term> terms;
        for (std::size_t pos = 0; pos < row.size(); ++pos) {
            if (!row[pos].is_number_integer() || row[pos].get<std::int64_t>() < 0)
                throw InputError("exponents must be nonnegative integers");
            std::int64_t e = row[pos].get<std::int64_t>();
            if (e > 0)
                terms.emplace_back(static_cast<int>(pos), e);
        }
        gens.push_back(Monomial::from_terms(vars, std::move(terms)));
    }
    return make_generator_list(std::move(vars), std::move(gens));
}

Json relations_to_json(const RelationSet& rels) {
    Json doc;
    doc["q"] = rels.q;
    Json list = Json::array();
    for (const auto& r : rels.rels)
        list.push_back(Json::array({r.base, r.targets}));
    doc["relations"] = std::move(list);
    return doc;
}

RelationSet relations_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("q") || !doc.contains("relations"))
        throw InputError("relation document needs 'q' and 'relations'");
    if (!doc["q"].is_number_integer())
        throw InputError("'q' must be an integer");
    int q = doc["q"].get<int>();
    if (!doc["relations"].is_array())
        throw InputError("'relations' must be an array");
    std::vector<DivRel> rels;
    for (const auto& entry : doc["relations"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_array())
            throw InputError("relations must be [base, [targets...]] pairs");
        std::vector<int> targets;
        for (const auto& t : entry[1]) {
            if (!t.is_number_integer())
                throw InputError("targets must be integers");
            targets.push_back(t.get<int>());
        }
        rels.push_back(make_rel(entry[0].get<int>(), std::move(targets), q));
    }
    return make_relation_set(q, std::move(rels));
}

std::string dump_document(const Json& doc) {
    return doc.dump(2) + "\n";
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

GeneratorList ideal_from_file(const std::string& path) {
    return ideal_from_json(parse_document(read_file(path)));
}

RelationSet relations_from_file(const std::string& path) {
    return relations_from_json(parse_document(read_file(path)));
}

} // namespace divrel
