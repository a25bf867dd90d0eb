#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divrel/closure.hpp"
#include "divrel/decision_tree.hpp"
#include "divrel/documents.hpp"
#include "divrel/extremal.hpp"
#include "divrel/homology.hpp"
#include "divrel/transfer.hpp"

namespace py = pybind11;

namespace {

using divrel::DivRel;
using divrel::GeneratorList;
using divrel::RelationSet;

DivRel rel_from_pair(const std::pair<int, std::vector<int>>& pair, int q) {
    return divrel::make_rel(pair.first, pair.second, q);
}

std::pair<int, std::vector<int>> rel_to_pair(const DivRel& rel) {
    return {rel.base, rel.targets};
}

GeneratorList make_ideal(const std::vector<std::string>& variables,
                         const std::vector<std::string>& generators) {
    divrel::VarsPtr vars = divrel::make_variables(variables);
    std::vector<divrel::Monomial> gens;
    gens.reserve(generators.size());
    for (const auto& text : generators)
        gens.push_back(divrel::parse_monomial(vars, text));
    return divrel::make_generator_list(vars, std::move(gens));
}

RelationSet make_relations(int q, const std::vector<std::pair<int, std::vector<int>>>& rels) {
    std::vector<DivRel> out;
    out.reserve(rels.size());
    for (const auto& pair : rels)
        out.push_back(rel_from_pair(pair, q));
    return divrel::make_relation_set(q, std::move(out));
}

std::vector<std::pair<int, std::vector<int>>> relations_out(const RelationSet& rels) {
    std::vector<std::pair<int, std::vector<int>>> out;
    out.reserve(rels.size());
    for (const auto& r : rels.rels)
        out.push_back(rel_to_pair(r));
    return out;
}

divrel::Field field_from_str(const std::string& name) {
    if (name == "q" || name == "rational")
        return divrel::Field::rationals();
    return divrel::Field::gf(std::stoull(name));
}

py::dict betti_dict(const divrel::BettiTable& table) {
    py::dict out;
    out["field"] = table.field.name();
    out["total"] = table.total;
    py::list graded;
    for (std::size_t i = 0; i < table.graded.size(); ++i)
        for (const auto& [degree, count] : table.graded[i]) {
            py::dict entry;
            entry["i"] = i;
            entry["multidegree"] = degree.str();
            entry["count"] = count;
            graded.append(entry);
        }
    out["graded"] = graded;
    return out;
}

py::dict verdict_dict(const RelationSet& rels, const divrel::Verdict& verdict) {
    py::dict out;
    out["member"] = verdict.is_member();
    switch (verdict.kind) {
    case divrel::VerdictKind::in_trivial:
        out["kind"] = "trivial";
        break;
    case divrel::VerdictKind::in_derived:
        out["kind"] = "derivation";
        out["relations"] = verdict.derivation->relations;
        break;
    case divrel::VerdictKind::not_in:
        out["kind"] = "witness";
        out["set"] = verdict.witness->set;
        break;
    }
    (void)rels;
    return out;
}

divrel::Verdict verdict_from_dict(const py::dict& doc) {
    divrel::Verdict verdict;
    std::string kind = doc["kind"].cast<std::string>();
    if (kind == "trivial") {
        verdict.kind = divrel::VerdictKind::in_trivial;
    } else if (kind == "derivation") {
        verdict.kind = divrel::VerdictKind::in_derived;
        verdict.derivation =
            divrel::Derivation{doc["relations"].cast<std::vector<int>>()};
    } else if (kind == "witness") {
        verdict.kind = divrel::VerdictKind::not_in;
        verdict.witness =
            divrel::Witness{divrel::make_index_set(doc["set"].cast<std::vector<int>>())};
    } else {
        throw divrel::InputError("unknown verdict kind: " + kind);
    }
    return verdict;
}

} // namespace

PYBIND11_MODULE(divrel, m) {
    m.doc() = "Divisibility-relation calculus on monomial ideals: closures, "
              "extremal ideals, decision certificates, and Betti numbers.";

    py::register_exception<divrel::CapError>(m, "CapError");
    py::register_exception<divrel::InputError>(m, "InputError");

    py::class_<GeneratorList>(m, "Ideal")
        .def(py::init(&make_ideal), py::arg("variables"), py::arg("generators"))
        .def_property_readonly("variables",
                               [](const GeneratorList& g) { return g.vars->names(); })
        .def_property_readonly("generators",
                               [](const GeneratorList& g) {
                                   std::vector<std::string> out;
                                   for (const auto& mono : g.gens)
                                       out.push_back(mono.str());
                                   return out;
                               })
        .def("__len__", &GeneratorList::size)
        .def("__repr__", [](const GeneratorList& g) {
            std::string out = "Ideal(";
            for (int i = 1; i <= g.size(); ++i) {
                if (i > 1)
                    out += ", ";
                out += g.at(i).str();
            }
            return out + ")";
        });

    py::class_<RelationSet>(m, "Relations")
        .def(py::init(&make_relations), py::arg("q"), py::arg("relations"))
        .def_property_readonly("q", [](const RelationSet& r) { return r.q; })
        .def_property_readonly("relations", &relations_out)
        .def("__len__", &RelationSet::size)
        .def("__eq__", [](const RelationSet& a, const RelationSet& b) { return a == b; })
        .def("__repr__", [](const RelationSet& r) {
            std::string out = "Relations(q=" + std::to_string(r.q) + ", [";
            for (std::size_t i = 0; i < r.rels.size(); ++i) {
                if (i)
                    out += ", ";
                out += r.rels[i].str();
            }
            return out + "])";
        });

    py::class_<divrel::ExtremalIdeal>(m, "ExtremalIdeal")
        .def_property_readonly("q", [](const divrel::ExtremalIdeal& e) { return e.q; })
        .def_property_readonly("variables",
                               [](const divrel::ExtremalIdeal& e) { return e.vars->names(); })
        .def_property_readonly("generators",
                               [](const divrel::ExtremalIdeal& e) {
                                   std::vector<std::string> out;
                                   for (const auto& g : e.gens)
                                       out.push_back(g.str());
                                   return out;
                               })
        .def_property_readonly("q_set",
                               [](const divrel::ExtremalIdeal& e) { return e.qset.members; })
        .def("ideal",
             [](const divrel::ExtremalIdeal& e) { return divrel::generator_list(e); });

    m.def(
        "compose",
        [](std::pair<int, std::vector<int>> r1, std::pair<int, std::vector<int>> r2) {
            return rel_to_pair(divrel::compose(rel_from_pair(r1, 0), rel_from_pair(r2, 0)));
        },
        py::arg("r1"), py::arg("r2"));
    m.def("is_trivial", [](std::pair<int, std::vector<int>> r) {
        return divrel::is_trivial(rel_from_pair(r, 0));
    });
    m.def("leq", [](std::pair<int, std::vector<int>> r1, std::pair<int, std::vector<int>> r2) {
        return divrel::rel_leq(rel_from_pair(r1, 0), rel_from_pair(r2, 0));
    });
    m.def("holds", [](std::pair<int, std::vector<int>> r, const GeneratorList& gens) {
        return divrel::holds(rel_from_pair(r, gens.size()), gens);
    });
    m.def("div_min", &divrel::div_min);
    m.def("extract_minimal_generating", &divrel::extract_minimal_generating);
    m.def("is_generating", &divrel::is_generating);
    m.def("is_minimal_generating", &divrel::is_minimal_generating);

    m.def("closure_core",
          [](const RelationSet& rels) { return divrel::closure(rels).min_core; });
    m.def("member", [](const RelationSet& rels, std::pair<int, std::vector<int>> r) {
        return divrel::member(divrel::closure(rels), rel_from_pair(r, rels.q));
    });

    m.def("q_set", [](const RelationSet& rels, int q) { return divrel::q_set(rels, q).members; },
          py::arg("relations"), py::arg("q"));
    m.def("extremal_ideal",
          [](const RelationSet& rels, int q) { return divrel::extremal_ideal(rels, q); },
          py::arg("relations"), py::arg("q"));
    m.def(
        "power_generators",
        [](const divrel::ExtremalIdeal& ideal, int r) {
            std::vector<std::pair<std::vector<int>, std::string>> out;
            for (const auto& [tuple, mono] : divrel::power_generators(ideal, r).entries)
                out.emplace_back(tuple, mono.str());
            return out;
        },
        py::arg("ideal"), py::arg("r"));
    m.def("ideals_equal", &divrel::ideals_equal);

    m.def(
        "decide",
        [](const RelationSet& rels, int base, const std::vector<int>& targets) {
            DivRel query = divrel::make_rel(base, targets, rels.q);
            return verdict_dict(rels, divrel::membership_with_certificate(rels, query));
        },
        py::arg("relations"), py::arg("base"), py::arg("targets"));
    m.def(
        "verify_certificate",
        [](const RelationSet& rels, int base, const std::vector<int>& targets,
           const py::dict& verdict) {
            DivRel query = divrel::make_rel(base, targets, rels.q);
            return divrel::verify_certificate(rels, query, verdict_from_dict(verdict));
        },
        py::arg("relations"), py::arg("base"), py::arg("targets"), py::arg("verdict"));

    m.def(
        "betti",
        [](const GeneratorList& gens, const std::string& field, int threads) {
            divrel::BettiOptions options;
            options.field = field_from_str(field);
            options.threads = threads;
            return betti_dict(divrel::betti(gens, options));
        },
        py::arg("ideal"), py::arg("field") = "q", py::arg("threads") = 1);
    m.def(
        "betti_power",
        [](const GeneratorList& gens, int r, const std::string& field, int threads) {
            divrel::BettiOptions options;
            options.field = field_from_str(field);
            options.threads = threads;
            return betti_dict(divrel::betti_power(gens, r, options));
        },
        py::arg("ideal"), py::arg("r"), py::arg("field") = "q", py::arg("threads") = 1);
    m.def("taylor_bounds", [](int q, int r) {
        std::vector<std::string> out;
        for (const auto& bound : divrel::taylor_binomial_bounds(q, r))
            out.push_back(bound.str());
        return out;
    });
    m.def(
        "bound_check",
        [](const GeneratorList& gens, const RelationSet& rels, int r) {
            divrel::BoundReport report = divrel::bound_check(gens, rels, r);
            py::dict out;
            out["actual"] = report.actual;
            out["extremal"] = report.extremal;
            out["pass"] = report.pass;
            return out;
        },
        py::arg("ideal"), py::arg("relations"), py::arg("r") = 1);
    m.def("power_ideal", &divrel::power_ideal, py::arg("ideal"), py::arg("r"));
}
