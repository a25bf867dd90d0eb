// Command-line front end: JSON documents in, JSON reports out.
//
// Exit codes: 0 all requested checks pass, 1 check failure, 2 input error,
// 3 cap exceeded.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divrel/closure.hpp"
#include "divrel/decision_tree.hpp"
#include "divrel/documents.hpp"
#include "divrel/extremal.hpp"
#include "divrel/homology.hpp"
#include "divrel/transfer.hpp"
#include "divrel/verify.hpp"

namespace {

using divrel::Json;

struct GlobalOptions {
    int cap_subsets = 20;
    std::size_t cap_faces = 4096;
    int threads = 1;
    std::uint64_t seed = 1;

    divrel::BettiOptions betti(const divrel::Field& field) const {
        divrel::BettiOptions options;
        options.field = field;
        options.max_faces = cap_faces;
        options.threads = threads;
        return options;
    }
};

divrel::Field parse_field(const std::string& text) {
    if (text == "q" || text == "rational" || text == "0")
        return divrel::Field::rationals();
    return divrel::Field::gf(std::stoull(text));
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string token = text.substr(start, end - start);
        if (!token.empty())
            out.push_back(std::stoi(token));
        if (end == text.size())
            break;
        start = end + 1;
    }
    if (out.empty())
        throw divrel::InputError("empty index list");
    return out;
}

void emit(const Json& doc) {
    std::cout << divrel::dump_document(doc);
}

Json totals_json(const std::vector<std::int64_t>& totals) {
    return Json(totals);
}

Json betti_json(const divrel::BettiTable& table, int power, int generators) {
    Json doc;
    doc["field"] = table.field.name();
    doc["power"] = power;
    doc["generators"] = generators;
    doc["total"] = totals_json(table.total);
    Json graded = Json::array();
    for (std::size_t i = 0; i < table.graded.size(); ++i)
        for (const auto& [degree, count] : table.graded[i]) {
            Json entry;
            entry["i"] = i;
            entry["multidegree"] = degree.str();
            entry["count"] = count;
            graded.push_back(std::move(entry));
        }
    doc["graded"] = std::move(graded);
    return doc;
}

Json verdict_json(const divrel::RelationSet& rels, const divrel::DivRel& query,
                  const divrel::Verdict& verdict) {
    Json doc;
    doc["q"] = rels.q;
    doc["base"] = query.base;
    doc["targets"] = query.targets;
    doc["member"] = verdict.is_member();
    Json certificate;
    switch (verdict.kind) {
    case divrel::VerdictKind::in_trivial:
        certificate["kind"] = "trivial";
        break;
    case divrel::VerdictKind::in_derived: {
        certificate["kind"] = "derivation";
        certificate["relations"] = verdict.derivation->relations;
        divrel::DivRel folded = rels.rels[static_cast<std::size_t>(
            verdict.derivation->relations.front() - 1)];
        for (std::size_t i = 1; i < verdict.derivation->relations.size(); ++i)
            folded = divrel::compose(
                folded,
                rels.rels[static_cast<std::size_t>(verdict.derivation->relations[i] - 1)]);
        certificate["folds_to"] = Json::array({folded.base, folded.targets});
        break;
    }
    case divrel::VerdictKind::not_in:
        certificate["kind"] = "witness";
        certificate["set"] = verdict.witness->set;
        break;
    }
    doc["certificate"] = std::move(certificate);
    doc["verified"] = divrel::verify_certificate(rels, query, verdict);
    return doc;
}

int run(int argc, char** argv) {
    CLI::App app{"divisibility-relation calculus on monomial ideals"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_option("--cap-subsets", global.cap_subsets,
                   "largest universe for 2^q subset enumeration");
    app.add_option("--cap-faces", global.cap_faces, "largest face count per homology slice");
    app.add_option("--threads", global.threads, "worker threads for homology");
    app.add_option("--seed", global.seed, "seed for randomized verification");

    std::string format = "exponents";
    app.add_option("--format", format, "ideal documents: exponents | monomials")
        ->check(CLI::IsMember({"exponents", "monomials"}));

    // relations ------------------------------------------------------------
    auto* relations_cmd =
        app.add_subcommand("relations", "minimal divisibility relations of an ideal");
    std::string relations_ideal;
    bool relations_mingen = false;
    bool relations_naive = false;
    relations_cmd->add_option("ideal", relations_ideal, "ideal document")->required();
    relations_cmd->add_flag("--mingen", relations_mingen,
                            "also extract a minimal generating subset");
    relations_cmd->add_flag("--naive", relations_naive,
                            "use the brute-force subset scan instead of transversals");

    // closure ---------------------------------------------------------------
    auto* closure_cmd = app.add_subcommand("closure", "minimal relations of the closure");
    std::string closure_rels;
    bool closure_naive = false;
    std::vector<std::string> member_query;
    closure_cmd->add_option("relations", closure_rels, "relation document")->required();
    closure_cmd->add_flag("--naive", closure_naive, "use the explicit fixed-point oracle");
    closure_cmd->add_option("--member", member_query, "membership query: base targets")
        ->expected(2);

    // extremal ----------------------------------------------------------------
    auto* extremal_cmd = app.add_subcommand("extremal", "construct the extremal ideal");
    std::string extremal_rels;
    extremal_cmd->add_option("relations", extremal_rels, "relation document")->required();

    // decide -------------------------------------------------------------------
    auto* decide_cmd =
        app.add_subcommand("decide", "closure membership with a checkable certificate");
    std::string decide_rels, decide_targets;
    int decide_base = 0;
    bool decide_tree = false;
    decide_cmd->add_option("relations", decide_rels, "relation document")->required();
    decide_cmd->add_option("base", decide_base, "query base")->required();
    decide_cmd->add_option("targets", decide_targets, "query targets, comma-separated")
        ->required();
    decide_cmd->add_flag("--tree", decide_tree, "include the decision tree diagnostics");

    // betti ----------------------------------------------------------------------
    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti numbers");
    std::string betti_ideal, betti_field = "q";
    int betti_power_arg = 1;
    betti_cmd->add_option("ideal", betti_ideal, "ideal document")->required();
    betti_cmd->add_option("--power", betti_power_arg, "compute for this power");
    betti_cmd->add_option("--field", betti_field, "q for rationals, or a prime");

    // verify -------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run theorem suites");
    std::string verify_rels, verify_ideal, verify_suite = "all";
    int verify_power = 1;
    int verify_random = 0;
    verify_cmd->add_option("--relations", verify_rels, "relation document");
    verify_cmd->add_option("--ideal", verify_ideal, "ideal document");
    verify_cmd->add_option("--suite", verify_suite,
                           "div-theorem | closure-laws | power-minimality | psi | "
                           "power-bounds | lattice | extremal-invariance | div-complete | all");
    verify_cmd->add_option("--power", verify_power, "power for bound suites");
    verify_cmd->add_option("--random", verify_random,
                           "also run on this many seeded random instances");

    // bounds ----------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "Betti bounds side by side");
    std::string bounds_rels, bounds_ideal, bounds_field = "q";
    int bounds_power = 1;
    bounds_cmd->add_option("--relations", bounds_rels, "relation document")->required();
    bounds_cmd->add_option("--ideal", bounds_ideal, "ideal document");
    bounds_cmd->add_option("--power", bounds_power, "power to compare");
    bounds_cmd->add_option("--field", bounds_field, "q for rationals, or a prime");

    // Global flags may appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (relations_cmd->parsed()) {
        divrel::GeneratorList gens = divrel::ideal_from_file(relations_ideal);
        Json doc = divrel::relations_to_json(relations_naive ? divrel::div_min_bruteforce(gens)
                                                             : divrel::div_min(gens));
        if (relations_mingen) {
            Json mingen = Json::array();
            for (const auto& r : divrel::extract_minimal_generating(gens).rels)
                mingen.push_back(Json::array({r.base, r.targets}));
            doc["minimal_generating"] = std::move(mingen);
        }
        emit(doc);
        return 0;
    }

    if (closure_cmd->parsed()) {
        divrel::RelationSet rels = divrel::relations_from_file(closure_rels);
        if (!member_query.empty()) {
            divrel::DivRel query = divrel::make_rel(
                std::stoi(member_query[0]), parse_index_list(member_query[1]), rels.q);
            bool is_member = closure_naive
                                 ? [&] {
                                       divrel::RelationSet naive =
                                           divrel::compose_closure_naive(rels);
                                       if (divrel::is_trivial(query))
                                           return true;
                                       for (const auto& s : naive.rels)
                                           if (divrel::rel_leq(s, query))
                                               return true;
                                       return false;
                                   }()
                                 : divrel::member(divrel::closure(rels), query);
            Json doc;
            doc["q"] = rels.q;
            doc["base"] = query.base;
            doc["targets"] = query.targets;
            doc["member"] = is_member;
            emit(doc);
            return 0;
        }
        divrel::RelationSet core = closure_naive
                                       ? divrel::minimize(divrel::compose_closure_naive(rels))
                                       : divrel::closure(rels).min_core;
        emit(divrel::relations_to_json(core));
        return 0;
    }

    if (extremal_cmd->parsed()) {
        divrel::RelationSet rels = divrel::relations_from_file(extremal_rels);
        divrel::ExtremalIdeal ideal =
            divrel::extremal_ideal(rels, rels.q, global.cap_subsets);
        if (ideal.singleton_target_warning)
            std::cerr << "warning: singleton-target relation present; minimal generation "
                         "is not guaranteed\n";
        emit(divrel::ideal_to_json(divrel::GeneratorList{ideal.vars, ideal.gens},
                                   format == "monomials"));
        return 0;
    }

    if (decide_cmd->parsed()) {
        divrel::RelationSet rels = divrel::relations_from_file(decide_rels);
        divrel::DivRel query =
            divrel::make_rel(decide_base, parse_index_list(decide_targets), rels.q);
        divrel::Verdict verdict = divrel::membership_with_certificate(rels, query);
        Json doc = verdict_json(rels, query, verdict);
        if (decide_tree && !divrel::is_trivial(query) &&
            divrel::index_set_contains(divrel::base_set(rels), query.base)) {
            divrel::DecisionTree tree = divrel::build_tree(rels, query.base, query.targets);
            Json vertices = Json::array();
            for (const auto& v : tree.vertices) {
                Json entry;
                entry["height"] = v.height;
                entry["label"] = v.label;
                entry["parent"] = v.parent;
                entry["good"] = v.good;
                entry["extremely_bad"] = v.extremely_bad;
                vertices.push_back(std::move(entry));
            }
            doc["tree"] = std::move(vertices);
            doc["tree_text"] = divrel::tree_text(tree);
        }
        emit(doc);
        return 0;
    }

    if (betti_cmd->parsed()) {
        divrel::GeneratorList gens = divrel::ideal_from_file(betti_ideal);
        divrel::BettiOptions options = global.betti(parse_field(betti_field));
        divrel::GeneratorList power_gens =
            betti_power_arg == 1 ? gens : divrel::power_ideal(gens, betti_power_arg);
        divrel::BettiTable table = divrel::betti(power_gens, options);
        emit(betti_json(table, betti_power_arg, power_gens.size()));
        return 0;
    }

    if (verify_cmd->parsed()) {
        std::optional<divrel::RelationSet> rels;
        std::optional<divrel::GeneratorList> gens;
        if (!verify_rels.empty())
            rels = divrel::relations_from_file(verify_rels);
        if (!verify_ideal.empty())
            gens = divrel::ideal_from_file(verify_ideal);
        if (!rels && gens)
            rels = divrel::extract_minimal_generating(*gens);
        if (!rels && verify_random == 0)
            throw divrel::InputError("verify needs --relations, --ideal, or --random");

        divrel::Rng rng(global.seed);
        divrel::BettiOptions options = global.betti(divrel::Field::rationals());
        options.threads = global.threads;

        struct Instance {
            divrel::RelationSet rels;
            std::optional<divrel::GeneratorList> gens;
        };
        std::vector<Instance> instances;
        if (rels)
            instances.push_back({*rels, gens});
        for (int k = 0; k < verify_random; ++k) {
            divrel::GeneratorList random_ideal = divrel::random_squarefree_ideal(rng, 6, 4);
            divrel::RelationSet random_rels =
                divrel::random_satisfied_relations(rng, random_ideal, 3);
            instances.push_back({std::move(random_rels), std::move(random_ideal)});
        }

        Json suites = Json::array();
        bool all_pass = true;
        auto record = [&](const divrel::SuiteResult& result) {
            Json entry;
            entry["name"] = result.name;
            entry["pass"] = result.pass;
            entry["checks"] = result.checks;
            if (!result.detail.empty())
                entry["detail"] = result.detail;
            suites.push_back(std::move(entry));
            all_pass = all_pass && result.pass;
        };

        for (const auto& instance : instances) {
            bool want_all = verify_suite == "all";
            if (want_all || verify_suite == "div-theorem")
                record(divrel::suite_div_theorem(instance.rels));
            if (want_all || verify_suite == "closure-laws")
                record(divrel::suite_closure_laws(instance.rels, rng));
            if (want_all || verify_suite == "power-minimality")
                record(divrel::suite_power_minimality(instance.rels, std::max(2, verify_power)));
            if (want_all || verify_suite == "extremal-invariance")
                record(divrel::suite_extremal_invariance(instance.rels));
            if (want_all || verify_suite == "div-complete")
                record(divrel::suite_div_complete(instance.rels));
            if (instance.gens) {
                if (want_all || verify_suite == "psi")
                    record(divrel::suite_psi(*instance.gens, instance.rels, rng));
                if (want_all || verify_suite == "power-bounds")
                    record(divrel::suite_power_bounds(*instance.gens, instance.rels,
                                                      verify_power, options));
                if (want_all || verify_suite == "lattice")
                    record(divrel::suite_lattice(*instance.gens, instance.rels, options));
            }
        }

        Json doc;
        doc["suites"] = std::move(suites);
        doc["pass"] = all_pass;
        emit(doc);
        return all_pass ? 0 : 1;
    }

    if (bounds_cmd->parsed()) {
        divrel::RelationSet rels = divrel::relations_from_file(bounds_rels);
        divrel::BettiOptions options = global.betti(parse_field(bounds_field));
        const int q = rels.q;
        const int r = bounds_power;

        divrel::ExtremalIdeal restricted = divrel::extremal_ideal(rels, q, global.cap_subsets);
        divrel::ExtremalIdeal full =
            divrel::extremal_ideal(divrel::make_relation_set(q, {}), q, global.cap_subsets);
        divrel::BettiTable extremal_d = divrel::betti_power(restricted, r, options);
        divrel::BettiTable extremal_q = divrel::betti_power(full, r, options);

        Json doc;
        doc["q"] = q;
        doc["power"] = r;
        bool pass = true;
        if (!bounds_ideal.empty()) {
            divrel::GeneratorList gens = divrel::ideal_from_file(bounds_ideal);
            divrel::BoundReport report = divrel::bound_check(gens, rels, r, options);
            doc["actual"] = totals_json(report.actual);
            Json ok = Json::array();
            for (bool b : report.ok)
                ok.push_back(b);
            doc["ok"] = std::move(ok);
            pass = report.pass;
        } else {
            doc["actual"] = nullptr;
            doc["ok"] = nullptr;
        }
        doc["extremal_d"] = totals_json(extremal_d.total);
        doc["extremal_q"] = totals_json(extremal_q.total);
        Json taylor = Json::array();
        for (const auto& bound : divrel::taylor_binomial_bounds(q, r))
            taylor.push_back(bound.str());
        doc["taylor"] = std::move(taylor);
        doc["pass"] = pass;
        emit(doc);
        return pass ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const divrel::CapError& e) {
        std::cerr << Json{{"error", e.what()}, {"kind", "cap"}}.dump(2) << "\n";
        return 3;
    } catch (const divrel::InputError& e) {
        std::cerr << Json{{"error", e.what()}, {"kind", "input"}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}, {"kind", "internal"}}.dump(2) << "\n";
        return 2;
    }
}
