#include "divrel/extremal.hpp"

#include <algorithm>
#include <sstream>

namespace divrel {

bool QSet::contains(const IndexSet& a) const {
    return std::find(members.begin(), members.end(), a) != members.end();
}

bool q_set_admits(const RelationSet& rels, const IndexSet& a) {
    for (const auto& [base, targets] : rels.rels)
        if (index_set_contains(a, base) && !index_sets_intersect(a, targets))
            return false;
    return true;
}

QSet q_set(const RelationSet& rels, int q, int max_q) {
    if (q < 1)
        throw InputError("universe size must be positive");
    if (q > max_q)
        throw CapError("subset enumeration limited to q <= " + std::to_string(max_q));
    if (rels.q > q)
        throw InputError("relation universe exceeds q");

    std::vector<IndexSet> members;
    for (unsigned mask = 1; mask < (1u << q); ++mask) {
        IndexSet a;
        for (int i = 1; i <= q; ++i)
            if (mask & (1u << (i - 1)))
                a.push_back(i);
        if (q_set_admits(rels, a))
            members.push_back(std::move(a));
    }
    std::sort(members.begin(), members.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return QSet{q, std::move(members)};
}

std::string y_variable_name(const IndexSet& a, int q) {
    std::ostringstream out;
    out << "y_";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (q > 9 && i > 0)
            out << '_';
        out << a[i];
    }
    return out.str();
}

ExtremalIdeal extremal_ideal(const RelationSet& rels, int q, int max_q) {
    QSet qs = q_set(rels, q, max_q);

    std::vector<std::string> names;
    names.reserve(qs.members.size());
    for (const auto& a : qs.members)
        names.push_back(y_variable_name(a, q));
    VarsPtr vars = make_variables(std::move(names));

    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(q));
    for (int i = 1; i <= q; ++i) {
        std::vector<Monomial::Term> terms;
        for (std::size_t pos = 0; pos < qs.members.size(); ++pos)
            if (index_set_contains(qs.members[pos], i))
                terms.emplace_back(static_cast<int>(pos), 1);
        gens.push_back(Monomial::from_terms(vars, std::move(terms)));
    }

    bool warn = false;
    for (const auto& r : rels.rels)
        if (!is_trivial(r) && r.targets.size() == 1)
            warn = true;

    return ExtremalIdeal{q, rels, std::move(qs), std::move(vars), std::move(gens), warn};
}

GeneratorList generator_list(const ExtremalIdeal& ideal) {
    return make_generator_list(ideal.vars, ideal.gens);
}

namespace {

void enumerate_tuples(int q, int remaining, std::vector<int>& tuple,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(tuple.size()) == q - 1) {
        tuple.push_back(remaining);
        out.push_back(tuple);
        tuple.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        tuple.push_back(v);
        enumerate_tuples(q, remaining - v, tuple, out);
        tuple.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> exponent_tuples(int q, int r) {
    if (q < 1 || r < 0)
        throw InputError("invalid tuple shape");
    std::vector<std::vector<int>> out;
    std::vector<int> tuple;
    enumerate_tuples(q, r, tuple, out);
    return out;
}

PowerGenerators power_generators(const ExtremalIdeal& ideal, int r, std::size_t max_entries) {
    if (r < 1)
        throw InputError("power must be positive");
    std::vector<std::vector<int>> tuples = exponent_tuples(ideal.q, r);
    if (tuples.size() > max_entries)
        throw CapError("power generator cap exceeded");

    PowerGenerators out{r, {}};
    out.entries.reserve(tuples.size());
    for (auto& a : tuples) {
        std::vector<std::pair<Monomial, Exponent>> factors;
        for (int i = 0; i < ideal.q; ++i)
            if (a[static_cast<std::size_t>(i)] > 0)
                factors.emplace_back(ideal.gens[static_cast<std::size_t>(i)],
                                     a[static_cast<std::size_t>(i)]);
        Monomial m = product(ideal.vars, factors);
        out.entries.emplace_back(std::move(a), std::move(m));
    }
    return out;
}

DivTheoremReport verify_div_theorem(const ExtremalIdeal& ideal) {
    for (const auto& r : ideal.relations.rels)
        if (!is_trivial(r) && r.targets.size() < 2)
            throw InputError("theorem hypothesis |B|>=2 violated");

    GeneratorList gens = generator_list(ideal);
    ClosureRep rep = closure(ideal.relations);

    DivTheoremReport report;
    const int q = ideal.q;
    for (int b = 1; b <= q; ++b) {
        for (unsigned mask = 1; mask < (1u << q); ++mask) {
            IndexSet targets;
            for (int i = 1; i <= q; ++i)
                if (mask & (1u << (i - 1)))
                    targets.push_back(i);
            DivRel r{b, std::move(targets)};
            ++report.candidates;
            if (holds(r, gens) != member(rep, r)) {
                report.pass = false;
                report.detail = "mismatch at " + r.str();
                report.counterexample = std::move(r);
                return report;
            }
        }
    }
    report.pass = true;
    report.detail = "all " + std::to_string(report.candidates) + " candidates agree";
    return report;
}

bool ideals_equal(const ExtremalIdeal& a, const ExtremalIdeal& b) {
    if (a.q != b.q)
        throw InputError("ideals live over different universes");
    bool equal = a.qset == b.qset;

    // Cross-check against minimal-core equality of the closures; the
    // equivalence is guaranteed only under the |B| >= 2 hypothesis.
    auto theorem_applies = [](const RelationSet& rels) {
        for (const auto& r : rels.rels)
            if (!is_trivial(r) && r.targets.size() < 2)
                return false;
        return true;
    };
    if (theorem_applies(a.relations) && theorem_applies(b.relations)) {
        bool cores_equal = closure(a.relations).min_core == closure(b.relations).min_core;
        if (cores_equal != equal)
            throw Error("extremal-ideal equality disagrees with closure cores at q=" +
                        std::to_string(a.q));
    }
    return equal;
}

} // namespace divrel
