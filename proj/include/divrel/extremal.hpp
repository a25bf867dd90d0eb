#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divrel/closure.hpp"
#include "divrel/monomial.hpp"
#include "divrel/relation.hpp"

namespace divrel {

// The family Q(D): nonempty subsets A of [q] such that every relation
// (b,B) in D with b in A meets A in B. Members are sorted by size, then
// lexicographically.
struct QSet {
    int q = 0;
    std::vector<IndexSet> members;

    bool contains(const IndexSet& a) const;
    bool operator==(const QSet& other) const { return q == other.q && members == other.members; }
};

QSet q_set(const RelationSet& rels, int q, int max_q = 20);

// Checks the defining condition of Q(D) for a single subset.
bool q_set_admits(const RelationSet& rels, const IndexSet& a);

// Renders the variable for subset A: "y_" plus the ascending indices,
// digit-concatenated for universes with q <= 9 and '_'-separated otherwise
// so names stay unambiguous.
std::string y_variable_name(const IndexSet& a, int q);

// The D-extremal ideal: generators eps_i = product of y_A over the members
// A of Q(D) containing i, in the polynomial ring on { y_A : A in Q(D) }.
struct ExtremalIdeal {
    int q = 0;
    RelationSet relations;
    QSet qset;
    VarsPtr vars;                // one variable per QSet member, same order
    std::vector<Monomial> gens;  // eps_1 ... eps_q
    // Set when some nontrivial relation has a single target; the
    // construction still applies but the minimal-generation and
    // Div-characterization guarantees do not.
    bool singleton_target_warning = false;
};

ExtremalIdeal extremal_ideal(const RelationSet& rels, int q, int max_q = 20);

// The generators as a GeneratorList; errors when they are not pairwise
// distinct (possible only with singleton-target relations).
GeneratorList generator_list(const ExtremalIdeal& ideal);

// Minimal generators of the r-th power: one entry per exponent tuple of
// total weight r, paired with the product monomial.
struct PowerGenerators {
    int r = 0;
    std::vector<std::pair<std::vector<int>, Monomial>> entries;
};

PowerGenerators power_generators(const ExtremalIdeal& ideal, int r,
                                 std::size_t max_entries = 100000);

// All weak compositions of r into q parts, lexicographically decreasing.
std::vector<std::vector<int>> exponent_tuples(int q, int r);

// Exhaustive check that the relations holding on the generators are exactly
// the relations deducible from D.
struct DivTheoremReport {
    bool pass = false;
    std::size_t candidates = 0;
    std::optional<DivRel> counterexample;
    std::string detail;
};

DivTheoremReport verify_div_theorem(const ExtremalIdeal& ideal);

// Two extremal ideals over the same universe coincide iff their Q sets do.
bool ideals_equal(const ExtremalIdeal& a, const ExtremalIdeal& b);

} // namespace divrel
