#pragma once

#include <string>
#include <vector>

#include "divrel/monomial.hpp"

namespace divrel {

// A set of 1-based indices, stored ascending without repeats.
using IndexSet = std::vector<int>;

bool index_set_contains(const IndexSet& s, int i);
bool index_set_subset(const IndexSet& a, const IndexSet& b);
bool index_sets_intersect(const IndexSet& a, const IndexSet& b);
IndexSet index_set_union(const IndexSet& a, const IndexSet& b);
IndexSet index_set_minus(const IndexSet& a, const IndexSet& b);
// Sorts, deduplicates, and validates entries against [1, q] (q = 0 skips the
// range check).
IndexSet make_index_set(std::vector<int> values, int q = 0);
std::string index_set_str(const IndexSet& s);

// The divisibility relation (base, targets): generator u_base divides the
// lcm of the generators indexed by targets. Targets are nonempty.
struct DivRel {
    int base = 0;
    IndexSet targets;

    bool operator==(const DivRel& other) const {
        return base == other.base && targets == other.targets;
    }
    std::string str() const;
};

// Canonical order: ascending base, then targets compared lexicographically
// as sorted sequences.
bool rel_less(const DivRel& a, const DivRel& b);

DivRel make_rel(int base, std::vector<int> targets, int q = 0);

// A finite set of divisibility relations over the universe [q], stored in
// canonical order without repeats.
struct RelationSet {
    int q = 0;
    std::vector<DivRel> rels;

    bool contains(const DivRel& r) const;
    std::size_t size() const { return rels.size(); }
    bool operator==(const RelationSet& other) const { return q == other.q && rels == other.rels; }
};

RelationSet make_relation_set(int q, std::vector<DivRel> rels);

// (b,B) o (c,C) = (b, (B \ {c}) u C). Total on any pair of relations.
DivRel compose(const DivRel& r1, const DivRel& r2);

// Trivial means base in targets; such relations hold on any monomials.
bool is_trivial(const DivRel& r);

// The extension order: r1 <= r2 iff same base and r1.targets a subset of
// r2.targets.
bool rel_leq(const DivRel& r1, const DivRel& r2);

// Whether u_base | lcm(u_i : i in targets) on the given generators.
bool holds(const DivRel& r, const GeneratorList& gens);

// Alias of holds: membership of r in Div(U).
bool div_contains(const GeneratorList& gens, const DivRel& r);

// The minimal nontrivial divisibility relations of Div(U), computed per base
// as minimal transversals of the variable-threshold hypergraph.
RelationSet div_min(const GeneratorList& gens);

// Independent oracle: scans all q * (2^q - 1) candidate relations with
// direct divisibility checks. Exponential; intended for cross-checks.
RelationSet div_min_bruteforce(const GeneratorList& gens);

IndexSet base_set(const RelationSet& rels);

// All inclusion-minimal subsets of the universe meeting every edge. Empty
// edges make the result empty; zero edges make the empty set the unique
// minimal transversal (returned as a single empty entry).
std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& edges,
                                           const IndexSet& universe);

} // namespace divrel
