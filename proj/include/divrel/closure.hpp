#pragma once

#include <cstddef>

#include "divrel/relation.hpp"

namespace divrel {

// Compact representation of the closure of a relation set: an antichain of
// nontrivial relations. A relation r belongs to the closure iff it is
// trivial or extends some antichain member.
struct ClosureRep {
    int q = 0;
    RelationSet min_core;
};

// Default element cap for closure computations: 2 * q * 2^q.
std::size_t default_closure_cap(int q);

// The full explicit set of values of all bracketed compositions of members
// of D (the least superset of D closed under binary composition). Errors
// with "closure cap exceeded" past the cap (0 = default).
RelationSet compose_closure_naive(const RelationSet& rels, std::size_t cap = 0);

// Antichain of the nontrivial members that are minimal in the extension
// order.
RelationSet minimize(const RelationSet& rels);

// Worklist closure: the antichain of minimal relations deducible from D.
ClosureRep closure(const RelationSet& rels, std::size_t cap = 0);

bool member(const ClosureRep& rep, const DivRel& r);

// Whether the relations deducible from D are exactly the relations holding
// on the generators.
bool is_generating(const RelationSet& rels, const GeneratorList& gens);

// Generating, and no member is deducible from the others.
bool is_minimal_generating(const RelationSet& rels, const GeneratorList& gens);

// A minimal generating set of divisibility relations for Div(U), obtained
// by pruning div_min(U) in canonical order. Minimal generating sets are not
// unique; any valid one is a correct answer.
RelationSet extract_minimal_generating(const GeneratorList& gens);

} // namespace divrel
