#pragma once

#include <random>
#include <string>
#include <vector>

#include "divrel/homology.hpp"
#include "divrel/relation.hpp"

namespace divrel {

using Rng = std::mt19937_64;

// Uniform pick in [0, n).
std::uint64_t pick(Rng& rng, std::uint64_t n);

// A random relation set over [q] with at most max_d members. Targets have
// at least two elements when min_targets_two is set; trivial members may
// occur.
RelationSet random_relations(Rng& rng, int q, int max_d, bool min_targets_two = true);

// A random square-free monomial ideal: a minimal generating set of 2..max_gens
// distinct square-free monomials in at most max_vars variables x1, x2, ...
GeneratorList random_squarefree_ideal(Rng& rng, int max_vars, int max_gens);

// A random relation set whose members hold on the generators.
RelationSet random_satisfied_relations(Rng& rng, const GeneratorList& gens, int max_d);

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::int64_t checks = 0;
    std::string detail; // first failure, or a short summary

    void fail(const std::string& why) {
        if (pass)
            detail = why;
        pass = false;
    }
};

// Relations of E_D are exactly the closure of D (brute-force scan).
SuiteResult suite_div_theorem(const RelationSet& rels);

// Closure-operator laws plus agreement with the naive engine.
SuiteResult suite_closure_laws(const RelationSet& rels, Rng& rng);

// Power generators are pairwise distinct and non-dividing for 1 <= r' <= r.
SuiteResult suite_power_minimality(const RelationSet& rels, int max_r);

// The collapse homomorphism maps extremal generators and powers onto the
// ideal's generators and powers, preserving lcms.
SuiteResult suite_psi(const GeneratorList& gens, const RelationSet& rels, Rng& rng,
                      int max_r = 2, int max_tuple = 4);

// Betti numbers of I^r are bounded by those of the extremal power.
SuiteResult suite_power_bounds(const GeneratorList& gens, const RelationSet& rels, int r,
                               const BettiOptions& options = {});

// The lattice map exists, is an isomorphism exactly when D generates
// Div(I), and transfers Betti tables.
SuiteResult suite_lattice(const GeneratorList& gens, const RelationSet& rels,
                          const BettiOptions& options = {});

// The extremal ideal is unchanged under minimization, closure, and adding
// trivial relations; ideal equality matches closure-core equality.
SuiteResult suite_extremal_invariance(const RelationSet& rels);

// D equals the full relation set of some ideal iff D equals its own
// closure.
SuiteResult suite_div_complete(const RelationSet& rels);

} // namespace divrel
