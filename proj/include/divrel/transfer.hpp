#pragma once

#include <map>
#include <vector>

#include "divrel/extremal.hpp"
#include "divrel/homology.hpp"
#include "divrel/monomial.hpp"
#include "divrel/relation.hpp"

namespace divrel {

// For each variable position of the target ring, the set of generators it
// divides. Variables absent from every generator have no entry.
std::map<int, IndexSet> a_sets(const GeneratorList& gens);

// The variable-collapsing homomorphism from the y_A ring onto the target
// ring: y_A maps to the product of the target variables whose generator
// support is exactly A, and to 1 when there is none.
struct PsiMap {
    int q = 0;
    VarsPtr target;
    std::map<IndexSet, Monomial> images; // only the non-unit images

    const Monomial& image(const IndexSet& a, const Monomial& unit) const;
};

// Requires a square-free ideal satisfying every relation in D.
PsiMap psi_build(const GeneratorList& gens, const RelationSet& rels);

// Applies psi to a monomial whose variables are aligned with the members
// of the given QSet (position k of the monomial's variable set corresponds
// to qset.members[k]).
Monomial psi_apply(const PsiMap& psi, const Monomial& m, const QSet& alignment);

// The join-preserving map from the lcm lattice of an extremal ideal to the
// lcm lattice of an ideal satisfying its relations; image[k] is the target
// index of source element k.
struct LatticeMap {
    LcmLattice source;
    LcmLattice target;
    std::vector<std::size_t> image;
    bool isomorphism = false;
};

LatticeMap lattice_map(const ExtremalIdeal& ideal, const GeneratorList& gens,
                       const BettiOptions& options = {});

// Pushes a Betti table of the extremal ideal forward along psi: the bound
// at (i, m) is the sum of source entries over multidegrees mapping to m.
BettiTable betti_transfer(const BettiTable& source, const PsiMap& psi, const QSet& alignment);

// Side-by-side comparison of actual Betti numbers of I^r against the
// extremal bound.
struct BoundReport {
    std::vector<std::int64_t> actual;
    std::vector<std::int64_t> extremal;
    std::vector<bool> ok; // per index, actual <= extremal
    bool pass = false;
};

BoundReport bound_check(const GeneratorList& gens, const RelationSet& rels, int r,
                        const BettiOptions& options = {});

// Whether every relation of D holds on the generators.
bool satisfies(const GeneratorList& gens, const RelationSet& rels);

} // namespace divrel
