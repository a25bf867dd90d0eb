#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "divrel/extremal.hpp"
#include "divrel/monomial.hpp"

namespace divrel {

// Coefficient field for homology: the rationals or a prime field.
struct Field {
    bool rational = true;
    std::uint64_t prime = 0;

    static Field rationals() { return Field{true, 0}; }
    static Field gf(std::uint64_t p);
    std::string name() const;
    bool operator==(const Field& other) const {
        return rational == other.rational && prime == other.prime;
    }
};

// The lcm lattice of a minimal generator list: all distinct lcms of
// nonempty generator subsets, ordered by divisibility. Atoms keep the
// input order; elements are sorted canonically.
struct LcmLattice {
    GeneratorList atoms;
    std::vector<Monomial> elements;

    std::size_t index_of(const Monomial& m) const; // throws if absent
    const Monomial& top() const;
};

LcmLattice lcm_lattice(const GeneratorList& gens, int max_gens = 14);

// The subcomplex of the Taylor simplex strictly below a multidegree:
// vertices are the generators dividing m, faces the subsets whose lcm
// divides m and differs from it (the empty face included).
struct SimplicialComplexSlice {
    std::vector<int> vertices;    // 1-based generator indices, ascending
    std::vector<IndexSet> faces;  // each sorted; contains {} unless void
};

SimplicialComplexSlice below_slice(const GeneratorList& gens, const Monomial& m);

// dim of the i-th reduced homology over the field (i >= -1). The complex
// {{}} has reduced homology of dimension 1 in degree -1; a complex with no
// faces has none anywhere.
std::int64_t reduced_homology_rank(const SimplicialComplexSlice& slice, int i,
                                   const Field& field);

// Multigraded and total Betti numbers. total[i] is the sum of graded[i]
// over all multidegrees; graded stores only nonzero counts.
struct BettiTable {
    Field field;
    std::vector<std::int64_t> total;
    std::vector<std::map<Monomial, std::int64_t>> graded;

    std::int64_t total_at(std::size_t i) const {
        return i < total.size() ? total[static_cast<std::size_t>(i)] : 0;
    }
};

struct BettiOptions {
    Field field = Field::rationals();
    int max_gens = 14;
    std::size_t max_faces = 4096;
    int threads = 1;
};

// Betti numbers via reduced homology of the strictly-below Taylor
// subcomplex at every lcm-lattice multidegree.
BettiTable betti(const GeneratorList& gens, const BettiOptions& options = {});

// Betti numbers of the r-th power, on its minimalized generator set.
BettiTable betti_power(const GeneratorList& gens, int r, const BettiOptions& options = {});
BettiTable betti_power(const ExtremalIdeal& ideal, int r, const BettiOptions& options = {});

// Drops duplicates and generators divisible by another generator.
GeneratorList minimalize_generators(VarsPtr vars, std::vector<Monomial> candidates);

// Minimal generators of the r-th power of the ideal.
GeneratorList power_ideal(const GeneratorList& gens, int r);

// Taylor-resolution upper bounds for a q-generated ideal's r-th power:
// entry i is C(g, i+1) with g = C(q+r-1, r) generators.
std::vector<Exponent> taylor_binomial_bounds(int q, int r);

Exponent binomial(const Exponent& n, const Exponent& k);

} // namespace divrel
