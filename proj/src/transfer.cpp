#include "divrel/transfer.hpp"

#include <algorithm>
#include <optional>

namespace divrel {

std::map<int, IndexSet> a_sets(const GeneratorList& gens) {
    std::map<int, IndexSet> out;
    for (int j = 1; j <= gens.size(); ++j)
        for (const auto& [pos, exp] : gens.at(j).terms())
            out[pos].push_back(j);
    return out;
}

bool satisfies(const GeneratorList& gens, const RelationSet& rels) {
    for (const auto& r : rels.rels)
        if (!holds(r, gens))
            return false;
    return true;
}

const Monomial& PsiMap::image(const IndexSet& a, const Monomial& unit) const {
    auto it = images.find(a);
    return it == images.end() ? unit : it->second;
}

PsiMap psi_build(const GeneratorList& gens, const RelationSet& rels) {
    if (rels.q != gens.size())
        throw InputError("relation universe does not match generator count");
    for (const auto& g : gens.gens)
        if (!is_squarefree(g))
            throw InputError("psi requires a square-free ideal");
    for (const auto& r : rels.rels)
        if (!holds(r, gens))
            throw InputError("ideal does not satisfy D: " + r.str() + " fails");

    PsiMap psi;
    psi.q = gens.size();
    psi.target = gens.vars;
    std::map<IndexSet, std::vector<Monomial::Term>> grouped;
    for (const auto& [pos, support] : a_sets(gens))
        grouped[support].emplace_back(pos, 1);
    for (auto& [support, terms] : grouped)
        psi.images.emplace(support, Monomial::from_terms(gens.vars, std::move(terms)));
    return psi;
}

Monomial psi_apply(const PsiMap& psi, const Monomial& m, const QSet& alignment) {
    if (alignment.q != psi.q)
        throw InputError("alignment universe does not match psi");
    Monomial unit = Monomial::one(psi.target);
    std::vector<std::pair<Monomial, Exponent>> factors;
    for (const auto& [pos, exp] : m.terms()) {
        if (pos < 0 || static_cast<std::size_t>(pos) >= alignment.members.size())
            throw InputError("monomial variable without an aligned subset");
        const Monomial& img = psi.image(alignment.members[static_cast<std::size_t>(pos)], unit);
        if (!img.is_one())
            factors.emplace_back(img, exp);
    }
    return product(psi.target, factors);
}

LatticeMap lattice_map(const ExtremalIdeal& ideal, const GeneratorList& gens,
                       const BettiOptions& options) {
    if (gens.size() != ideal.q)
        throw InputError("ideal must have exactly q minimal generators");
    require_distinct(gens);
    for (int i = 1; i <= gens.size(); ++i)
        for (int j = 1; j <= gens.size(); ++j)
            if (i != j && divides(gens.at(i), gens.at(j)))
                throw InputError("non-minimal generators");

    // Div(E_D) is generated by the closure core, so checking the core on
    // the target suffices for Div(E_D) to be contained in Div(I).
    ClosureRep rep = closure(ideal.relations);
    for (const auto& r : rep.min_core.rels)
        if (!holds(r, gens))
            throw InputError("ideal does not satisfy relation " + r.str());

    LatticeMap map{lcm_lattice(generator_list(ideal), options.max_gens),
                   lcm_lattice(gens, options.max_gens),
                   {},
                   false};

    const int q = ideal.q;
    std::vector<std::optional<std::size_t>> image(map.source.elements.size());
    for (unsigned mask = 1; mask < (1u << q); ++mask) {
        std::vector<Monomial> src_parts, tgt_parts;
        for (int i = 1; i <= q; ++i)
            if (mask & (1u << (i - 1))) {
                src_parts.push_back(ideal.gens[static_cast<std::size_t>(i - 1)]);
                tgt_parts.push_back(gens.at(i));
            }
        std::size_t src = map.source.index_of(lcm(src_parts));
        std::size_t tgt = map.target.index_of(lcm(tgt_parts));
        if (image[src] && *image[src] != tgt)
            throw Error("lattice map is not well-defined at " +
                        map.source.elements[src].str());
        image[src] = tgt;
    }
    map.image.reserve(image.size());
    for (std::size_t k = 0; k < image.size(); ++k) {
        if (!image[k])
            throw Error("lattice element not reached by any atom subset");
        map.image.push_back(*image[k]);
    }

    std::vector<std::size_t> hit = map.image;
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    map.isomorphism = hit.size() == map.source.elements.size() &&
                      map.source.elements.size() == map.target.elements.size();
    return map;
}

BettiTable betti_transfer(const BettiTable& source, const PsiMap& psi, const QSet& alignment) {
    BettiTable out;
    out.field = source.field;
    out.total = source.total;
    out.graded.resize(source.graded.size());
    for (std::size_t i = 0; i < source.graded.size(); ++i)
        for (const auto& [degree, count] : source.graded[i])
            out.graded[i][psi_apply(psi, degree, alignment)] += count;
    return out;
}

BoundReport bound_check(const GeneratorList& gens, const RelationSet& rels, int r,
                        const BettiOptions& options) {
    for (const auto& g : gens.gens)
        if (!is_squarefree(g))
            throw InputError("bound check requires a square-free ideal");
    for (const auto& rel : rels.rels)
        if (!holds(rel, gens))
            throw InputError("ideal does not satisfy D: " + rel.str() + " fails");

    BettiTable actual = betti_power(gens, r, options);
    ExtremalIdeal extremal = extremal_ideal(rels, gens.size());
    BettiTable bound = betti_power(extremal, r, options);

    BoundReport report;
    std::size_t len = std::max(actual.total.size(), bound.total.size());
    report.pass = true;
    for (std::size_t i = 0; i < len; ++i) {
        report.actual.push_back(actual.total_at(i));
        report.extremal.push_back(bound.total_at(i));
        bool ok = report.actual.back() <= report.extremal.back();
        report.ok.push_back(ok);
        report.pass = report.pass && ok;
    }
    return report;
}

} // namespace divrel
