#include "divrel/closure.hpp"

#include <algorithm>
#include <set>

namespace divrel {

std::size_t default_closure_cap(int q) {
    if (q >= 48)
        return static_cast<std::size_t>(-1);
    return 2u * static_cast<std::size_t>(q) * (static_cast<std::size_t>(1) << q);
}

RelationSet compose_closure_naive(const RelationSet& rels, std::size_t cap) {
    if (cap == 0)
        cap = default_closure_cap(rels.q);
    if (rels.rels.empty())
        return make_relation_set(rels.q, {});

    auto cmp = [](const DivRel& a, const DivRel& b) { return rel_less(a, b); };
    std::set<DivRel, decltype(cmp)> current(rels.rels.begin(), rels.rels.end(), cmp);

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<DivRel> fresh;
        for (const auto& a : current)
            for (const auto& b : current) {
                DivRel c = compose(a, b);
                if (!current.count(c))
                    fresh.push_back(std::move(c));
            }
        for (auto& c : fresh)
            changed |= current.insert(std::move(c)).second;
        if (current.size() > cap)
            throw CapError("closure cap exceeded");
    }
    return make_relation_set(rels.q, {current.begin(), current.end()});
}

RelationSet minimize(const RelationSet& rels) {
    std::vector<DivRel> out;
    for (const auto& r : rels.rels) {
        if (is_trivial(r))
            continue;
        bool dominated = false;
        for (const auto& s : rels.rels)
            if (!(s == r) && !is_trivial(s) && rel_leq(s, r)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(r);
    }
    return make_relation_set(rels.q, std::move(out));
}

namespace {

// Inserts r into the antichain unless dominated; removes members that
// extend r. Returns true when the antichain changed.
bool antichain_insert(std::vector<DivRel>& chain, const DivRel& r) {
    if (is_trivial(r))
        return false;
    for (const auto& s : chain)
        if (rel_leq(s, r))
            return false;
    std::erase_if(chain, [&](const DivRel& s) { return rel_leq(r, s); });
    chain.push_back(r);
    return true;
}

} // namespace

ClosureRep closure(const RelationSet& rels, std::size_t cap) {
    if (cap == 0)
        cap = default_closure_cap(rels.q);
    std::vector<DivRel> chain = minimize(rels).rels;

    // Compositions of extensions are extensions of compositions, so closing
    // the antichain under composition-and-reminimize reaches min(D-circ).
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<DivRel> snapshot = chain;
        for (const auto& a : snapshot)
            for (const auto& b : snapshot)
                changed |= antichain_insert(chain, compose(a, b));
        if (chain.size() > cap)
            throw CapError("closure cap exceeded");
    }
    return ClosureRep{rels.q, make_relation_set(rels.q, std::move(chain))};
}

bool member(const ClosureRep& rep, const DivRel& r) {
    if (is_trivial(r))
        return true;
    for (const auto& s : rep.min_core.rels)
        if (rel_leq(s, r))
            return true;
    return false;
}

bool is_generating(const RelationSet& rels, const GeneratorList& gens) {
    if (rels.q != gens.size())
        throw InputError("relation universe does not match generator count");
    for (const auto& r : rels.rels)
        if (!holds(r, gens))
            return false;
    ClosureRep rep = closure(rels);
    for (const auto& r : div_min(gens).rels)
        if (!member(rep, r))
            return false;
    for (const auto& r : rep.min_core.rels)
        if (!holds(r, gens))
            return false;
    return true;
}

bool is_minimal_generating(const RelationSet& rels, const GeneratorList& gens) {
    if (!is_generating(rels, gens))
        return false;
    for (std::size_t k = 0; k < rels.rels.size(); ++k) {
        std::vector<DivRel> rest;
        for (std::size_t j = 0; j < rels.rels.size(); ++j)
            if (j != k)
                rest.push_back(rels.rels[j]);
        if (member(closure(make_relation_set(rels.q, std::move(rest))), rels.rels[k]))
            return false;
    }
    return true;
}

RelationSet extract_minimal_generating(const GeneratorList& gens) {
    std::vector<DivRel> kept = div_min(gens).rels;
    // Scan in canonical order, deleting anything deducible from the rest.
    for (std::size_t k = 0; k < kept.size();) {
        std::vector<DivRel> rest;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != k)
                rest.push_back(kept[j]);
        if (member(closure(make_relation_set(gens.size(), std::move(rest))), kept[k]))
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
        else
            ++k;
    }
    return make_relation_set(gens.size(), std::move(kept));
}

} // namespace divrel
