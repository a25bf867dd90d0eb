#include "divrel/relation.hpp"

#include <algorithm>
#include <sstream>

namespace divrel {

bool index_set_contains(const IndexSet& s, int i) {
    return std::binary_search(s.begin(), s.end(), i);
}

bool index_set_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool index_sets_intersect(const IndexSet& a, const IndexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

IndexSet index_set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet index_set_minus(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet make_index_set(std::vector<int> values, int q) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int v : values) {
        if (v < 1 || (q > 0 && v > q))
            throw InputError("index out of range: " + std::to_string(v));
    }
    return values;
}

std::string index_set_str(const IndexSet& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out << ',';
        out << s[i];
    }
    out << '}';
    return out.str();
}

std::string DivRel::str() const {
    return "(" + std::to_string(base) + "," + index_set_str(targets) + ")";
}

bool rel_less(const DivRel& a, const DivRel& b) {
    if (a.base != b.base)
        return a.base < b.base;
    return a.targets < b.targets;
}

DivRel make_rel(int base, std::vector<int> targets, int q) {
    if (base < 1 || (q > 0 && base > q))
        throw InputError("relation base out of range: " + std::to_string(base));
    IndexSet t = make_index_set(std::move(targets), q);
    if (t.empty())
        throw InputError("relation targets must be nonempty");
    return DivRel{base, std::move(t)};
}

bool RelationSet::contains(const DivRel& r) const {
    auto it = std::lower_bound(rels.begin(), rels.end(), r, rel_less);
    return it != rels.end() && *it == r;
}

RelationSet make_relation_set(int q, std::vector<DivRel> rels) {
    if (q < 0)
        throw InputError("universe size must be nonnegative");
    for (auto& r : rels) {
        if (r.base < 1 || r.base > q)
            throw InputError("relation base out of range: " + std::to_string(r.base));
        r.targets = make_index_set(r.targets, q);
        if (r.targets.empty())
            throw InputError("relation targets must be nonempty");
    }
    std::sort(rels.begin(), rels.end(), rel_less);
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    return RelationSet{q, std::move(rels)};
}

DivRel compose(const DivRel& r1, const DivRel& r2) {
    IndexSet stripped = r1.targets;
    auto it = std::lower_bound(stripped.begin(), stripped.end(), r2.base);
    if (it != stripped.end() && *it == r2.base)
        stripped.erase(it);
    return DivRel{r1.base, index_set_union(stripped, r2.targets)};
}

bool is_trivial(const DivRel& r) {
    return index_set_contains(r.targets, r.base);
}

bool rel_leq(const DivRel& r1, const DivRel& r2) {
    return r1.base == r2.base && index_set_subset(r1.targets, r2.targets);
}

bool holds(const DivRel& r, const GeneratorList& gens) {
    if (r.base < 1 || r.base > gens.size() || r.targets.empty() || r.targets.back() > gens.size())
        throw InputError("relation invalid for generator list: " + r.str());
    std::vector<Monomial> targets;
    targets.reserve(r.targets.size());
    for (int i : r.targets)
        targets.push_back(gens.at(i));
    return divides(gens.at(r.base), lcm(targets));
}

bool div_contains(const GeneratorList& gens, const DivRel& r) {
    return holds(r, gens);
}

IndexSet base_set(const RelationSet& rels) {
    std::vector<int> bases;
    bases.reserve(rels.size());
    for (const auto& r : rels.rels)
        bases.push_back(r.base);
    return make_index_set(std::move(bases));
}

namespace {

// Branch on the smallest uncovered edge; prune partial selections that
// already contain a previously found transversal.
void transversal_search(const std::vector<IndexSet>& edges, IndexSet& chosen,
                        std::vector<IndexSet>& found) {
    for (const auto& t : found)
        if (index_set_subset(t, chosen) && t.size() < chosen.size())
            return;

    const IndexSet* branch_edge = nullptr;
    for (const auto& e : edges) {
        if (index_sets_intersect(e, chosen))
            continue;
        if (!branch_edge || e.size() < branch_edge->size())
            branch_edge = &e;
    }
    if (!branch_edge) {
        // Every edge covered; keep only inclusion-minimal results.
        for (const auto& t : found)
            if (index_set_subset(t, chosen))
                return;
        std::erase_if(found, [&](const IndexSet& t) { return index_set_subset(chosen, t); });
        found.push_back(chosen);
        return;
    }
    for (int v : *branch_edge) {
        IndexSet next = index_set_union(chosen, IndexSet{v});
        transversal_search(edges, next, found);
    }
}

} // namespace

std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& edges,
                                           const IndexSet& universe) {
    for (const auto& e : edges) {
        if (e.empty())
            return {};
        if (!index_set_subset(e, universe))
            throw InputError("edge not contained in universe");
    }
    if (edges.empty())
        return {IndexSet{}};
    std::vector<IndexSet> found;
    IndexSet chosen;
    transversal_search(edges, chosen, found);
    std::sort(found.begin(), found.end(), [](const IndexSet& a, const IndexSet& b) {
        return a < b;
    });
    return found;
}

RelationSet div_min(const GeneratorList& gens) {
    require_distinct(gens);
    const int q = gens.size();
    std::vector<DivRel> out;
    for (int b = 1; b <= q; ++b) {
        IndexSet others;
        for (int i = 1; i <= q; ++i)
            if (i != b)
                others.push_back(i);
        if (others.empty())
            continue;

        // One edge per variable of u_b: the generators matching its exponent.
        std::vector<IndexSet> edges;
        bool dead_base = false;
        for (const auto& [pos, exp] : gens.at(b).terms()) {
            IndexSet edge;
            for (int i : others)
                if (gens.at(i).exponent(pos) >= exp)
                    edge.push_back(i);
            if (edge.empty()) {
                dead_base = true;
                break;
            }
            edges.push_back(std::move(edge));
        }
        if (dead_base)
            continue;
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        for (auto& t : minimal_transversals(edges, others)) {
            if (t.empty()) {
                // u_b = 1: every nonempty B works, so the minimal relations
                // are the singletons.
                for (int i : others)
                    out.push_back(DivRel{b, IndexSet{i}});
            } else {
                out.push_back(DivRel{b, std::move(t)});
            }
        }
    }
    return make_relation_set(q, std::move(out));
}

RelationSet div_min_bruteforce(const GeneratorList& gens) {
    require_distinct(gens);
    const int q = gens.size();
    if (q > 24)
        throw CapError("brute-force relation scan limited to 24 generators");
    std::vector<DivRel> holding;
    for (int b = 1; b <= q; ++b) {
        for (unsigned mask = 1; mask < (1u << q); ++mask) {
            if (mask & (1u << (b - 1)))
                continue; // nontrivial candidates only
            IndexSet targets;
            for (int i = 1; i <= q; ++i)
                if (mask & (1u << (i - 1)))
                    targets.push_back(i);
            DivRel r{b, std::move(targets)};
            if (holds(r, gens))
                holding.push_back(std::move(r));
        }
    }
    // Keep the minimal ones.
    std::vector<DivRel> minimal;
    for (const auto& r : holding) {
        bool dominated = false;
        for (const auto& s : holding)
            if (!(s == r) && rel_leq(s, r)) {
                dominated = true;
                break;
            }
        if (!dominated)
            minimal.push_back(r);
    }
    return make_relation_set(q, std::move(minimal));
}

} // namespace divrel
