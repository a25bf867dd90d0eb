#include "divrel/decision_tree.hpp"

#include <algorithm>
#include <sstream>

#include "divrel/extremal.hpp"

namespace divrel {

namespace {

// Base labels of the even ancestors of an odd vertex (the set C(v)).
IndexSet even_ancestor_labels(const DecisionTree& tree, int v) {
    std::vector<int> labels;
    for (int cur = tree.vertices[static_cast<std::size_t>(v)].parent; cur != -1;
         cur = tree.vertices[static_cast<std::size_t>(cur)].parent)
        if (tree.vertices[static_cast<std::size_t>(cur)].height % 2 == 0)
            labels.push_back(tree.vertices[static_cast<std::size_t>(cur)].label);
    return make_index_set(std::move(labels));
}

void require_tree_hypothesis(const RelationSet& rels) {
    for (const auto& r : rels.rels)
        if (!is_trivial(r) && r.targets.size() < 2)
            throw InputError("theorem hypothesis |B|>=2 violated");
}

} // namespace

DecisionTree build_tree(const RelationSet& rels, int b, const IndexSet& targets) {
    require_tree_hypothesis(rels);
    if (targets.empty())
        throw InputError("query targets must be nonempty");
    IndexSet bases = base_set(rels);
    if (!index_set_contains(bases, b))
        throw InputError("root not in base set");

    DecisionTree tree;
    tree.base = b;
    tree.targets = targets;
    tree.vertices.push_back(TreeVertex{0, b, -1, {}, false, false});

    // Vertices are appended level by level; relation indices follow the
    // canonical order of D.
    std::vector<int> frontier{0}; // even vertices awaiting odd children
    while (!frontier.empty()) {
        std::vector<int> next_even;
        for (int v : frontier) {
            int blabel = tree.vertices[static_cast<std::size_t>(v)].label;
            for (std::size_t j = 0; j < rels.rels.size(); ++j) {
                if (rels.rels[j].base != blabel)
                    continue;
                int odd = static_cast<int>(tree.vertices.size());
                tree.vertices.push_back(TreeVertex{
                    tree.vertices[static_cast<std::size_t>(v)].height + 1,
                    static_cast<int>(j + 1), v, {}, false, false});
                tree.vertices[static_cast<std::size_t>(v)].children.push_back(odd);

                // Children of the odd vertex: one even vertex per element of
                // B_j \ B, added only when that difference is nonempty and
                // avoids the even-ancestor labels within Base(D).
                IndexSet diff = index_set_minus(rels.rels[j].targets, targets);
                if (diff.empty())
                    continue;
                IndexSet seen = even_ancestor_labels(tree, odd);
                IndexSet allowed = index_set_minus(bases, seen);
                if (!index_set_subset(diff, allowed))
                    continue;
                for (int c : diff) {
                    int even = static_cast<int>(tree.vertices.size());
                    tree.vertices.push_back(TreeVertex{
                        tree.vertices[static_cast<std::size_t>(odd)].height + 1, c, odd,
                        {}, false, false});
                    tree.vertices[static_cast<std::size_t>(odd)].children.push_back(even);
                    next_even.push_back(even);
                }
            }
        }
        frontier = std::move(next_even);
    }

    // Classification, leaves first. A leaf is good iff its relation's
    // targets all lie in B; an even vertex needs one good child, a non-leaf
    // odd vertex needs all children good.
    for (std::size_t i = tree.vertices.size(); i-- > 0;) {
        TreeVertex& v = tree.vertices[i];
        if (v.height % 2 == 1 && v.children.empty()) {
            const DivRel& rel = rels.rels[static_cast<std::size_t>(v.label - 1)];
            v.good = index_set_subset(rel.targets, targets);
        } else if (v.height % 2 == 0) {
            v.good = std::any_of(v.children.begin(), v.children.end(), [&](int c) {
                return tree.vertices[static_cast<std::size_t>(c)].good;
            });
        } else {
            v.good = std::all_of(v.children.begin(), v.children.end(), [&](int c) {
                return tree.vertices[static_cast<std::size_t>(c)].good;
            });
        }
    }
    // Extremely bad: bad with all ancestors bad (computed top-down).
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        TreeVertex& v = tree.vertices[i];
        if (v.good) {
            v.extremely_bad = false;
            continue;
        }
        v.extremely_bad = v.parent == -1 ||
                          tree.vertices[static_cast<std::size_t>(v.parent)].extremely_bad;
    }
    return tree;
}

std::string tree_text(const DecisionTree& tree) {
    std::ostringstream out;
    // Depth-first with explicit stack to keep child order.
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const TreeVertex& vert = tree.vertices[static_cast<std::size_t>(v)];
        for (int i = 0; i < vert.height; ++i)
            out << "  ";
        if (vert.height % 2 == 0)
            out << "base " << vert.label;
        else
            out << "rel " << vert.label;
        out << (vert.good ? " [good]" : " [bad]");
        if (vert.extremely_bad)
            out << " [extremely bad]";
        out << '\n';
        for (auto it = vert.children.rbegin(); it != vert.children.rend(); ++it)
            stack.push_back(*it);
    }
    return out.str();
}

namespace {

// Emits the relation indices of the derivation rooted at a good even
// vertex, in the left-to-right composition order.
void emit_derivation(const DecisionTree& tree, const RelationSet& rels, int even_vertex,
                     std::vector<int>& out) {
    const TreeVertex& v = tree.vertices[static_cast<std::size_t>(even_vertex)];
    int chosen = -1;
    for (int c : v.children)
        if (tree.vertices[static_cast<std::size_t>(c)].good) {
            chosen = c;
            break;
        }
    if (chosen == -1)
        throw Error("derivation requested at a bad vertex");
    const TreeVertex& odd = tree.vertices[static_cast<std::size_t>(chosen)];
    out.push_back(odd.label);
    for (int grandchild : odd.children)
        emit_derivation(tree, rels, grandchild, out);
}

DivRel fold_derivation(const RelationSet& rels, const std::vector<int>& indices) {
    if (indices.empty())
        throw InputError("empty derivation");
    for (int idx : indices)
        if (idx < 1 || static_cast<std::size_t>(idx) > rels.rels.size())
            throw InputError("derivation index out of range");
    DivRel acc = rels.rels[static_cast<std::size_t>(indices[0] - 1)];
    for (std::size_t i = 1; i < indices.size(); ++i)
        acc = compose(acc, rels.rels[static_cast<std::size_t>(indices[i] - 1)]);
    return acc;
}

// mu(v) for a bad leaf: an element of B_label \ B that is outside Base(D)
// or repeats an even-ancestor label. Prefers elements outside Base(D),
// smallest first.
int bad_leaf_mu(const DecisionTree& tree, const RelationSet& rels, const IndexSet& bases,
                int leaf) {
    const TreeVertex& v = tree.vertices[static_cast<std::size_t>(leaf)];
    const DivRel& rel = rels.rels[static_cast<std::size_t>(v.label - 1)];
    IndexSet diff = index_set_minus(rel.targets, tree.targets);
    IndexSet seen = even_ancestor_labels(tree, leaf);
    for (int x : diff)
        if (!index_set_contains(bases, x))
            return x;
    for (int x : diff)
        if (index_set_contains(seen, x))
            return x;
    throw Error("bad leaf without a valid mu element");
}

} // namespace

Verdict membership_with_certificate(const RelationSet& rels, const DivRel& r) {
    require_tree_hypothesis(rels);
    if (r.base < 1 || (rels.q > 0 && r.base > rels.q) || r.targets.empty() ||
        r.targets.front() < 1 || (rels.q > 0 && r.targets.back() > rels.q))
        throw InputError("invalid query relation");

    if (is_trivial(r))
        return Verdict{VerdictKind::in_trivial, std::nullopt, std::nullopt};

    IndexSet bases = base_set(rels);
    if (!index_set_contains(bases, r.base))
        return Verdict{VerdictKind::not_in, std::nullopt, Witness{IndexSet{r.base}}};

    DecisionTree tree = build_tree(rels, r.base, r.targets);
    if (tree.root().good) {
        std::vector<int> indices;
        emit_derivation(tree, rels, 0, indices);
        Verdict verdict{VerdictKind::in_derived, Derivation{std::move(indices)}, std::nullopt};
        DivRel folded = fold_derivation(rels, verdict.derivation->relations);
        if (!rel_leq(folded, r))
            throw Error("derivation fold is not below the query");
        return verdict;
    }

    // Bad root: assemble the witness from the extremely bad region.
    std::vector<int> witness_elems;
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        const TreeVertex& v = tree.vertices[i];
        if (!v.extremely_bad)
            continue;
        if (v.height % 2 == 0)
            witness_elems.push_back(v.label);
        else if (v.children.empty())
            witness_elems.push_back(bad_leaf_mu(tree, rels, bases, static_cast<int>(i)));
    }
    Witness witness{make_index_set(std::move(witness_elems))};
    if (!q_set_admits(rels, witness.set) || !index_set_contains(witness.set, r.base) ||
        index_sets_intersect(witness.set, r.targets))
        throw Error("constructed witness fails its defining conditions");
    return Verdict{VerdictKind::not_in, std::nullopt, std::move(witness)};
}

bool verify_certificate(const RelationSet& rels, const DivRel& r, const Verdict& verdict,
                        std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic)
            *diagnostic = why;
        return false;
    };
    try {
        switch (verdict.kind) {
        case VerdictKind::in_trivial:
            if (!is_trivial(r))
                return fail("query is not trivial");
            return true;
        case VerdictKind::in_derived: {
            if (!verdict.derivation)
                return fail("missing derivation");
            DivRel folded = fold_derivation(rels, verdict.derivation->relations);
            if (!rel_leq(folded, r))
                return fail("derivation folds to " + folded.str() + ", not below " + r.str());
            return true;
        }
        case VerdictKind::not_in: {
            if (!verdict.witness)
                return fail("missing witness");
            const IndexSet& a = verdict.witness->set;
            if (a.empty() || (rels.q > 0 && a.back() > rels.q))
                return fail("witness is not a subset of the universe");
            if (!q_set_admits(rels, a))
                return fail("witness not in Q(D)");
            if (!index_set_contains(a, r.base))
                return fail("witness does not contain the base");
            if (index_sets_intersect(a, r.targets))
                return fail("witness meets the targets");
            return true;
        }
        }
    } catch (const Error& e) {
        return fail(e.what());
    }
    return fail("unknown verdict kind");
}

} // namespace divrel
