#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divrel/relation.hpp"

namespace divrel {

// A vertex of a decision tree. Even heights carry a base label, odd heights
// the 1-based index of a relation in the canonical order of D.
struct TreeVertex {
    int height = 0;
    int label = 0;
    int parent = -1;
    std::vector<int> children;
    bool good = false;
    bool extremely_bad = false;
};

struct DecisionTree {
    int base = 0;
    IndexSet targets;
    std::vector<TreeVertex> vertices; // index 0 is the root

    const TreeVertex& root() const { return vertices.front(); }
};

// Builds and classifies the decision tree for the query (b, B) against D.
// Requires b in Base(D) and every nontrivial member of D to have at least
// two targets.
DecisionTree build_tree(const RelationSet& rels, int b, const IndexSet& targets);

// Indented-text rendering for diagnostics.
std::string tree_text(const DecisionTree& tree);

// A proof that the query is deducible: relation indices whose left-to-right
// composition folds to a relation below the query.
struct Derivation {
    std::vector<int> relations; // 1-based indices into the canonical order of D
};

// A proof that the query is not deducible: a subset A in Q(D) containing
// the base and disjoint from the targets.
struct Witness {
    IndexSet set;
};

enum class VerdictKind { in_trivial, in_derived, not_in };

struct Verdict {
    VerdictKind kind = VerdictKind::not_in;
    std::optional<Derivation> derivation; // set for in_derived
    std::optional<Witness> witness;       // set for not_in
    bool is_member() const { return kind != VerdictKind::not_in; }
};

// Decides whether r is deducible from D, with a checkable certificate
// either way. Requires every nontrivial member of D to have at least two
// targets.
Verdict membership_with_certificate(const RelationSet& rels, const DivRel& r);

// Re-checks a verdict from scratch: folds a derivation and compares against
// r, or re-validates the witness conditions. Malformed certificates yield
// false with a diagnostic.
bool verify_certificate(const RelationSet& rels, const DivRel& r, const Verdict& verdict,
                        std::string* diagnostic = nullptr);

} // namespace divrel
