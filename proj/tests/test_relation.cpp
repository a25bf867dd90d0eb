#include <doctest.h>

#include <algorithm>
#include <random>

#include "divrel/relation.hpp"
#include "test_util.hpp"

using namespace divrel;
using testutil::ideal;
using testutil::letters;
using testutil::rel;
using testutil::rels;

TEST_CASE("composition strips the base and unions the targets") {
    CHECK(compose(rel(1, {2, 3}), rel(2, {4, 5})) == rel(1, {3, 4, 5}));
    CHECK(compose(rel(2, {4, 5}), rel(1, {2, 3})) == rel(2, {2, 3, 4, 5}));
    DivRel r = rel(3, {1, 7});
    CHECK(compose(r, r) == r);
    // Noncommutativity witness.
    CHECK_FALSE(compose(rel(1, {2, 3}), rel(2, {4, 5})) ==
                compose(rel(2, {4, 5}), rel(1, {2, 3})));
}

TEST_CASE("triviality and the extension order") {
    CHECK(is_trivial(rel(1, {1, 2})));
    CHECK(is_trivial(rel(3, {3})));
    CHECK_FALSE(is_trivial(rel(1, {2, 3})));

    CHECK(rel_leq(rel(1, {2, 3}), rel(1, {2, 3, 4})));
    CHECK(rel_leq(rel(1, {2, 3}), rel(1, {2, 3})));
    CHECK_FALSE(rel_leq(rel(1, {2, 3}), rel(2, {2, 3})));
    CHECK_FALSE(rel_leq(rel(1, {2, 3, 4}), rel(1, {2, 3})));
}

TEST_CASE("holds checks the divisibility statement") {
    GeneratorList u = testutil::running_ideal();
    CHECK(holds(rel(1, {2, 3}), u));
    CHECK(holds(rel(2, {4, 5}), u));
    CHECK(holds(rel(4, {4}), u));        // trivial relations always hold
    CHECK_FALSE(holds(rel(4, {1, 2}), u)); // h divides only u_4
    CHECK(div_contains(u, rel(1, {2, 3})));
    CHECK_THROWS_AS(holds(rel(6, {1}), u), InputError);
}

TEST_CASE("base_set collects the first coordinates") {
    CHECK(base_set(rels(5, {rel(1, {2, 3}), rel(3, {1, 5}), rel(3, {4, 5})})) ==
          IndexSet{1, 3});
    CHECK(base_set(rels(5, {})).empty());
    CHECK(base_set(rels(3, {rel(2, {2})})) == IndexSet{2});
}

TEST_CASE("relation sets are canonical") {
    RelationSet set = rels(5, {rel(3, {4, 5}), rel(1, {2, 3}), rel(3, {1, 5}), rel(1, {2, 3})});
    REQUIRE(set.size() == 3);
    CHECK(set.rels[0] == rel(1, {2, 3}));
    CHECK(set.rels[1] == rel(3, {1, 5}));
    CHECK(set.rels[2] == rel(3, {4, 5}));
    CHECK(set.contains(rel(3, {4, 5})));
    CHECK_FALSE(set.contains(rel(3, {4})));
    CHECK_THROWS_AS(rels(2, {rel(3, {1})}), InputError);
    CHECK_THROWS_AS(make_rel(1, {}), InputError);
}

TEST_CASE("div_min on small ideals") {
    VarsPtr xyz = letters("xyz");
    CHECK(div_min(ideal(xyz, {"xy", "yz", "xz"})) ==
          rels(3, {rel(1, {2, 3}), rel(2, {1, 3}), rel(3, {1, 2})}));
    CHECK(div_min(ideal(letters("xy"), {"x", "y"})).size() == 0);

    GeneratorList dup{xyz, {testutil::mono(xyz, "xy"), testutil::mono(xyz, "xy")}};
    CHECK_THROWS_WITH_AS(div_min(dup), "generators not distinct", InputError);
}

TEST_CASE("div_min handles unit generators by listing singletons") {
    VarsPtr xy = letters("xy");
    GeneratorList gens = ideal(xy, {"1", "x", "y"});
    RelationSet result = div_min(gens);
    // Base 1 is the unit: every other index forms a minimal relation; bases
    // 2 and 3 divide nothing else... except via the unit? lcm({1}) = 1.
    CHECK(result.contains(rel(1, {2})));
    CHECK(result.contains(rel(1, {3})));
    CHECK(result == div_min_bruteforce(gens));
}

TEST_CASE("minimal transversal enumeration") {
    auto universe = IndexSet{1, 2, 3, 4};
    auto sorted = minimal_transversals({{1, 2}, {2, 3}, {3, 4}}, universe);
    CHECK(sorted == std::vector<IndexSet>{{1, 3}, {2, 3}, {2, 4}});
    CHECK(minimal_transversals({{1, 2}, {}}, universe).empty());
    CHECK(minimal_transversals({}, universe) == std::vector<IndexSet>{{}});
}

TEST_CASE("div_min matches brute force on random ideals") {
    std::mt19937_64 rng(777);
    VarsPtr vars = letters("abcdef");
    for (int trial = 0; trial < 120; ++trial) {
        int q = 2 + static_cast<int>(rng() % 4);
        bool squarefree = trial % 2 == 0;
        std::vector<Monomial> gens;
        for (int g = 0; g < q; ++g) {
            std::vector<Monomial::Term> terms;
            for (int v = 0; v < 6; ++v)
                if (rng() % 2)
                    terms.emplace_back(v, squarefree ? 1 : static_cast<int>(rng() % 3 + 1));
            if (terms.empty())
                terms.emplace_back(static_cast<int>(rng() % 6), 1);
            gens.push_back(Monomial::from_terms(vars, std::move(terms)));
        }
        // Drop duplicates; distinctness is a precondition.
        std::vector<Monomial> distinct;
        for (const auto& m : gens)
            if (std::find(distinct.begin(), distinct.end(), m) == distinct.end())
                distinct.push_back(m);
        if (distinct.size() < 2)
            continue;
        GeneratorList u = make_generator_list(vars, std::move(distinct));

        RelationSet fast = div_min(u);
        RelationSet oracle = div_min_bruteforce(u);
        REQUIRE(fast == oracle);

        // Antichain without trivial members.
        for (const auto& a : fast.rels) {
            CHECK_FALSE(is_trivial(a));
            for (const auto& b : fast.rels)
                if (!(a == b))
                    CHECK_FALSE(rel_leq(a, b));
        }
    }
}

TEST_CASE("holding relations are exactly the extensions of div_min plus trivials") {
    GeneratorList u = testutil::ideal(letters("abcde"), {"ab", "bc", "cd", "ad"});
    RelationSet mins = div_min(u);
    const int q = u.size();
    std::vector<DivRel> holding;
    for (int b = 1; b <= q; ++b)
        for (unsigned mask = 1; mask < (1u << q); ++mask) {
            IndexSet targets;
            for (int i = 1; i <= q; ++i)
                if (mask & (1u << (i - 1)))
                    targets.push_back(i);
            DivRel r{b, targets};
            bool expected = is_trivial(r);
            for (const auto& s : mins.rels)
                expected = expected || rel_leq(s, r);
            CHECK(holds(r, u) == expected);
            if (holds(r, u))
                holding.push_back(std::move(r));
        }

    // Composition stays inside the holding set.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const DivRel& r1 = holding[rng() % holding.size()];
        const DivRel& r2 = holding[rng() % holding.size()];
        CHECK(holds(compose(r1, r2), u));
    }
}
