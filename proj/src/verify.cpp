#include "divrel/verify.hpp"

#include <algorithm>

#include "divrel/closure.hpp"
#include "divrel/extremal.hpp"
#include "divrel/transfer.hpp"

namespace divrel {

std::uint64_t pick(Rng& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

RelationSet random_relations(Rng& rng, int q, int max_d, bool min_targets_two) {
    int d = static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_d) + 1));
    std::vector<DivRel> rels;
    for (int j = 0; j < d; ++j) {
        int base = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(q)));
        int min_size = min_targets_two ? 2 : 1;
        if (q < min_size)
            break;
        int size = min_size +
                   static_cast<int>(pick(rng, static_cast<std::uint64_t>(q - min_size) + 1));
        std::vector<int> pool;
        for (int i = 1; i <= q; ++i)
            pool.push_back(i);
        std::vector<int> targets;
        for (int k = 0; k < size; ++k) {
            std::size_t at = static_cast<std::size_t>(pick(rng, pool.size()));
            targets.push_back(pool[at]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
        }
        rels.push_back(make_rel(base, std::move(targets), q));
    }
    return make_relation_set(q, std::move(rels));
}

GeneratorList random_squarefree_ideal(Rng& rng, int max_vars, int max_gens) {
    int n = 3 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(std::max(1, max_vars - 2))));
    n = std::min(n, max_vars);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    VarsPtr vars = make_variables(std::move(names));

    // Sample an antichain of variable subsets directly so minimalization
    // does not collapse the target generator count.
    int target = 2 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_gens - 1)));
    std::vector<Monomial> gens;
    for (int tries = 0; tries < 400 && static_cast<int>(gens.size()) < target; ++tries) {
        int degree = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(n - 1)));
        std::vector<int> pool;
        for (int v = 0; v < n; ++v)
            pool.push_back(v);
        std::vector<Monomial::Term> terms;
        for (int k = 0; k < degree; ++k) {
            std::size_t at = static_cast<std::size_t>(pick(rng, pool.size()));
            terms.emplace_back(pool[at], 1);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
        }
        Monomial candidate = Monomial::from_terms(vars, std::move(terms));
        bool comparable = false;
        for (const auto& m : gens)
            if (divides(m, candidate) || divides(candidate, m))
                comparable = true;
        if (!comparable)
            gens.push_back(std::move(candidate));
    }
    if (static_cast<int>(gens.size()) < 2)
        throw Error("failed to sample a random minimal square-free ideal");
    return make_generator_list(vars, std::move(gens));
}

RelationSet random_satisfied_relations(Rng& rng, const GeneratorList& gens, int max_d) {
    const int q = gens.size();
    int want = static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_d) + 1));
    std::vector<DivRel> rels;
    for (int attempt = 0; attempt < 50 && static_cast<int>(rels.size()) < want; ++attempt) {
        RelationSet candidate = random_relations(rng, q, 1, true);
        if (candidate.rels.empty())
            continue;
        if (holds(candidate.rels.front(), gens))
            rels.push_back(candidate.rels.front());
    }
    // The minimal relations always hold; mix some in so satisfied sets are
    // not vacuously empty for relation-rich ideals.
    RelationSet mins = div_min(gens);
    for (const auto& r : mins.rels)
        if (static_cast<int>(rels.size()) < want && r.targets.size() >= 2 && pick(rng, 2) == 0)
            rels.push_back(r);
    return make_relation_set(q, std::move(rels));
}

namespace {

std::vector<DivRel> all_candidates(int q) {
    std::vector<DivRel> out;
    for (int b = 1; b <= q; ++b)
        for (unsigned mask = 1; mask < (1u << q); ++mask) {
            IndexSet targets;
            for (int i = 1; i <= q; ++i)
                if (mask & (1u << (i - 1)))
                    targets.push_back(i);
            out.push_back(DivRel{b, std::move(targets)});
        }
    return out;
}

bool naive_member(const RelationSet& naive_core, const DivRel& r) {
    if (is_trivial(r))
        return true;
    for (const auto& s : naive_core.rels)
        if (rel_leq(s, r))
            return true;
    return false;
}

} // namespace

SuiteResult suite_div_theorem(const RelationSet& rels) {
    SuiteResult result{"div-theorem", true, 0, ""};
    ExtremalIdeal ideal = extremal_ideal(rels, rels.q);
    DivTheoremReport report = verify_div_theorem(ideal);
    result.checks = static_cast<std::int64_t>(report.candidates);
    if (!report.pass)
        result.fail(report.detail);
    else
        result.detail = report.detail;
    return result;
}

SuiteResult suite_closure_laws(const RelationSet& rels, Rng& rng) {
    SuiteResult result{"closure-laws", true, 0, ""};
    ClosureRep rep = closure(rels);

    // Idempotence.
    ++result.checks;
    if (!(closure(rep.min_core).min_core == rep.min_core))
        result.fail("closure is not idempotent");

    // Base preservation.
    ++result.checks;
    if (!index_set_subset(base_set(rep.min_core), base_set(rels)))
        result.fail("closure introduced a new base");

    // Agreement with the naive engine over every candidate relation.
    if (rels.q <= 6) {
        RelationSet naive = compose_closure_naive(rels);
        for (const auto& r : all_candidates(rels.q)) {
            ++result.checks;
            if (member(rep, r) != naive_member(naive, r)) {
                result.fail("engines disagree at " + r.str());
                break;
            }
        }
    }

    // Random members: compositions and extensions stay inside.
    auto random_member = [&](Rng& r) -> DivRel {
        if (rep.min_core.rels.empty() || pick(r, 4) == 0) {
            int b = 1 + static_cast<int>(pick(r, static_cast<std::uint64_t>(rels.q)));
            IndexSet t{b};
            for (int i = 1; i <= rels.q; ++i)
                if (pick(r, 3) == 0)
                    t.push_back(i);
            return DivRel{b, make_index_set(std::move(t))};
        }
        DivRel base = rep.min_core.rels[pick(r, rep.min_core.rels.size())];
        IndexSet t = base.targets;
        for (int i = 1; i <= rels.q; ++i)
            if (pick(r, 3) == 0)
                t.push_back(i);
        return DivRel{base.base, make_index_set(std::move(t))};
    };
    for (int trial = 0; trial < 64; ++trial) {
        DivRel r1 = random_member(rng);
        DivRel r2 = random_member(rng);
        ++result.checks;
        if (!member(rep, r1) || !member(rep, r2)) {
            result.fail("sampled relation is unexpectedly outside the closure");
            break;
        }
        if (!member(rep, compose(r1, r2))) {
            result.fail("closure not closed under composition at " + r1.str() + " o " +
                        r2.str());
            break;
        }
        IndexSet wider = r1.targets;
        wider.push_back(1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(rels.q))));
        if (!member(rep, DivRel{r1.base, make_index_set(std::move(wider))})) {
            result.fail("closure not closed under extension at " + r1.str());
            break;
        }
    }
    return result;
}

SuiteResult suite_power_minimality(const RelationSet& rels, int max_r) {
    SuiteResult result{"power-minimality", true, 0, ""};
    ExtremalIdeal ideal = extremal_ideal(rels, rels.q);
    for (int r = 1; r <= max_r; ++r) {
        PowerGenerators pg = power_generators(ideal, r);
        Exponent expected = binomial(Exponent(rels.q) + r - 1, Exponent(r));
        ++result.checks;
        if (Exponent(pg.entries.size()) != expected) {
            result.fail("power generator count mismatch at r=" + std::to_string(r));
            return result;
        }
        for (std::size_t i = 0; i < pg.entries.size(); ++i)
            for (std::size_t j = 0; j < pg.entries.size(); ++j) {
                if (i == j)
                    continue;
                ++result.checks;
                if (divides(pg.entries[i].second, pg.entries[j].second)) {
                    result.fail("power generator divides another at r=" + std::to_string(r));
                    return result;
                }
            }
    }
    return result;
}

SuiteResult suite_psi(const GeneratorList& gens, const RelationSet& rels, Rng& rng, int max_r,
                      int max_tuple) {
    SuiteResult result{"psi", true, 0, ""};
    PsiMap psi = psi_build(gens, rels);
    ExtremalIdeal restricted = extremal_ideal(rels, rels.q);
    ExtremalIdeal full = extremal_ideal(make_relation_set(rels.q, {}), rels.q);

    for (int i = 1; i <= rels.q; ++i) {
        ++result.checks;
        if (!(psi_apply(psi, restricted.gens[static_cast<std::size_t>(i - 1)],
                        restricted.qset) == gens.at(i))) {
            result.fail("psi(eps_D," + std::to_string(i) + ") != m_" + std::to_string(i));
            return result;
        }
        ++result.checks;
        if (!(psi_apply(psi, full.gens[static_cast<std::size_t>(i - 1)], full.qset) ==
              gens.at(i))) {
            result.fail("psi(eps_" + std::to_string(i) + ") != m_" + std::to_string(i));
            return result;
        }
    }

    for (int r = 1; r <= max_r; ++r) {
        PowerGenerators pg = power_generators(restricted, r);
        for (const auto& [tuple, eps_power] : pg.entries) {
            std::vector<std::pair<Monomial, Exponent>> factors;
            for (int i = 0; i < rels.q; ++i)
                if (tuple[static_cast<std::size_t>(i)] > 0)
                    factors.emplace_back(gens.at(i + 1), tuple[static_cast<std::size_t>(i)]);
            Monomial target_power = product(gens.vars, factors);
            ++result.checks;
            if (!(psi_apply(psi, eps_power, restricted.qset) == target_power)) {
                result.fail("psi(eps^a) != m^a");
                return result;
            }
        }

        // lcm preservation on random tuples.
        for (int trial = 0; trial < 16; ++trial) {
            std::size_t t = 1 + pick(rng, static_cast<std::uint64_t>(max_tuple));
            std::vector<Monomial> source_parts, target_parts;
            for (std::size_t k = 0; k < t; ++k) {
                const auto& [tuple, eps_power] = pg.entries[pick(rng, pg.entries.size())];
                source_parts.push_back(eps_power);
                std::vector<std::pair<Monomial, Exponent>> factors;
                for (int i = 0; i < rels.q; ++i)
                    if (tuple[static_cast<std::size_t>(i)] > 0)
                        factors.emplace_back(gens.at(i + 1),
                                             tuple[static_cast<std::size_t>(i)]);
                target_parts.push_back(product(gens.vars, factors));
            }
            ++result.checks;
            if (!(psi_apply(psi, lcm(source_parts), restricted.qset) == lcm(target_parts))) {
                result.fail("psi does not preserve lcms");
                return result;
            }
        }
    }
    return result;
}

SuiteResult suite_power_bounds(const GeneratorList& gens, const RelationSet& rels, int r,
                               const BettiOptions& options) {
    SuiteResult result{"power-bounds", true, 0, ""};
    BoundReport report = bound_check(gens, rels, r, options);
    result.checks = static_cast<std::int64_t>(report.ok.size());
    if (!report.pass) {
        for (std::size_t i = 0; i < report.ok.size(); ++i)
            if (!report.ok[i]) {
                result.fail("beta_" + std::to_string(i) + " exceeds the extremal bound");
                break;
            }
    }
    return result;
}

SuiteResult suite_lattice(const GeneratorList& gens, const RelationSet& rels,
                          const BettiOptions& options) {
    SuiteResult result{"lattice", true, 0, ""};
    ExtremalIdeal ideal = extremal_ideal(rels, rels.q);
    LatticeMap map = lattice_map(ideal, gens, options);

    // Atom bijectivity: atom k maps to atom k.
    for (int i = 1; i <= rels.q; ++i) {
        ++result.checks;
        std::size_t src = map.source.index_of(ideal.gens[static_cast<std::size_t>(i - 1)]);
        std::size_t tgt = map.target.index_of(gens.at(i));
        if (map.image[src] != tgt) {
            result.fail("atom " + std::to_string(i) + " is not matched");
            return result;
        }
    }
    // Join preservation on all pairs.
    for (std::size_t a = 0; a < map.source.elements.size(); ++a)
        for (std::size_t b = a; b < map.source.elements.size(); ++b) {
            ++result.checks;
            std::size_t join_src =
                map.source.index_of(lcm(map.source.elements[a], map.source.elements[b]));
            std::size_t join_tgt = map.target.index_of(
                lcm(map.target.elements[map.image[a]], map.target.elements[map.image[b]]));
            if (map.image[join_src] != join_tgt) {
                result.fail("joins not preserved");
                return result;
            }
        }

    // Isomorphism exactly when D generates Div(I); then Betti tables agree.
    bool generating = is_generating(rels, gens);
    ++result.checks;
    if (map.isomorphism != generating) {
        result.fail("isomorphism flag disagrees with Div comparison");
        return result;
    }
    if (generating) {
        BettiTable left = betti(generator_list(ideal), options);
        BettiTable right = betti(gens, options);
        ++result.checks;
        if (left.total != right.total) {
            result.fail("Betti numbers differ despite isomorphic lattices");
            return result;
        }
    }

    // Multidegree-level transfer bound at r=1.
    PsiMap psi = psi_build(gens, rels);
    BettiTable source = betti(generator_list(ideal), options);
    BettiTable bound = betti_transfer(source, psi, ideal.qset);
    BettiTable actual = betti(gens, options);
    for (std::size_t i = 0; i < actual.graded.size(); ++i)
        for (const auto& [degree, count] : actual.graded[i]) {
            ++result.checks;
            std::int64_t allowed = 0;
            if (i < bound.graded.size()) {
                auto it = bound.graded[i].find(degree);
                if (it != bound.graded[i].end())
                    allowed = it->second;
            }
            if (count > allowed) {
                result.fail("multigraded transfer bound violated at i=" + std::to_string(i) +
                            ", degree " + degree.str());
                return result;
            }
        }
    return result;
}

SuiteResult suite_extremal_invariance(const RelationSet& rels) {
    SuiteResult result{"extremal-invariance", true, 0, ""};
    ExtremalIdeal base = extremal_ideal(rels, rels.q);

    auto same_ideal = [&](const RelationSet& other, const std::string& label) {
        ExtremalIdeal variant = extremal_ideal(other, rels.q);
        ++result.checks;
        if (!ideals_equal(base, variant) || !(variant.qset == base.qset))
            result.fail("extremal ideal changed under " + label);
    };
    same_ideal(minimize(rels), "minimization");
    same_ideal(closure(rels).min_core, "closure");

    std::vector<DivRel> with_trivial = rels.rels;
    int b = 1 + (rels.q > 1 ? 1 : 0);
    with_trivial.push_back(make_rel(b, rels.q > 1 ? std::vector<int>{1, b} : std::vector<int>{b},
                                    rels.q));
    same_ideal(make_relation_set(rels.q, std::move(with_trivial)), "adding a trivial relation");
    return result;
}

SuiteResult suite_div_complete(const RelationSet& rels) {
    SuiteResult result{"div-complete", true, 0, ""};
    if (rels.q > 6) {
        result.fail("suite requires q <= 6");
        return result;
    }
    ClosureRep rep = closure(rels);
    ExtremalIdeal ideal = extremal_ideal(rels, rels.q);
    GeneratorList gens = generator_list(ideal);

    std::vector<DivRel> closure_explicit, div_explicit;
    for (const auto& r : all_candidates(rels.q)) {
        if (member(rep, r))
            closure_explicit.push_back(r);
        if (holds(r, gens))
            div_explicit.push_back(r);
    }
    RelationSet closed = make_relation_set(rels.q, std::move(closure_explicit));
    RelationSet div_full = make_relation_set(rels.q, std::move(div_explicit));

    ++result.checks;
    bool closure_fixed = closed == rels;
    bool equals_div = rels == div_full;
    if (closure_fixed != equals_div)
        result.fail("closure-fixedness disagrees with Div comparison");
    return result;
}

} // namespace divrel
