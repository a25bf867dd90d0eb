#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divrel/errors.hpp"

namespace divrel {

// Exponents are exact arbitrary-precision integers so that high powers of
// ideals can never overflow.
using Exponent = boost::multiprecision::cpp_int;

// An ordered set of distinct variable names. The order is fixed at
// construction and defines the positions used by Monomial exponent vectors.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int pos) const { return names_.at(static_cast<std::size_t>(pos)); }
    const std::vector<std::string>& names() const { return names_; }

    // Position of a variable name, or nullopt if unknown.
    std::optional<int> position(std::string_view name) const;

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<std::string, int>> index_; // sorted by name
};

using VarsPtr = std::shared_ptr<const VariableSet>;

VarsPtr make_variables(std::vector<std::string> names);

// A monomial over a fixed VariableSet, stored as a sparse exponent vector
// sorted by variable position. All stored exponents are >= 1; the monomial 1
// has an empty term list.
class Monomial {
public:
    using Term = std::pair<int, Exponent>;

    static Monomial one(VarsPtr vars);
    // Terms may be unsorted and may repeat (exponents of a repeated position
    // are added); zero exponents are dropped.
    static Monomial from_terms(VarsPtr vars, std::vector<Term> terms);

    const VarsPtr& variables() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_one() const { return terms_.empty(); }

    Exponent exponent(int pos) const;
    Exponent total_degree() const;

    bool operator==(const Monomial& other) const;
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    // Total order (positionwise lexicographic on dense exponent vectors);
    // used for canonical sorting and map keys.
    bool operator<(const Monomial& other) const;

    // Canonical rendering: factors in variable order joined by '*', '^e'
    // omitted when e = 1, and the unit monomial rendered as "1".
    std::string str() const;

private:
    Monomial(VarsPtr vars, std::vector<Term> terms)
        : vars_(std::move(vars)), terms_(std::move(terms)) {}

    VarsPtr vars_;
    std::vector<Term> terms_;
};

// Throws InputError unless both monomials live over the same VariableSet
// (pointer identity or equal content).
void require_same_variables(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
bool is_squarefree(const Monomial& m);

Monomial lcm(const Monomial& a, const Monomial& b);
// Errors with "empty lcm" on an empty sequence.
Monomial lcm(const std::vector<Monomial>& ms);

// Exponentwise weighted sum: product of m^mult over the given factors.
// Multiplicities must be >= 0.
Monomial product(VarsPtr vars, const std::vector<std::pair<Monomial, Exponent>>& factors);

// Parses a monomial from text: '*'-separated factors "name" or "name^e",
// "1" for the unit. As a convenience, a factor that is not a variable name
// but consists entirely of known single-character names is expanded
// letterwise ("bcg" = b*c*g).
Monomial parse_monomial(VarsPtr vars, std::string_view text);

// An ordered, 1-based list of pairwise distinct monomials over one
// VariableSet. The order is part of the identity of the object.
struct GeneratorList {
    VarsPtr vars;
    std::vector<Monomial> gens;

    int size() const { return static_cast<int>(gens.size()); }
    // 1-based access.
    const Monomial& at(int index) const;
};

// Factory that checks distinctness and variable-set consistency.
GeneratorList make_generator_list(VarsPtr vars, std::vector<Monomial> gens);
// Throws InputError("generators not distinct") when two entries coincide.
void require_distinct(const GeneratorList& gens);

} // namespace divrel
