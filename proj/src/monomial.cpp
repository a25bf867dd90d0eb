#include "divrel/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace divrel {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw InputError("variable names must be nonempty");
        index_.emplace_back(names_[i], static_cast<int>(i));
    }
    std::sort(index_.begin(), index_.end());
    for (std::size_t i = 0; i + 1 < index_.size(); ++i)
        if (index_[i].first == index_[i + 1].first)
            throw InputError("duplicate variable name: " + index_[i].first);
}

std::optional<int> VariableSet::position(std::string_view name) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), name,
                               [](const auto& entry, std::string_view key) { return entry.first < key; });
    if (it == index_.end() || it->first != name)
        return std::nullopt;
    return it->second;
}

VarsPtr make_variables(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

Monomial Monomial::one(VarsPtr vars) {
    if (!vars)
        throw InputError("monomial requires a variable set");
    return Monomial(std::move(vars), {});
}

Monomial Monomial::from_terms(VarsPtr vars, std::vector<Term> terms) {
    if (!vars)
        throw InputError("monomial requires a variable set");
    for (const auto& [pos, exp] : terms) {
        if (pos < 0 || static_cast<std::size_t>(pos) >= vars->size())
            throw InputError("variable position out of range");
        if (exp < 0)
            throw InputError("negative exponent");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.second == 0; });
    return Monomial(std::move(vars), std::move(merged));
}

Exponent Monomial::exponent(int pos) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), pos,
                               [](const Term& t, int key) { return t.first < key; });
    if (it == terms_.end() || it->first != pos)
        return 0;
    return it->second;
}

Exponent Monomial::total_degree() const {
    Exponent d = 0;
    for (const auto& [pos, exp] : terms_)
        d += exp;
    return d;
}

bool Monomial::operator==(const Monomial& other) const {
    require_same_variables(*this, other);
    return terms_ == other.terms_;
}

bool Monomial::operator<(const Monomial& other) const {
    require_same_variables(*this, other);
    auto a = terms_.begin(), b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        // Positionwise comparison of dense exponent vectors; a missing term
        // means exponent 0 at the larger position.
        int pa = a == terms_.end() ? std::numeric_limits<int>::max() : a->first;
        int pb = b == other.terms_.end() ? std::numeric_limits<int>::max() : b->first;
        if (pa < pb)
            return false; // this has a positive exponent where other has 0
        if (pb < pa)
            return true;
        if (a->second != b->second)
            return a->second < b->second;
        ++a;
        ++b;
    }
    return false;
}

std::string Monomial::str() const {
    if (terms_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pos, exp] : terms_) {
        if (!first)
            out << '*';
        first = false;
        out << vars_->name(pos);
        if (exp != 1)
            out << '^' << exp.str();
    }
    return out.str();
}

void require_same_variables(const Monomial& a, const Monomial& b) {
    if (a.variables() == b.variables())
        return;
    if (a.variables() && b.variables() && *a.variables() == *b.variables())
        return;
    throw InputError("variable set mismatch");
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_variables(a, b);
    for (const auto& [pos, exp] : a.terms())
        if (b.exponent(pos) < exp)
            return false;
    return true;
}

bool is_squarefree(const Monomial& m) {
    for (const auto& [pos, exp] : m.terms())
        if (exp > 1)
            return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_variables(a, b);
    std::vector<Monomial::Term> terms;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first))
            terms.push_back(*ia++);
        else if (ia == a.terms().end() || ib->first < ia->first)
            terms.push_back(*ib++);
        else {
            terms.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return Monomial::from_terms(a.variables(), std::move(terms));
}

Monomial lcm(const std::vector<Monomial>& ms) {
    if (ms.empty())
        throw InputError("empty lcm");
    Monomial acc = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i)
        acc = lcm(acc, ms[i]);
    return acc;
}

Monomial product(VarsPtr vars, const std::vector<std::pair<Monomial, Exponent>>& factors) {
    std::vector<Monomial::Term> terms;
    for (const auto& [m, mult] : factors) {
        if (mult < 0)
            throw InputError("negative multiplicity");
        if (mult == 0)
            continue;
        if (!(m.variables() == vars) && !(vars && m.variables() && *vars == *m.variables()))
            throw InputError("variable set mismatch");
        for (const auto& [pos, exp] : m.terms())
            terms.emplace_back(pos, exp * mult);
    }
    return Monomial::from_terms(std::move(vars), std::move(terms));
}

namespace {

Exponent parse_exponent(std::string_view text) {
    if (text.empty())
        throw InputError("empty exponent");
    for (char c : text)
        if (c < '0' || c > '9')
            throw InputError("invalid exponent: " + std::string(text));
    return Exponent(std::string(text));
}

} // namespace

Monomial parse_monomial(VarsPtr vars, std::string_view text) {
    if (text == "1")
        return Monomial::one(vars);
    std::vector<Monomial::Term> terms;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('*', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view factor = text.substr(start, end - start);
        if (factor.empty())
            throw InputError("empty factor in monomial: " + std::string(text));
        std::string_view name = factor;
        Exponent exp = 1;
        if (auto caret = factor.find('^'); caret != std::string_view::npos) {
            name = factor.substr(0, caret);
            exp = parse_exponent(factor.substr(caret + 1));
        }
        if (auto pos = vars->position(name)) {
            terms.emplace_back(*pos, exp);
        } else if (name.size() > 1 && factor.find('^') == std::string_view::npos) {
            // Letterwise expansion for single-character variable alphabets.
            for (char c : name) {
                auto p = vars->position(std::string_view(&c, 1));
                if (!p)
                    throw InputError("unknown variable in monomial: " + std::string(factor));
                terms.emplace_back(*p, 1);
            }
        } else {
            throw InputError("unknown variable: " + std::string(name));
        }
        if (end == text.size())
            break;
        start = end + 1;
    }
    return Monomial::from_terms(std::move(vars), std::move(terms));
}

const Monomial& GeneratorList::at(int index) const {
    if (index < 1 || index > size())
        throw InputError("generator index out of range");
    return gens[static_cast<std::size_t>(index - 1)];
}

GeneratorList make_generator_list(VarsPtr vars, std::vector<Monomial> gens) {
    GeneratorList list{std::move(vars), std::move(gens)};
    for (const auto& g : list.gens)
        if (!(g.variables() == list.vars) && !(*g.variables() == *list.vars))
            throw InputError("variable set mismatch");
    require_distinct(list);
    return list;
}

void require_distinct(const GeneratorList& list) {
    for (std::size_t i = 0; i < list.gens.size(); ++i)
        for (std::size_t j = i + 1; j < list.gens.size(); ++j)
            if (list.gens[i] == list.gens[j])
                throw InputError("generators not distinct");
}

} // namespace divrel
