#include "divrel/homology.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace divrel {

Field Field::gf(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31))
        throw InputError("field characteristic must be a prime below 2^31");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw InputError("field characteristic must be prime: " + std::to_string(p));
    return Field{false, p};
}

std::string Field::name() const {
    return rational ? "rational" : "gf(" + std::to_string(prime) + ")";
}

std::size_t LcmLattice::index_of(const Monomial& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || !(*it == m))
        throw InputError("monomial not in lattice: " + m.str());
    return static_cast<std::size_t>(it - elements.begin());
}

const Monomial& LcmLattice::top() const {
    if (elements.empty())
        throw InputError("empty lattice");
    // The element order is a linear extension of divisibility, so the join
    // of all atoms sits at the end.
    return elements.back();
}

namespace {

void require_minimal(const GeneratorList& gens) {
    require_distinct(gens);
    for (int i = 1; i <= gens.size(); ++i) {
        if (gens.at(i).is_one())
            throw InputError("unit generator");
        for (int j = 1; j <= gens.size(); ++j)
            if (i != j && divides(gens.at(i), gens.at(j)))
                throw InputError("non-minimal generators");
    }
}

} // namespace

LcmLattice lcm_lattice(const GeneratorList& gens, int max_gens) {
    require_minimal(gens);
    if (gens.size() > max_gens)
        throw CapError("lattice limited to " + std::to_string(max_gens) + " generators");

    // Join-closure of the atoms: fold each generator into the set of lcms
    // seen so far.
    std::vector<Monomial> elements;
    for (const auto& g : gens.gens) {
        std::vector<Monomial> fresh{g};
        for (const auto& m : elements)
            fresh.push_back(lcm(m, g));
        for (auto& m : fresh) {
            auto it = std::lower_bound(elements.begin(), elements.end(), m);
            if (it == elements.end() || !(*it == m))
                elements.insert(it, std::move(m));
        }
    }
    return LcmLattice{gens, std::move(elements)};
}

namespace {

// ---- exact rank computation ------------------------------------------------

struct Int64Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Int64Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Int64Overflow{};
    return r;
}

// Fraction-free (Bareiss) elimination; rank over the rationals. Divisions
// are exact on integer input.
template <typename Int>
std::size_t rank_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int num;
                if constexpr (std::is_same_v<Int, std::int64_t>)
                    num = checked_sub(checked_mul(m[i][j], m[rank][c]),
                                      checked_mul(m[i][c], m[rank][j]));
                else
                    num = m[i][j] * m[rank][c] - m[i][c] * m[rank][j];
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const std::vector<std::vector<std::int64_t>>& m) {
    try {
        return rank_bareiss<std::int64_t>(m);
    } catch (const Int64Overflow&) {
        std::vector<std::vector<Exponent>> wide(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            wide[i].assign(m[i].begin(), m[i].end());
        return rank_bareiss<Exponent>(std::move(wide));
    }
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::uint64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    auto normalize = [&](std::int64_t v) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    };
    auto powmod = [&](std::uint64_t base, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1)
                acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    };
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = normalize(m[i][j]);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rank], a[pivot]);
        std::uint64_t inv = powmod(a[rank][c], p - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            std::uint64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& m, const Field& field) {
    if (m.empty() || m[0].empty())
        return 0;
    return field.rational ? rank_rational(m) : rank_mod_p(m, field.prime);
}

// ---- slice homology ---------------------------------------------------------

using Mask = std::uint32_t;

// Faces of a slice as bitmasks over the slice's local vertex order,
// grouped by dimension (group k holds the (k-1)-dimensional faces, so
// group 0 is the empty face).
struct MaskComplex {
    std::vector<std::vector<Mask>> by_size;
};

// Reduced homology dimensions, index i holding dim of homology in degree
// i-1 (so index 0 is degree -1, aligned with Betti indices).
std::vector<std::int64_t> mask_complex_homology(const MaskComplex& complex, const Field& field) {
    const std::size_t levels = complex.by_size.size();
    if (levels == 0)
        return {};

    std::vector<std::size_t> boundary_rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        const auto& rows = complex.by_size[k - 1];
        const auto& cols = complex.by_size[k];
        if (rows.empty() || cols.empty())
            continue;
        std::unordered_map<Mask, std::size_t> row_index;
        row_index.reserve(rows.size() * 2);
        for (std::size_t i = 0; i < rows.size(); ++i)
            row_index.emplace(rows[i], i);
        std::vector<std::vector<std::int64_t>> m(rows.size(),
                                                 std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Mask face = cols[j];
            int sign = 1;
            for (Mask bits = face; bits;) {
                Mask low = bits & (~bits + 1);
                auto it = row_index.find(face ^ low);
                if (it == row_index.end())
                    throw Error("boundary face missing from complex");
                m[it->second][j] = sign;
                sign = -sign;
                bits ^= low;
            }
        }
        boundary_rank[k] = matrix_rank(m, field);
    }

    std::vector<std::int64_t> h(levels, 0);
    for (std::size_t k = 0; k < levels; ++k)
        h[k] = static_cast<std::int64_t>(complex.by_size[k].size()) -
               static_cast<std::int64_t>(boundary_rank[k]) -
               static_cast<std::int64_t>(boundary_rank[k + 1]);
    return h;
}

// A vertex contained, together with every face, in a larger face makes the
// complex a cone, hence contractible.
bool has_cone_vertex(const MaskComplex& complex, int vertex_count) {
    std::unordered_set<Mask> faces;
    std::size_t count = 0;
    for (const auto& level : complex.by_size)
        count += level.size();
    faces.reserve(count * 2);
    for (const auto& level : complex.by_size)
        faces.insert(level.begin(), level.end());
    for (int v = 0; v < vertex_count; ++v) {
        Mask bit = Mask{1} << v;
        bool cone = true;
        for (const auto& level : complex.by_size) {
            for (Mask f : level)
                if (!(f & bit) && !faces.count(f | bit)) {
                    cone = false;
                    break;
                }
            if (!cone)
                break;
        }
        if (cone)
            return true;
    }
    return false;
}

std::vector<std::int64_t> homology_with_shortcuts(const MaskComplex& complex, int vertex_count,
                                                  const Field& field) {
    std::size_t face_count = 0;
    for (const auto& level : complex.by_size)
        face_count += level.size();
    if (face_count == 0)
        return {};

    // Boundary of the full simplex: one sphere dimension survives.
    if (vertex_count >= 1 &&
        face_count == (std::size_t{1} << vertex_count) - 1 &&
        complex.by_size.size() == static_cast<std::size_t>(vertex_count)) {
        std::vector<std::int64_t> h(static_cast<std::size_t>(vertex_count), 0);
        h.back() = 1; // degree vertex_count - 2
        return h;
    }
    if (has_cone_vertex(complex, vertex_count))
        return std::vector<std::int64_t>(complex.by_size.size(), 0);
    return mask_complex_homology(complex, field);
}

// Dense exponent rows for fast divisibility tests inside slices.
struct DenseIdeal {
    std::size_t nvars = 0;
    std::vector<std::vector<std::int64_t>> rows;
};

DenseIdeal densify(const GeneratorList& gens) {
    DenseIdeal out;
    out.nvars = gens.vars->size();
    out.rows.reserve(static_cast<std::size_t>(gens.size()));
    for (const auto& g : gens.gens) {
        std::vector<std::int64_t> row(out.nvars, 0);
        for (const auto& [pos, exp] : g.terms()) {
            if (exp > std::numeric_limits<std::int64_t>::max())
                throw CapError("exponent too large for the homology engine");
            row[static_cast<std::size_t>(pos)] = exp.convert_to<std::int64_t>();
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<std::int64_t> densify_one(const DenseIdeal& ideal, const Monomial& m) {
    std::vector<std::int64_t> row(ideal.nvars, 0);
    for (const auto& [pos, exp] : m.terms()) {
        if (exp > std::numeric_limits<std::int64_t>::max())
            throw CapError("exponent too large for the homology engine");
        row[static_cast<std::size_t>(pos)] = exp.convert_to<std::int64_t>();
    }
    return row;
}

bool dense_divides(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

// Builds the strictly-below slice at m as masks over the local vertex
// order, grouped by face size.
MaskComplex build_slice_masks(const DenseIdeal& ideal, const std::vector<std::int64_t>& target,
                              std::vector<int>& vertices_out, std::size_t max_faces) {
    vertices_out.clear();
    for (std::size_t i = 0; i < ideal.rows.size(); ++i)
        if (dense_divides(ideal.rows[i], target))
            vertices_out.push_back(static_cast<int>(i + 1));

    const std::size_t s = vertices_out.size();
    if (s >= 31)
        throw CapError("slice vertex count exceeds engine limit");
    MaskComplex complex;
    if (s == 0)
        return complex; // no divisors: the slice has no faces at all
    const std::size_t total = std::size_t{1} << s;
    if (total > max_faces)
        throw CapError("face cap exceeded");

    // Incremental subset lcms via the lowest set bit.
    std::vector<std::vector<std::int64_t>> subset_lcm(total);
    subset_lcm[0].assign(ideal.nvars, 0);
    complex.by_size.resize(s + 1);
    for (Mask mask = 0; mask < total; ++mask) {
        if (mask) {
            Mask low = mask & (~mask + 1);
            int bit = std::countr_zero(low);
            const auto& rest = subset_lcm[mask ^ low];
            const auto& gen =
                ideal.rows[static_cast<std::size_t>(vertices_out[static_cast<std::size_t>(bit)] - 1)];
            auto& cur = subset_lcm[mask];
            cur.resize(ideal.nvars);
            for (std::size_t v = 0; v < ideal.nvars; ++v)
                cur[v] = std::max(rest[v], gen[v]);
        }
        const auto& cur = subset_lcm[mask];
        if (cur == target)
            continue; // equal to m, excluded from the strictly-below slice
        if (dense_divides(cur, target))
            complex.by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    while (!complex.by_size.empty() && complex.by_size.back().empty())
        complex.by_size.pop_back();
    return complex;
}

} // namespace

SimplicialComplexSlice below_slice(const GeneratorList& gens, const Monomial& m) {
    DenseIdeal dense = densify(gens);
    std::vector<std::int64_t> target = densify_one(dense, m);
    std::vector<int> vertices;
    // The subset-lcm workspace is linear in the face budget; keep the
    // diagnostic entry point well inside memory.
    MaskComplex complex = build_slice_masks(dense, target, vertices,
                                            std::size_t{1} << 18);
    SimplicialComplexSlice slice;
    slice.vertices = vertices;
    for (const auto& level : complex.by_size)
        for (Mask f : level) {
            IndexSet face;
            for (std::size_t b = 0; b < vertices.size(); ++b)
                if (f & (Mask{1} << b))
                    face.push_back(vertices[b]);
            slice.faces.push_back(std::move(face));
        }
    return slice;
}

std::int64_t reduced_homology_rank(const SimplicialComplexSlice& slice, int i,
                                   const Field& field) {
    if (i < -1)
        return 0;
    // Rebuild the mask complex over the slice's vertex order.
    std::unordered_map<int, int> bit_of;
    for (std::size_t b = 0; b < slice.vertices.size(); ++b)
        bit_of[slice.vertices[b]] = static_cast<int>(b);
    MaskComplex complex;
    complex.by_size.resize(slice.vertices.size() + 1);
    for (const auto& face : slice.faces) {
        Mask mask = 0;
        for (int v : face) {
            auto it = bit_of.find(v);
            if (it == bit_of.end())
                throw InputError("face vertex outside the slice vertex set");
            mask |= Mask{1} << it->second;
        }
        complex.by_size[face.size()].push_back(mask);
    }
    for (auto& level : complex.by_size) {
        std::sort(level.begin(), level.end());
        if (std::adjacent_find(level.begin(), level.end()) != level.end())
            throw InputError("duplicate face in slice");
    }
    while (!complex.by_size.empty() && complex.by_size.back().empty())
        complex.by_size.pop_back();
    std::vector<std::int64_t> h = mask_complex_homology(complex, field);
    std::size_t idx = static_cast<std::size_t>(i + 1);
    return idx < h.size() ? h[idx] : 0;
}

BettiTable betti(const GeneratorList& gens, const BettiOptions& options) {
    LcmLattice lattice = lcm_lattice(gens, options.max_gens);
    DenseIdeal dense = densify(gens);

    const std::size_t n = lattice.elements.size();
    std::vector<std::vector<std::int64_t>> per_degree(n);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        try {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= n)
                    return;
                try {
                    std::vector<std::int64_t> target =
                        densify_one(dense, lattice.elements[idx]);
                    std::vector<int> vertices;
                    MaskComplex complex =
                        build_slice_masks(dense, target, vertices, options.max_faces);
                    per_degree[idx] = homology_with_shortcuts(
                        complex, static_cast<int>(vertices.size()), options.field);
                } catch (const CapError& e) {
                    throw CapError(std::string(e.what()) + " at multidegree " +
                                   lattice.elements[idx].str());
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    BettiTable table;
    table.field = options.field;
    for (std::size_t idx = 0; idx < n; ++idx) {
        const auto& h = per_degree[idx];
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] == 0)
                continue;
            if (table.graded.size() <= i) {
                table.graded.resize(i + 1);
                table.total.resize(i + 1, 0);
            }
            table.graded[i][lattice.elements[idx]] += h[i];
            table.total[i] += h[i];
        }
    }
    while (!table.total.empty() && table.total.back() == 0) {
        table.total.pop_back();
        table.graded.pop_back();
    }
    return table;
}

GeneratorList minimalize_generators(VarsPtr vars, std::vector<Monomial> candidates) {
    std::vector<Monomial> kept;
    for (const auto& m : candidates) {
        bool dominated = false;
        for (const auto& other : candidates)
            if (!(other == m) && divides(other, m)) {
                dominated = true;
                break;
            }
        if (dominated)
            continue;
        if (std::find(kept.begin(), kept.end(), m) == kept.end())
            kept.push_back(m);
    }
    return make_generator_list(std::move(vars), std::move(kept));
}

GeneratorList power_ideal(const GeneratorList& gens, int r) {
    if (r < 1)
        throw InputError("power must be positive");
    std::vector<Monomial> products;
    for (const auto& tuple : exponent_tuples(gens.size(), r)) {
        std::vector<std::pair<Monomial, Exponent>> factors;
        for (int i = 0; i < gens.size(); ++i)
            if (tuple[static_cast<std::size_t>(i)] > 0)
                factors.emplace_back(gens.at(i + 1), tuple[static_cast<std::size_t>(i)]);
        products.push_back(product(gens.vars, factors));
    }
    return minimalize_generators(gens.vars, std::move(products));
}

BettiTable betti_power(const GeneratorList& gens, int r, const BettiOptions& options) {
    return betti(power_ideal(gens, r), options);
}

BettiTable betti_power(const ExtremalIdeal& ideal, int r, const BettiOptions& options) {
    return betti_power(generator_list(ideal), r, options);
}

Exponent binomial(const Exponent& n, const Exponent& k) {
    if (k < 0 || k > n)
        return 0;
    Exponent num = 1, den = 1;
    Exponent kk = k;
    if (kk > n - kk)
        kk = n - kk;
    for (Exponent i = 0; i < kk; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

std::vector<Exponent> taylor_binomial_bounds(int q, int r) {
    if (q < 1 || r < 1)
        throw InputError("q and r must be positive");
    Exponent g = binomial(Exponent(q) + r - 1, Exponent(r));
    if (g > 100000)
        throw CapError("Taylor bound sequence too long");
    const std::int64_t glen = g.convert_to<std::int64_t>();
    std::vector<Exponent> bounds;
    bounds.reserve(static_cast<std::size_t>(glen));
    for (std::int64_t i = 0; i < glen; ++i)
        bounds.push_back(binomial(g, Exponent(i + 1)));
    return bounds;
}

} // namespace divrel
