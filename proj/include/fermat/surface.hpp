#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermat/curve.hpp"
#include "fermat/residue.hpp"

namespace fermat {

// G-invariant tensor pair: weights b and m-b cancel, so right.b = m - left.b
struct invariant_pair {
    basis_index left;
    basis_index right;

    friend auto operator<=>(const invariant_pair&, const invariant_pair&) = default;
};

// all pairs ((a,b),(a',m-b)) with both factors in Xi; count is C(m-1,3)
inline std::vector<invariant_pair> invariant_pairs(std::int64_t m) {
    if (m < 4) throw std::invalid_argument("invariant_pairs: degree must be at least 4");
    std::vector<invariant_pair> out;
    for (std::int64_t a = 1; a <= m - 2; ++a)
        for (std::int64_t b = a + 1; b <= m - 1; ++b) {
            if (m - b < 2) continue;  // right factor needs a' < m-b
            for (std::int64_t ap = 1; ap < m - b; ++ap)
                out.push_back({basis_index{a, b}, basis_index{ap, m - b}});
        }
    return out;
}

inline std::int64_t invariant_pair_count(std::int64_t m) {
    if (m < 4) throw std::invalid_argument("invariant_pair_count: degree must be at least 4");
    return (m - 1) * (m - 2) * (m - 3) / 6;
}

// triple in Y(m,d): both tensor factors of the pair ((a,b),(a',m-b)) die
// under Frobenius, which is the two bar inequalities below
struct y_triple {
    std::int64_t a = 0;
    std::int64_t a_prime = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const y_triple&, const y_triple&) = default;
};

namespace detail {

// table[x] = bar(d*x, m) for x in [0, m-1]
inline std::vector<std::int64_t> bar_multiples(std::int64_t m, std::int64_t d) {
    std::vector<std::int64_t> table(static_cast<std::size_t>(m));
    for (std::int64_t x = 0; x < m; ++x) table[static_cast<std::size_t>(x)] = bar(d * x, m);
    return table;
}

inline void require_unit(std::int64_t m, std::int64_t d, const char* who) {
    if (m < 4) throw std::invalid_argument(std::string(who) + ": degree must be at least 4");
    if (!is_unit(d, m))
        throw std::invalid_argument(std::string(who) + ": residue class must be a unit");
}

}  // namespace detail

// direct triple loop, no pruning; lexicographic in (a, a', b)
inline std::vector<y_triple> enumerate_y(std::int64_t m, std::int64_t d) {
    detail::require_unit(m, d, "enumerate_y");
    const auto db = detail::bar_multiples(m, bar(d, m));
    std::vector<y_triple> out;
    for (std::int64_t a = 1; a <= m - 1; ++a)
        for (std::int64_t ap = 1; ap <= m - 1; ++ap)
            for (std::int64_t b = a + 1; b <= m - 1 - ap; ++b) {
                // b ranges keep a < b and a' < m-b
                if (db[a] >= db[b] && db[ap] >= db[m - b]) out.push_back({a, ap, b});
            }
    return out;
}

inline std::int64_t y_count(std::int64_t m, std::int64_t d) {
    detail::require_unit(m, d, "y_count");
    const auto db = detail::bar_multiples(m, bar(d, m));
    std::int64_t count = 0;
    for (std::int64_t a = 1; a <= m - 1; ++a)
        for (std::int64_t ap = 1; ap <= m - 1; ++ap)
            for (std::int64_t b = a + 1; b <= m - 1 - ap; ++b)
                if (db[a] >= db[b] && db[ap] >= db[m - b]) ++count;
    return count;
}

inline bool y_nonempty(std::int64_t m, std::int64_t d) {
    detail::require_unit(m, d, "y_nonempty");
    const auto db = detail::bar_multiples(m, bar(d, m));
    for (std::int64_t a = 1; a <= m - 1; ++a)
        for (std::int64_t ap = 1; ap <= m - 1; ++ap)
            for (std::int64_t b = a + 1; b <= m - 1 - ap; ++b)
                if (db[a] >= db[b] && db[ap] >= db[m - b]) return true;
    return false;
}

// classification by residue class alone:
//   d = 1            -> 0
//   d = 2 or 2^{-1}  -> 1   (only odd m admits these as units)
//   otherwise        -> 2
// For d = 2 the deeper filtration level is indeed never reached: both factors
// dying would force bar(2a) >= bar(2b) and bar(2a') >= bar(2(m-b)) with
// a < b and a' < m-b, and doubling inside [1, m-1] for odd m only wraps once,
// which makes the four constraints jointly unsatisfiable (checked exhaustively
// by the brute-force route and its emptiness tests).
inline std::int64_t surface_a_closedform(std::int64_t m, std::int64_t d) {
    detail::require_unit(m, d, "surface_a_closedform");
    const std::int64_t r = bar(d, m);
    if (r == 1) return 0;
    if (r == 2) return 1;
    if (m % 2 == 1 && r == inv_mod(2, m)) return 1;
    return 2;
}

// independent route through Y(m,d) emptiness
inline std::int64_t surface_a_bruteforce(std::int64_t m, std::int64_t d) {
    detail::require_unit(m, d, "surface_a_bruteforce");
    if (bar(d, m) == 1) return 0;
    return y_nonempty(m, d) ? 2 : 1;
}

// third route: scan G-invariant tensor pairs against the actual Frobenius
// pattern; the score of a pair is how many of its two factors die, and the
// a-number is the best score (0 when Frobenius is bijective)
inline std::int64_t surface_a_tensor(const residue_context& ctx) {
    if (!ctx.has_prime())
        throw std::logic_error("surface_a_tensor: requires an attached characteristic");
    const std::int64_t m = ctx.m();
    const signed_monomial_map fm = frobenius_matrix(ctx);
    if (fm.is_bijective()) return 0;
    const auto& entries = fm.entries();
    auto dies = [&](std::int64_t a, std::int64_t b) {
        return !entries[xi_rank(basis_index{a, b}, m)].has_value();
    };
    std::int64_t best = 0;
    for (std::int64_t b = 2; b <= m - 2; ++b)
        for (std::int64_t a = 1; a < b; ++a) {
            const int left = dies(a, b) ? 1 : 0;
            for (std::int64_t ap = 1; ap < m - b; ++ap) {
                const int score = left + (dies(ap, m - b) ? 1 : 0);
                if (score > best) {
                    best = score;
                    if (best == 2) return 2;
                }
            }
        }
    return best;
}

inline bool cardinality_symmetry_check(std::int64_t m, std::int64_t d) {
    return y_count(m, d) == y_count(m, inv_mod(d, m));
}

struct hodge_pair {
    std::int64_t p_g = 0;
    std::int64_t h11 = 0;
};

// smooth degree-m hypersurface in P^3: p_g = C(m-1,3) and
// h11 = (m^3 - 4m^2 + 6m - 2) - 2 p_g
inline hodge_pair hodge_numbers(std::int64_t m) {
    if (m < 4) throw std::invalid_argument("hodge_numbers: degree must be at least 4");
    const std::int64_t p_g = (m - 1) * (m - 2) * (m - 3) / 6;
    const std::int64_t h11 = (m * m * m - 4 * m * m + 6 * m - 2) - 2 * p_g;
    return {p_g, h11};
}

enum class height_kind { one, infinite, undetermined };

inline std::string to_string(height_kind h) {
    switch (h) {
        case height_kind::one: return "One";
        case height_kind::infinite: return "Infinite";
        case height_kind::undetermined: return "Undetermined";
    }
    return "Undetermined";
}

// One iff d = 1; Infinite outside {1, 2, 2^{-1}}; the classification says
// nothing for d = 2 or 2^{-1}, so those stay Undetermined
inline height_kind height_class(std::int64_t m, std::int64_t d) {
    detail::require_unit(m, d, "height_class");
    const std::int64_t r = bar(d, m);
    if (r == 1) return height_kind::one;
    if (r == 2) return height_kind::undetermined;
    if (m % 2 == 1 && r == inv_mod(2, m)) return height_kind::undetermined;
    return height_kind::infinite;
}

struct surface_invariants {
    std::int64_t m = 0;
    std::optional<std::int64_t> p;
    std::int64_t d = 0;
    std::int64_t a_closed = 0;
    std::optional<std::int64_t> a_tensor;
    std::int64_t y_count = 0;
    std::int64_t genus_curve = 0;
    std::int64_t p_g = 0;
    std::int64_t h11 = 0;
    height_kind height = height_kind::undetermined;
};

// computes every route it can and refuses to return disagreeing ones
inline surface_invariants compute_surface_invariants(const residue_context& ctx) {
    surface_invariants inv;
    inv.m = ctx.m();
    inv.d = ctx.d();
    if (ctx.has_prime()) inv.p = ctx.p();
    inv.a_closed = surface_a_closedform(inv.m, inv.d);
    inv.y_count = y_count(inv.m, inv.d);
    const std::int64_t a_brute = inv.d == 1 ? 0 : (inv.y_count > 0 ? 2 : 1);
    if (a_brute != inv.a_closed)
        throw consistency_error("surface invariants: closed form and brute force disagree at m=" +
                                std::to_string(inv.m) + " d=" + std::to_string(inv.d));
    if (ctx.has_prime()) {
        inv.a_tensor = surface_a_tensor(ctx);
        if (*inv.a_tensor != inv.a_closed)
            throw consistency_error("surface invariants: tensor route disagrees at m=" +
                                    std::to_string(inv.m) + " p=" + std::to_string(ctx.p()));
    }
    inv.genus_curve = genus(inv.m);
    const hodge_pair hodge = hodge_numbers(inv.m);
    inv.p_g = hodge.p_g;
    inv.h11 = hodge.h11;
    inv.height = height_class(inv.m, inv.d);
    return inv;
}

}  // namespace fermat
