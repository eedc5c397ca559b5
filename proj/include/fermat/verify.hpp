#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermat/curve.hpp"
#include "fermat/product.hpp"
#include "fermat/residue.hpp"
#include "fermat/surface.hpp"

namespace fermat {

struct check_result {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;

    bool passed() const { return failures == 0; }
};

// closed form vs brute force on every unit class, then vs the tensor route
// on every coprime prime below p_max
inline check_result check_route_agreement(std::int64_t m_max, std::int64_t p_max = 200) {
    check_result r{"route-agreement"};
    const auto primes = primes_below(p_max);
    for (std::int64_t m = 4; m <= m_max; ++m) {
        for (std::int64_t d = 1; d < m; ++d) {
            if (gcd64(d, m) != 1) continue;
            ++r.cases;
            if (surface_a_closedform(m, d) != surface_a_bruteforce(m, d)) ++r.failures;
        }
        for (std::int64_t p : primes) {
            if (gcd64(m, p) != 1) continue;
            ++r.cases;
            const residue_context ctx = make_context(m, p);
            const std::int64_t a = surface_a_closedform(m, ctx.d());
            if (surface_a_tensor(ctx) != a || surface_a_bruteforce(m, ctx.d()) != a) ++r.failures;
        }
    }
    return r;
}

// Frobenius pattern is total iff d = 1 and empty iff d = m-1, first from
// residue classes alone, then again with genuine primes carrying signs
inline check_result check_isoorzero(std::int64_t m_max, std::int64_t p_max = 200) {
    check_result r{"isoorzero"};
    const auto primes = primes_below(p_max);
    for (std::int64_t m = 4; m <= m_max; ++m) {
        for (std::int64_t d = 1; d < m; ++d) {
            if (gcd64(d, m) != 1) continue;
            ++r.cases;
            const signed_monomial_map fm = frobenius_matrix(make_residue_context(m, d));
            if (fm.is_bijective() != (d == 1) || fm.is_zero_map() != (d == m - 1)) ++r.failures;
        }
        for (std::int64_t p : primes) {
            if (gcd64(m, p) != 1) continue;
            ++r.cases;
            const residue_context ctx = make_context(m, p);
            const signed_monomial_map fm = frobenius_matrix(ctx);
            if (fm.is_bijective() != (ctx.d() == 1) || fm.is_zero_map() != (ctx.d() == m - 1))
                ++r.failures;
        }
    }
    return r;
}

// |Y(m,d)| = |Y(m, d^{-1})| for every unit class
inline check_result check_y_symmetry(std::int64_t m_max) {
    check_result r{"y-symmetry"};
    for (std::int64_t m = 4; m <= m_max; ++m)
        for (std::int64_t d = 1; d < m; ++d) {
            if (gcd64(d, m) != 1) continue;
            ++r.cases;
            if (!cardinality_symmetry_check(m, d)) ++r.failures;
        }
    return r;
}

// dimension bookkeeping: |Xi| = genus and |pairs| = C(m-1,3) = p_g
inline check_result check_pair_count(std::int64_t m_max) {
    check_result r{"pair-count"};
    for (std::int64_t m = 4; m <= m_max; ++m) {
        ++r.cases;
        const auto pairs = invariant_pairs(m);
        const hodge_pair hodge = hodge_numbers(m);
        const bool ok =
            static_cast<std::int64_t>(xi_basis(m).size()) == genus(m) &&
            static_cast<std::int64_t>(pairs.size()) == invariant_pair_count(m) &&
            static_cast<std::int64_t>(pairs.size()) == hodge.p_g;
        if (!ok) ++r.failures;
    }
    return r;
}

// product of identical curve factors has a-number 2 unless d = 1, plus
// identity and zero matrices as generic sanity inputs
inline check_result check_product(std::int64_t m_max, std::int64_t p_max = 100) {
    check_result r{"product"};
    const auto primes = primes_below(p_max);
    for (std::int64_t m = 4; m <= m_max; ++m)
        for (std::int64_t p : primes) {
            if (gcd64(m, p) != 1) continue;
            ++r.cases;
            const residue_context ctx = make_context(m, p);
            const auto factor = curve_frobenius_data::fermat(ctx);
            const std::int64_t expected = ctx.d() == 1 ? 0 : 2;
            if (product_a_number(factor, factor) != expected) ++r.failures;
        }
    for (std::int64_t p : {2, 3, 5, 7}) {
        fp_matrix id(p, 4), zero(p, 4);
        for (std::size_t i = 0; i < 4; ++i) id.set(i, i, 1);
        const auto lo = curve_frobenius_data::generic(id);
        const auto lz = curve_frobenius_data::generic(zero);
        ++r.cases;
        if (product_a_number(lo, lo) != 0 || product_a_number(lo, lz) != 1 ||
            product_a_number(lz, lo) != 1 || product_a_number(lz, lz) != 2)
            ++r.failures;
    }
    return r;
}

inline std::vector<std::string> verify_check_names() {
    return {"route-agreement", "isoorzero", "y-symmetry", "pair-count", "product"};
}

inline std::vector<check_result> run_verify(std::int64_t m_max,
                                            const std::vector<std::string>& names = {}) {
    if (m_max < 4) throw std::invalid_argument("run_verify: m-max must be at least 4");
    std::vector<std::string> wanted = names.empty() ? verify_check_names() : names;
    std::vector<check_result> out;
    for (const std::string& name : wanted) {
        if (name == "route-agreement")
            out.push_back(check_route_agreement(m_max));
        else if (name == "isoorzero")
            out.push_back(check_isoorzero(m_max));
        else if (name == "y-symmetry")
            out.push_back(check_y_symmetry(m_max));
        else if (name == "pair-count")
            out.push_back(check_pair_count(m_max));
        else if (name == "product")
            out.push_back(check_product(m_max));
        else
            throw std::invalid_argument("run_verify: unknown check '" + name + "'");
    }
    return out;
}

}  // namespace fermat
