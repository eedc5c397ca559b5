#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermat/residue.hpp"

namespace fermat {

// index (a,b) of a cohomology basis element of the degree-m plane curve;
// the valid set Xi is { (a,b) : 1 <= a < b <= m-1 }
struct basis_index {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const basis_index&, const basis_index&) = default;
};

inline bool in_xi(basis_index idx, std::int64_t m) {
    return 1 <= idx.a && idx.a < idx.b && idx.b <= m - 1;
}

// genus of the smooth plane curve of degree m
inline std::int64_t genus(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("genus: degree must be positive");
    return (m - 1) * (m - 2) / 2;
}

// Xi in lexicographic order; size equals the genus
inline std::vector<basis_index> xi_basis(std::int64_t m) {
    std::vector<basis_index> out;
    out.reserve(static_cast<std::size_t>(genus(m)));
    for (std::int64_t a = 1; a <= m - 2; ++a)
        for (std::int64_t b = a + 1; b <= m - 1; ++b) out.push_back({a, b});
    return out;
}

// position of idx in xi_basis(m)
inline std::size_t xi_rank(basis_index idx, std::int64_t m) {
    if (!in_xi(idx, m)) throw std::invalid_argument("xi_rank: index outside the basis set");
    std::int64_t before_a = (idx.a - 1) * (m - 1) - idx.a * (idx.a - 1) / 2;
    return static_cast<std::size_t>(before_a + (idx.b - idx.a - 1));
}

struct frobenius_entry {
    int sign = 1;  // +1 or -1
    basis_index image;
};

// Frobenius on the curve's H^1(O) sends each basis element to a signed basis
// element or to zero, so the whole map is stored as one entry per index
class signed_monomial_map {
public:
    signed_monomial_map(std::int64_t m, bool signs_valid,
                        std::vector<std::optional<frobenius_entry>> entries)
        : m_(m), signs_valid_(signs_valid), entries_(std::move(entries)) {
        const std::size_t g = static_cast<std::size_t>(genus(m_));
        if (entries_.size() != g)
            throw std::invalid_argument("signed_monomial_map: entry count must equal the genus");
        std::vector<std::size_t> hit;
        for (const auto& e : entries_) {
            if (!e) continue;
            if (!in_xi(e->image, m_))
                throw std::invalid_argument("signed_monomial_map: image outside the basis set");
            if (e->sign != 1 && e->sign != -1)
                throw std::invalid_argument("signed_monomial_map: sign must be +1 or -1");
            hit.push_back(xi_rank(e->image, m_));
        }
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end())
            throw std::invalid_argument("signed_monomial_map: images must be distinct");
    }

    std::int64_t m() const { return m_; }
    bool signs_valid() const { return signs_valid_; }

    const std::optional<frobenius_entry>& image(basis_index idx) const {
        if (!in_xi(idx, m_))
            throw std::invalid_argument("signed_monomial_map: index outside the basis set");
        return entries_[xi_rank(idx, m_)];
    }

    const std::vector<std::optional<frobenius_entry>>& entries() const { return entries_; }

    bool is_bijective() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const auto& e) { return e.has_value(); });
    }

    bool is_zero_map() const {
        return std::none_of(entries_.begin(), entries_.end(),
                            [](const auto& e) { return e.has_value(); });
    }

    std::size_t image_count() const {
        return static_cast<std::size_t>(std::count_if(
            entries_.begin(), entries_.end(), [](const auto& e) { return e.has_value(); }));
    }

private:
    std::int64_t m_;
    bool signs_valid_;
    std::vector<std::optional<frobenius_entry>> entries_;
};

// image of one basis element under Frobenius: with p = d + n*m the element
// (a,b) maps to (-1)^{n b} (bar(ad), bar(bd)) and dies exactly when
// bar(bd) <= bar(ad).  Signs need the actual prime, so a residue-only
// context is refused here.
inline std::optional<frobenius_entry> frobenius_image(const residue_context& ctx,
                                                      basis_index idx) {
    if (!ctx.has_prime())
        throw std::logic_error("frobenius_image: signs require an attached characteristic");
    if (!in_xi(idx, ctx.m()))
        throw std::invalid_argument("frobenius_image: index outside the basis set");
    const std::int64_t m = ctx.m(), d = ctx.d();
    const std::int64_t ia = bar(idx.a * d, m);
    const std::int64_t ib = bar(idx.b * d, m);
    if (ib <= ia) return std::nullopt;
    // (-1)^{n b}; in characteristic 2 the sign collapses to +1
    int sign = 1;
    if (ctx.p() != 2 && (ctx.n() % 2 != 0) && (idx.b % 2 != 0)) sign = -1;
    return frobenius_entry{sign, basis_index{ia, ib}};
}

// full Frobenius matrix in the monomial basis; with only a residue class the
// support pattern is still well defined and all signs are reported as +1 with
// signs_valid() == false
inline signed_monomial_map frobenius_matrix(const residue_context& ctx) {
    const std::int64_t m = ctx.m(), d = ctx.d();
    std::vector<std::optional<frobenius_entry>> entries;
    entries.reserve(static_cast<std::size_t>(genus(m)));
    if (ctx.has_prime()) {
        for (basis_index idx : xi_basis(m)) entries.push_back(frobenius_image(ctx, idx));
        return signed_monomial_map(m, true, std::move(entries));
    }
    for (basis_index idx : xi_basis(m)) {
        const std::int64_t ia = bar(idx.a * d, m);
        const std::int64_t ib = bar(idx.b * d, m);
        if (ib <= ia)
            entries.push_back(std::nullopt);
        else
            entries.push_back(frobenius_entry{1, basis_index{ia, ib}});
    }
    return signed_monomial_map(m, false, std::move(entries));
}

// ordinary means Frobenius is bijective on H^1(O); decided from the computed
// pattern, not from the residue class, so the d = 1 equivalence stays testable
inline bool curve_is_ordinary(const residue_context& ctx) {
    return frobenius_matrix(ctx).is_bijective();
}

inline std::int64_t curve_a_number(const residue_context& ctx) {
    return curve_is_ordinary(ctx) ? 0 : 1;
}

}  // namespace fermat
