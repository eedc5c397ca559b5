#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "fermat/curve.hpp"
#include "fermat/residue.hpp"

namespace fermat {

// dense square matrix over F_p, exact arithmetic throughout
class fp_matrix {
public:
    fp_matrix(std::int64_t p, std::size_t n)
        : p_(p), n_(n), cells_(n * n, 0) {
        if (!is_prime(p)) throw std::invalid_argument("fp_matrix: characteristic must be prime");
        if (n == 0) throw std::invalid_argument("fp_matrix: size must be positive");
    }

    static fp_matrix from_rows(std::int64_t p,
                               const std::vector<std::vector<std::int64_t>>& rows) {
        fp_matrix out(p, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw std::invalid_argument("fp_matrix: matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) out.set(i, j, rows[i][j]);
        }
        return out;
    }

    std::int64_t p() const { return p_; }
    std::size_t size() const { return n_; }

    std::int64_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, std::int64_t v) { cells_[i * n_ + j] = bar(v, p_); }

    // row echelon with exact modular inverses
    std::size_t rank() const {
        std::vector<std::int64_t> w = cells_;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
            std::size_t pivot = rank;
            while (pivot < n_ && w[pivot * n_ + col] == 0) ++pivot;
            if (pivot == n_) continue;
            if (pivot != rank)
                for (std::size_t j = 0; j < n_; ++j)
                    std::swap(w[pivot * n_ + j], w[rank * n_ + j]);
            const std::int64_t inv = inv_mod(w[rank * n_ + col], p_);
            for (std::size_t j = col; j < n_; ++j)
                w[rank * n_ + j] = bar(w[rank * n_ + j] * inv, p_);
            for (std::size_t i = 0; i < n_; ++i) {
                if (i == rank) continue;
                const std::int64_t f = w[i * n_ + col];
                if (f == 0) continue;
                for (std::size_t j = col; j < n_; ++j)
                    w[i * n_ + j] = bar(w[i * n_ + j] - f * w[rank * n_ + j], p_);
            }
            ++rank;
        }
        return rank;
    }

    bool invertible() const { return rank() == n_; }

private:
    std::int64_t p_;
    std::size_t n_;
    std::vector<std::int64_t> cells_;
};

// Frobenius data of one curve factor: the explicit monomial action for the
// degree-m plane curves, or a plain matrix over F_p for anything else.  A
// p-linear map with matrix over the prime field is injective exactly when
// the matrix is invertible, since p-th powers fix F_p.
class curve_frobenius_data {
public:
    static curve_frobenius_data fermat(const residue_context& ctx) {
        if (!ctx.has_prime())
            throw std::logic_error("curve_frobenius_data: curve factor requires a characteristic");
        return curve_frobenius_data(frobenius_matrix(ctx), ctx.p(),
                                    static_cast<std::size_t>(fermat::genus(ctx.m())));
    }

    static curve_frobenius_data generic(fp_matrix mat) {
        const std::int64_t p = mat.p();
        const std::size_t g = mat.size();
        return curve_frobenius_data(std::move(mat), p, g);
    }

    std::int64_t p() const { return p_; }
    std::size_t genus() const { return genus_; }

    bool ordinary() const {
        if (const auto* fm = std::get_if<signed_monomial_map>(&data_)) return fm->is_bijective();
        return std::get<fp_matrix>(data_).invertible();
    }

private:
    curve_frobenius_data(std::variant<signed_monomial_map, fp_matrix> data, std::int64_t p,
                         std::size_t g)
        : data_(std::move(data)), p_(p), genus_(g) {}

    std::variant<signed_monomial_map, fp_matrix> data_;
    std::int64_t p_;
    std::size_t genus_;
};

inline bool is_ordinary(const curve_frobenius_data& data) { return data.ordinary(); }

// a-number of a product of two curves is the number of non-ordinary factors
inline std::int64_t product_a_number(const curve_frobenius_data& left,
                                     const curve_frobenius_data& right) {
    if (left.p() != right.p())
        throw std::invalid_argument("product_a_number: factors live in different characteristics");
    return (is_ordinary(left) ? 0 : 1) + (is_ordinary(right) ? 0 : 1);
}

}  // namespace fermat
