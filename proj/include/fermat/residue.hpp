#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

// all moduli and characteristics live comfortably inside int64
inline constexpr std::int64_t max_modulus = std::int64_t{1} << 20;
inline constexpr std::int64_t max_characteristic = std::int64_t{1} << 31;

// thrown when two independently computed values disagree
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// canonical representative of ell mod m in [0, m)
inline std::int64_t bar(std::int64_t ell, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("bar: modulus must be positive");
    std::int64_t r = ell % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline bool is_unit(std::int64_t d, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("is_unit: modulus must be positive");
    return gcd64(bar(d, m), m) == 1;
}

// inverse of d mod m via extended Euclid, result in [1, m-1]
inline std::int64_t inv_mod(std::int64_t d, std::int64_t m) {
    if (m < 2) throw std::invalid_argument("inv_mod: modulus must be at least 2");
    std::int64_t a = bar(d, m);
    if (gcd64(a, m) != 1)
        throw std::invalid_argument("inv_mod: " + std::to_string(d) + " is not a unit mod " +
                                    std::to_string(m));
    std::int64_t r0 = m, r1 = a;
    std::int64_t s0 = 0, s1 = 1;  // s tracks the coefficient of a
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return bar(s0, m);
}

// trial division; fine for the >= 2^31 cap since callers stay far below it
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

inline std::vector<std::int64_t> primes_below(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n <= 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n), false);
    for (std::int64_t i = 2; i < n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j < n; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

// degree m and residue class d = p mod m; p itself is optional so that
// results depending only on d can be computed without naming a prime
class residue_context {
public:
    std::int64_t m() const { return m_; }
    std::int64_t d() const { return d_; }
    bool has_prime() const { return p_.has_value(); }

    std::int64_t p() const {
        if (!p_) throw std::logic_error("residue_context: no characteristic attached");
        return *p_;
    }

    // p = d + n*m with 1 <= d <= m-1
    std::int64_t n() const { return (p() - d_) / m_; }

private:
    residue_context(std::int64_t m, std::int64_t d, std::optional<std::int64_t> p)
        : m_(m), d_(d), p_(p) {}

    std::int64_t m_;
    std::int64_t d_;
    std::optional<std::int64_t> p_;

    friend residue_context make_context(std::int64_t, std::int64_t);
    friend residue_context make_residue_context(std::int64_t, std::int64_t);
};

inline residue_context make_context(std::int64_t m, std::int64_t p) {
    if (m < 4) throw std::invalid_argument("make_context: degree m must be at least 4");
    if (m > max_modulus) throw std::invalid_argument("make_context: degree m exceeds cap 2^20");
    if (p > max_characteristic)
        throw std::invalid_argument("make_context: characteristic exceeds cap 2^31");
    if (!is_prime(p)) throw std::invalid_argument("make_context: characteristic must be prime");
    if (gcd64(p, m) != 1)
        throw std::invalid_argument("make_context: characteristic divides the degree");
    std::int64_t d = bar(p, m);
    return residue_context(m, d, p);
}

inline residue_context make_residue_context(std::int64_t m, std::int64_t d) {
    if (m < 4) throw std::invalid_argument("make_residue_context: degree m must be at least 4");
    if (m > max_modulus)
        throw std::invalid_argument("make_residue_context: degree m exceeds cap 2^20");
    std::int64_t r = bar(d, m);
    if (gcd64(r, m) != 1)
        throw std::invalid_argument("make_residue_context: residue class must be a unit mod m");
    return residue_context(m, r, std::nullopt);
}

}  // namespace fermat
