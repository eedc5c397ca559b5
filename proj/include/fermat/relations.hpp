#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

// rule identifiers attached to every inferred status
namespace rules {
inline constexpr const char* a_zero_iff_b_zero = "a0-iff-b0";
inline constexpr const char* a_ge_2_forces_b_infinite = "a-ge-2-forces-b-inf";
inline constexpr const char* b_upper_bound = "b-upper-bound";
inline constexpr const char* h_eq_b_plus_pg = "h-eq-b-plus-pg";
inline constexpr const char* calabi_yau_bound = "calabi-yau-bound";
inline constexpr const char* input = "input";
}  // namespace rules

// what is known about one nonnegative invariant: an exact value, a finite
// interval (possibly alongside infinity), infinity itself, or nothing
class invariant_status {
public:
    enum class kind_t { exact, interval, infinite, unknown };

    static invariant_status exact(std::int64_t value, std::string rule) {
        if (value < 0) throw std::invalid_argument("invariant_status: value must be nonnegative");
        invariant_status s;
        s.kind_ = kind_t::exact;
        s.lo_ = s.hi_ = value;
        s.rule_ = std::move(rule);
        return s;
    }

    // lo..hi with an optional infinite branch; collapses to exact or infinite
    // when the description admits only one outcome
    static invariant_status interval(std::int64_t lo, std::int64_t hi, bool or_infinite,
                                     std::string rule) {
        if (lo < 0) throw std::invalid_argument("invariant_status: bounds must be nonnegative");
        if (lo > hi) {
            if (!or_infinite)
                throw std::invalid_argument("invariant_status: empty range describes nothing");
            return infinite(std::move(rule));
        }
        if (lo == hi && !or_infinite) return exact(lo, std::move(rule));
        invariant_status s;
        s.kind_ = kind_t::interval;
        s.lo_ = lo;
        s.hi_ = hi;
        s.or_infinite_ = or_infinite;
        s.rule_ = std::move(rule);
        return s;
    }

    static invariant_status infinite(std::string rule) {
        invariant_status s;
        s.kind_ = kind_t::infinite;
        s.rule_ = std::move(rule);
        return s;
    }

    static invariant_status unknown() {
        invariant_status s;
        s.kind_ = kind_t::unknown;
        return s;
    }

    kind_t kind() const { return kind_; }
    bool is_exact() const { return kind_ == kind_t::exact; }
    bool is_infinite() const { return kind_ == kind_t::infinite; }

    std::int64_t value() const {
        if (kind_ != kind_t::exact)
            throw std::logic_error("invariant_status: no exact value to read");
        return lo_;
    }

    std::int64_t lo() const {
        if (kind_ != kind_t::exact && kind_ != kind_t::interval)
            throw std::logic_error("invariant_status: no finite range to read");
        return lo_;
    }

    std::int64_t hi() const {
        if (kind_ != kind_t::exact && kind_ != kind_t::interval)
            throw std::logic_error("invariant_status: no finite range to read");
        return hi_;
    }

    bool or_infinite() const { return kind_ == kind_t::infinite || or_infinite_; }
    const std::string& rule() const { return rule_; }

    // translate every finite outcome by a constant; infinity stays infinity
    invariant_status shifted(std::int64_t offset, std::string rule) const {
        switch (kind_) {
            case kind_t::exact: return exact(lo_ + offset, std::move(rule));
            case kind_t::interval:
                return interval(lo_ + offset, hi_ + offset, or_infinite_, std::move(rule));
            case kind_t::infinite: return infinite(std::move(rule));
            case kind_t::unknown: return unknown();
        }
        throw std::logic_error("invariant_status: bad kind");
    }

    // same set of admissible values, rule labels ignored
    bool same_constraint(const invariant_status& other) const {
        if (kind_ != other.kind_) return false;
        if (kind_ == kind_t::infinite || kind_ == kind_t::unknown) return true;
        return lo_ == other.lo_ && hi_ == other.hi_ && or_infinite_ == other.or_infinite_;
    }

private:
    kind_t kind_ = kind_t::unknown;
    std::int64_t lo_ = 0;
    std::int64_t hi_ = 0;
    bool or_infinite_ = false;
    std::string rule_;
};

inline std::string to_string(const invariant_status& s) {
    switch (s.kind()) {
        case invariant_status::kind_t::exact: return std::to_string(s.value());
        case invariant_status::kind_t::interval: {
            std::string out = std::to_string(s.lo()) + ".." + std::to_string(s.hi());
            if (s.or_infinite()) out += "|inf";
            return out;
        }
        case invariant_status::kind_t::infinite: return "inf";
        case invariant_status::kind_t::unknown: return "unknown";
    }
    return "unknown";
}

struct invariant_report {
    invariant_status a = invariant_status::unknown();
    invariant_status b = invariant_status::unknown();
    invariant_status h = invariant_status::unknown();
    std::int64_t p_g = 0;
    std::int64_t h_n11 = 0;  // dim H^{n-1}(Omega^1)
    std::vector<std::string> notes;
};

// derive what the a-number forces on b and h:
//   a = 0   iff b = 0, and then h = p_g
//   a >= 2  forces b (hence h) infinite
//   a = 1   leaves b in [1, h_n11] or infinite, h the same shifted by p_g
inline invariant_report infer(std::int64_t a, std::int64_t p_g, std::int64_t h_n11) {
    if (a < 0 || p_g < 0 || h_n11 < 0)
        throw std::invalid_argument("infer: invariants must be nonnegative");
    invariant_report rep;
    rep.p_g = p_g;
    rep.h_n11 = h_n11;
    rep.a = invariant_status::exact(a, rules::input);
    rep.notes.emplace_back("assumes Hodge-to-de Rham degeneration at E1 (not checked)");
    if (a == 0) {
        rep.b = invariant_status::exact(0, rules::a_zero_iff_b_zero);
        rep.h = rep.b.shifted(p_g, rules::h_eq_b_plus_pg);
        if (p_g > 1)
            rep.notes.emplace_back(
                "a=0 gives h = p_g > 1; any unit-height classification of the formal group "
                "is reported separately as height_class and never merged with this value");
    } else if (a == 1) {
        rep.b = invariant_status::interval(1, h_n11, true,
                                           std::string(rules::a_zero_iff_b_zero) + "+" +
                                               rules::b_upper_bound);
        rep.h = rep.b.shifted(p_g, rules::h_eq_b_plus_pg);
    } else {
        rep.b = invariant_status::infinite(rules::a_ge_2_forces_b_infinite);
        rep.h = rep.b.shifted(p_g, rules::h_eq_b_plus_pg);
    }
    return rep;
}

// for p_g = 1 any finite h must land in [1, h_n11 + 1]
inline bool check_calabi_yau_bound(const invariant_report& rep) {
    if (rep.p_g != 1)
        throw std::invalid_argument("check_calabi_yau_bound: requires p_g = 1");
    switch (rep.h.kind()) {
        case invariant_status::kind_t::infinite:
        case invariant_status::kind_t::unknown: return true;
        default: return rep.h.lo() >= 1 && rep.h.hi() <= rep.h_n11 + 1;
    }
}

}  // namespace fermat
