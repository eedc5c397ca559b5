#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fermat/curve.hpp"
#include "fermat/relations.hpp"
#include "fermat/residue.hpp"
#include "fermat/surface.hpp"

namespace fermat {

// one scan line: every surface invariant plus the inferred b/h statuses;
// p and a_tensor are absent when the row was computed from a residue class
struct scan_row {
    std::int64_t m = 0;
    std::optional<std::int64_t> p;
    std::int64_t d = 0;
    std::int64_t genus = 0;
    bool curve_ordinary = false;
    std::int64_t a_closed = 0;
    std::optional<std::int64_t> a_tensor;
    std::int64_t a_brute = 0;
    std::int64_t y_count = 0;
    std::int64_t p_g = 0;
    std::int64_t h11 = 0;
    height_kind height = height_kind::undetermined;
    invariant_report report;
};

inline scan_row make_scan_row(const residue_context& ctx) {
    const surface_invariants inv = compute_surface_invariants(ctx);
    scan_row row;
    row.m = inv.m;
    row.p = inv.p;
    row.d = inv.d;
    row.genus = inv.genus_curve;
    row.curve_ordinary = curve_is_ordinary(ctx);
    row.a_closed = inv.a_closed;
    row.a_tensor = inv.a_tensor;
    row.a_brute = inv.d == 1 ? 0 : (inv.y_count > 0 ? 2 : 1);
    row.y_count = inv.y_count;
    row.p_g = inv.p_g;
    row.h11 = inv.h11;
    row.height = inv.height;
    row.report = infer(inv.a_closed, inv.p_g, inv.h11);
    return row;
}

inline std::string scan_csv_header() {
    return "m,p,d,genus,curve_ordinary,a_closed,a_tensor,a_brute,y_count,p_g,h11,"
           "height_class,b_status,h_status";
}

inline std::string to_csv(const scan_row& row) {
    auto opt = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    std::string out;
    out += std::to_string(row.m);
    out += ',' + opt(row.p);
    out += ',' + std::to_string(row.d);
    out += ',' + std::to_string(row.genus);
    out += ',';
    out += row.curve_ordinary ? "true" : "false";
    out += ',' + std::to_string(row.a_closed);
    out += ',' + opt(row.a_tensor);
    out += ',' + std::to_string(row.a_brute);
    out += ',' + std::to_string(row.y_count);
    out += ',' + std::to_string(row.p_g);
    out += ',' + std::to_string(row.h11);
    out += ',' + to_string(row.height);
    out += ',' + to_string(row.report.b);
    out += ',' + to_string(row.report.h);
    return out;
}

inline nlohmann::ordered_json to_json(const scan_row& row) {
    nlohmann::ordered_json j;
    j["m"] = row.m;
    if (row.p)
        j["p"] = *row.p;
    else
        j["p"] = nullptr;
    j["d"] = row.d;
    j["genus"] = row.genus;
    j["curve_ordinary"] = row.curve_ordinary;
    j["a_closed"] = row.a_closed;
    if (row.a_tensor)
        j["a_tensor"] = *row.a_tensor;
    else
        j["a_tensor"] = nullptr;
    j["a_brute"] = row.a_brute;
    j["y_count"] = row.y_count;
    j["p_g"] = row.p_g;
    j["h11"] = row.h11;
    j["height_class"] = to_string(row.height);
    j["b_status"] = to_string(row.report.b);
    j["h_status"] = to_string(row.report.h);
    return j;
}

// rows for explicit primes, m ascending then p ascending; pairs with
// gcd(m,p) > 1 are skipped rather than rejected so prime lists can span
// a whole m range
inline std::vector<scan_row> scan_rows(std::int64_t m_lo, std::int64_t m_hi,
                                       const std::vector<std::int64_t>& primes) {
    std::vector<scan_row> out;
    for (std::int64_t m = m_lo; m <= m_hi; ++m)
        for (std::int64_t p : primes) {
            if (gcd64(m, p) != 1) continue;
            out.push_back(make_scan_row(make_context(m, p)));
        }
    return out;
}

// rows for every unit residue class, m ascending then d ascending
inline std::vector<scan_row> scan_rows_all_units(std::int64_t m_lo, std::int64_t m_hi) {
    std::vector<scan_row> out;
    for (std::int64_t m = m_lo; m <= m_hi; ++m)
        for (std::int64_t d = 1; d < m; ++d) {
            if (gcd64(d, m) != 1) continue;
            out.push_back(make_scan_row(make_residue_context(m, d)));
        }
    return out;
}

}  // namespace fermat
