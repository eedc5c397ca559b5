// fermatinv: invariants of Fermat curves and surfaces in characteristic p
//
// subcommands:
//   curve    genus, ordinarity, a-number of one curve
//   surface  full invariant row for one surface
//   scan     rows over an m range and a prime set or all unit classes
//   verify   internal cross-checks between independent routes

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fermat/fermat.hpp"

namespace {

using nlohmann::ordered_json;

// "4..10" or "7"
std::pair<std::int64_t, std::int64_t> parse_m_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::int64_t m = std::stoll(text);
            return {m, m};
        }
        const std::int64_t lo = std::stoll(text.substr(0, dots));
        const std::int64_t hi = std::stoll(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("--m: range lower bound exceeds upper bound");
        return {lo, hi};
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("--m: value out of range");
    }
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path: " + out_path);
    out << payload;
    if (!out) throw std::invalid_argument("cannot write output path: " + out_path);
}

char sign_char(int sign) { return sign < 0 ? '-' : '+'; }

std::string matrix_text(const fermat::signed_monomial_map& fm) {
    std::ostringstream out;
    for (fermat::basis_index idx : fermat::xi_basis(fm.m())) {
        const auto& entry = fm.image(idx);
        out << "  (" << idx.a << ',' << idx.b << ") -> ";
        if (entry)
            out << sign_char(entry->sign) << '(' << entry->image.a << ',' << entry->image.b
                << ")";
        else
            out << "0";
        out << '\n';
    }
    return out.str();
}

ordered_json matrix_json(const fermat::signed_monomial_map& fm) {
    ordered_json rows = ordered_json::array();
    for (fermat::basis_index idx : fermat::xi_basis(fm.m())) {
        const auto& entry = fm.image(idx);
        ordered_json row;
        row["from"] = {idx.a, idx.b};
        if (entry) {
            row["sign"] = entry->sign;
            row["to"] = {entry->image.a, entry->image.b};
        } else {
            row["sign"] = nullptr;
            row["to"] = nullptr;
        }
        rows.push_back(row);
    }
    return rows;
}

int cmd_curve(std::int64_t m, std::int64_t p, const std::string& format, bool show_matrix,
              const std::string& out_path) {
    const fermat::residue_context ctx = fermat::make_context(m, p);
    const fermat::signed_monomial_map fm = fermat::frobenius_matrix(ctx);
    const bool ordinary = fm.is_bijective();
    const std::int64_t a = ordinary ? 0 : 1;

    std::ostringstream out;
    if (format == "json") {
        ordered_json j;
        j["m"] = ctx.m();
        j["p"] = ctx.p();
        j["d"] = ctx.d();
        j["genus"] = fermat::genus(ctx.m());
        j["curve_ordinary"] = ordinary;
        j["frobenius_zero"] = fm.is_zero_map();
        j["a"] = a;
        if (show_matrix) j["matrix"] = matrix_json(fm);
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << "m,p,d,genus,curve_ordinary,frobenius_zero,a\n";
        out << ctx.m() << ',' << ctx.p() << ',' << ctx.d() << ',' << fermat::genus(ctx.m())
            << ',' << (ordinary ? "true" : "false") << ',' << (fm.is_zero_map() ? "true" : "false")
            << ',' << a << '\n';
    } else {
        out << "m: " << ctx.m() << '\n';
        out << "p: " << ctx.p() << '\n';
        out << "d: " << ctx.d() << '\n';
        out << "genus: " << fermat::genus(ctx.m()) << '\n';
        out << "curve_ordinary: " << (ordinary ? "true" : "false") << '\n';
        out << "frobenius_zero: " << (fm.is_zero_map() ? "true" : "false") << '\n';
        out << "a: " << a << '\n';
        if (show_matrix) out << "matrix:\n" << matrix_text(fm);
    }
    write_output(out.str(), out_path);
    return 0;
}

std::string surface_text(const fermat::scan_row& row) {
    std::ostringstream out;
    auto opt = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    out << "m: " << row.m << '\n';
    out << "p: " << opt(row.p) << '\n';
    out << "d: " << row.d << '\n';
    out << "genus: " << row.genus << '\n';
    out << "curve_ordinary: " << (row.curve_ordinary ? "true" : "false") << '\n';
    out << "a_closed: " << row.a_closed << '\n';
    out << "a_tensor: " << opt(row.a_tensor) << '\n';
    out << "a_brute: " << row.a_brute << '\n';
    out << "y_count: " << row.y_count << '\n';
    out << "p_g: " << row.p_g << '\n';
    out << "h11: " << row.h11 << '\n';
    out << "height_class: " << fermat::to_string(row.height) << '\n';
    out << "b_status: " << fermat::to_string(row.report.b) << " (rule " << row.report.b.rule()
        << ")\n";
    out << "h_status: " << fermat::to_string(row.report.h) << " (rule " << row.report.h.rule()
        << ")\n";
    for (const std::string& note : row.report.notes) out << "note: " << note << '\n';
    return out.str();
}

int cmd_surface(std::int64_t m, std::optional<std::int64_t> p, std::optional<std::int64_t> d,
                const std::string& format, const std::string& out_path) {
    if (p.has_value() == d.has_value())
        throw std::invalid_argument("surface: exactly one of --p and --d is required");
    const fermat::residue_context ctx =
        p ? fermat::make_context(m, *p) : fermat::make_residue_context(m, *d);
    const fermat::scan_row row = fermat::make_scan_row(ctx);

    std::ostringstream out;
    if (format == "json")
        out << fermat::to_json(row).dump(2) << '\n';
    else if (format == "csv")
        out << fermat::scan_csv_header() << '\n' << fermat::to_csv(row) << '\n';
    else
        out << surface_text(row);
    write_output(out.str(), out_path);
    return 0;
}

int cmd_scan(const std::string& m_range, std::vector<std::int64_t> p_set, std::int64_t p_below,
             bool all_units, const std::string& format, const std::string& out_path) {
    const auto [m_lo, m_hi] = parse_m_range(m_range);
    if (m_lo < 4) throw std::invalid_argument("scan: m range must start at 4 or above");

    int modes = 0;
    modes += !p_set.empty();
    modes += p_below > 0;
    modes += all_units;
    if (modes != 1)
        throw std::invalid_argument(
            "scan: choose exactly one of --p-set, --p-below, --all-units");

    std::vector<fermat::scan_row> rows;
    if (all_units) {
        rows = fermat::scan_rows_all_units(m_lo, m_hi);
    } else {
        if (p_below > 0) p_set = fermat::primes_below(p_below);
        for (std::int64_t p : p_set)
            if (!fermat::is_prime(p))
                throw std::invalid_argument("scan: " + std::to_string(p) + " is not prime");
        rows = fermat::scan_rows(m_lo, m_hi, p_set);
    }

    std::ostringstream out;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) arr.push_back(fermat::to_json(row));
        out << arr.dump(2) << '\n';
    } else {
        // text and csv share the tabular form
        out << fermat::scan_csv_header() << '\n';
        for (const auto& row : rows) out << fermat::to_csv(row) << '\n';
    }
    write_output(out.str(), out_path);
    return 0;
}

int cmd_verify(std::int64_t m_max, const std::vector<std::string>& checks,
               const std::string& format, const std::string& out_path) {
    const std::vector<fermat::check_result> results = fermat::run_verify(m_max, checks);
    bool all_passed = true;

    std::ostringstream out;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            ordered_json j;
            j["name"] = r.name;
            j["cases"] = r.cases;
            j["failures"] = r.failures;
            j["passed"] = r.passed();
            arr.push_back(j);
            all_passed = all_passed && r.passed();
        }
        out << arr.dump(2) << '\n';
    } else if (format == "csv") {
        out << "name,cases,failures,passed\n";
        for (const auto& r : results) {
            out << r.name << ',' << r.cases << ',' << r.failures << ','
                << (r.passed() ? "true" : "false") << '\n';
            all_passed = all_passed && r.passed();
        }
    } else {
        for (const auto& r : results) {
            out << r.name << ": " << r.cases << " cases, " << r.failures << " failures ["
                << (r.passed() ? "PASS" : "FAIL") << "]\n";
            all_passed = all_passed && r.passed();
        }
        out << (all_passed ? "all checks passed\n" : "checks failed\n");
    }
    write_output(out.str(), out_path);
    return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of Fermat curves and surfaces in characteristic p"};
    app.require_subcommand(1);

    // curve
    auto* curve = app.add_subcommand("curve", "one curve: genus, ordinarity, a-number");
    std::int64_t curve_m = 0, curve_p = 0;
    bool show_matrix = false;
    std::string curve_format = "text", curve_out;
    curve->add_option("--m", curve_m, "degree m >= 4")->required();
    curve->add_option("--p", curve_p, "prime characteristic")->required();
    curve->add_flag("--show-matrix", show_matrix, "print the Frobenius action entrywise");
    curve->add_option("--format", curve_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    curve->add_option("--out", curve_out, "write to file instead of stdout");

    // surface
    auto* surface = app.add_subcommand("surface", "one surface: full invariant row");
    std::int64_t surf_m = 0;
    std::optional<std::int64_t> surf_p, surf_d;
    std::string surf_format = "text", surf_out;
    surface->add_option("--m", surf_m, "degree m >= 4")->required();
    surface->add_option("--p", surf_p, "prime characteristic");
    surface->add_option("--d", surf_d, "unit residue class mod m (skips the tensor route)");
    surface->add_option("--format", surf_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    surface->add_option("--out", surf_out, "write to file instead of stdout");

    // scan
    auto* scan = app.add_subcommand("scan", "rows over an m range");
    std::string scan_m;
    std::vector<std::int64_t> scan_pset;
    std::int64_t scan_pbelow = 0;
    bool scan_all_units = false;
    std::string scan_format = "text", scan_out;
    scan->add_option("--m", scan_m, "degree or range, e.g. 5 or 4..10")->required();
    scan->add_option("--p-set,--p", scan_pset, "comma-separated primes")->delimiter(',');
    scan->add_option("--p-below", scan_pbelow, "all primes below N");
    scan->add_flag("--all-units", scan_all_units, "every unit residue class instead of primes");
    scan->add_option("--format", scan_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    scan->add_option("--out", scan_out, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check the independent routes");
    std::int64_t verify_m_max = 40;
    std::vector<std::string> verify_checks;
    std::string verify_format = "text", verify_out;
    verify->add_option("--m-max", verify_m_max, "largest degree to test (default 40)");
    verify->add_option("--checks", verify_checks,
                       "subset of: route-agreement,isoorzero,y-symmetry,pair-count,product")
        ->delimiter(',');
    verify->add_option("--format", verify_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    verify->add_option("--out", verify_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (curve->parsed())
            return cmd_curve(curve_m, curve_p, curve_format, show_matrix, curve_out);
        if (surface->parsed())
            return cmd_surface(surf_m, surf_p, surf_d, surf_format, surf_out);
        if (scan->parsed())
            return cmd_scan(scan_m, scan_pset, scan_pbelow, scan_all_units, scan_format,
                            scan_out);
        if (verify->parsed())
            return cmd_verify(verify_m_max, verify_checks, verify_format, verify_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const fermat::consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
