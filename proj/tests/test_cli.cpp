#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef FERMATINV_BIN
#error "FERMATINV_BIN must point at the CLI binary"
#endif

namespace {

struct run_result {
    int exit_code = -1;
    std::string output;
};

// stdout only; stderr is dropped so error-path tests stay quiet
run_result run(const std::string& args) {
    const std::string cmd = std::string(FERMATINV_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("curve subcommand reports ordinarity and a-number") {
    const auto ordinary = run("curve --m 5 --p 11");
    CHECK(ordinary.exit_code == 0);
    CHECK(ordinary.output.find("curve_ordinary: true") != std::string::npos);
    CHECK(ordinary.output.find("a: 0") != std::string::npos);

    const auto zero = run("curve --m 4 --p 3");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output.find("frobenius_zero: true") != std::string::npos);
    CHECK(zero.output.find("a: 1") != std::string::npos);
}

TEST_CASE("curve --show-matrix prints the entrywise action") {
    const auto res = run("curve --m 5 --p 7 --show-matrix");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("(1,2) -> +(2,4)") != std::string::npos);
    CHECK(res.output.find("(1,3) -> 0") != std::string::npos);

    const auto json = run("curve --m 5 --p 7 --format json --show-matrix");
    CHECK(json.exit_code == 0);
    const auto j = nlohmann::json::parse(json.output);
    CHECK(j["a"] == 1);
    CHECK(j["matrix"][0]["from"] == nlohmann::json({1, 2}));
    CHECK(j["matrix"][0]["to"] == nlohmann::json({2, 4}));
    CHECK(j["matrix"][0]["sign"] == 1);
    CHECK(j["matrix"][1]["to"].is_null());
}

TEST_CASE("curve rejects invalid input with exit code 1") {
    CHECK(run("curve --m 4 --p 6").exit_code == 1);
    CHECK(run("curve --m 3 --p 5").exit_code == 1);
    CHECK(run("curve --m 4 --p 2").exit_code == 1);
    CHECK(run("curve --m 5").exit_code == 1);
}

TEST_CASE("surface subcommand emits the invariant row") {
    const auto inf = run("surface --m 7 --p 5 --format csv");
    CHECK(inf.exit_code == 0);
    CHECK(inf.output.find("m,p,d,") == 0);
    CHECK(inf.output.find(",Infinite,inf,inf") != std::string::npos);

    const auto text = run("surface --m 5 --p 7");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("a_closed: 1") != std::string::npos);
    CHECK(text.output.find("height_class: Undetermined") != std::string::npos);
    CHECK(text.output.find("note: assumes Hodge-to-de Rham") != std::string::npos);

    const auto k3 = run("surface --m 4 --p 5 --format json");
    CHECK(k3.exit_code == 0);
    const auto j = nlohmann::json::parse(k3.output);
    CHECK(j["a_closed"] == 0);
    CHECK(j["p_g"] == 1);
    CHECK(j["h_status"] == "1");
    CHECK(j["height_class"] == "One");
}

TEST_CASE("surface residue mode skips the tensor route") {
    const auto text = run("surface --m 5 --d 3");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("a_tensor: -") != std::string::npos);
    CHECK(text.output.find("p: -") != std::string::npos);

    const auto j = nlohmann::json::parse(run("surface --m 5 --d 3 --format json").output);
    CHECK(j["a_tensor"].is_null());
    CHECK(j["p"].is_null());
    CHECK(j["a_closed"] == 1);
}

TEST_CASE("surface rejects bad mode combinations") {
    CHECK(run("surface --m 5 --p 7 --d 2").exit_code == 1);
    CHECK(run("surface --m 5").exit_code == 1);
    CHECK(run("surface --m 5 --p 5").exit_code == 1);
    CHECK(run("surface --m 5 --d 5").exit_code == 1);
    CHECK(run("surface --m 5 --d 0").exit_code == 1);
}

TEST_CASE("scan over all units") {
    const auto res = run("scan --m 4..10 --all-units --format csv");
    CHECK(res.exit_code == 0);
    CHECK(count_lines(res.output) == 29);  // header + 28 unit classes

    // byte-identical across invocations
    const auto again = run("scan --m 4..10 --all-units --format csv");
    CHECK(res.output == again.output);
}

TEST_CASE("scan over an explicit prime list") {
    const auto res = run("scan --m 5 --p 7,11,19 --format csv");
    CHECK(res.exit_code == 0);
    REQUIRE(count_lines(res.output) == 4);
    std::istringstream lines(res.output);
    std::string header, row1, row2, row3;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    std::getline(lines, row3);
    CHECK(row1.find("5,7,2,") == 0);
    CHECK(row1.find(",1,1,1,") != std::string::npos);
    CHECK(row2.find("5,11,1,") == 0);
    CHECK(row3.find("5,19,4,") == 0);
    CHECK(row3.find(",Infinite,") != std::string::npos);
}

TEST_CASE("scan --p-below enumerates coprime primes") {
    const auto res = run("scan --m 5 --p-below 20 --format json");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    REQUIRE(j.is_array());
    CHECK(j.size() == 7);  // 2,3,7,11,13,17,19
    CHECK(j[0]["p"] == 2);
    CHECK(j[6]["p"] == 19);
}

TEST_CASE("scan csv and json carry identical values") {
    const auto csv = run("scan --m 4..6 --all-units --format csv");
    const auto json = run("scan --m 4..6 --all-units --format json");
    // ordered parse keeps emission order so fields line up with csv columns
    const auto j = nlohmann::ordered_json::parse(json.output);

    std::istringstream lines(csv.output);
    std::string header;
    std::getline(lines, header);
    std::size_t i = 0;
    std::string line;
    while (std::getline(lines, line)) {
        REQUIRE(i < j.size());
        std::ostringstream rebuilt;
        bool first = true;
        for (const auto& [key, value] : j[i].items()) {
            if (!first) rebuilt << ',';
            first = false;
            if (value.is_null())
                ;
            else if (value.is_boolean())
                rebuilt << (value.get<bool>() ? "true" : "false");
            else if (value.is_string())
                rebuilt << value.get<std::string>();
            else
                rebuilt << value.get<std::int64_t>();
        }
        CHECK(rebuilt.str() == line);
        ++i;
    }
    CHECK(i == j.size());
}

TEST_CASE("scan writes --out files identical to stdout") {
    const std::string path = "/tmp/fermatinv_scan_test.csv";
    const auto direct = run("scan --m 4..6 --all-units --format csv");
    const auto to_file = run("scan --m 4..6 --all-units --format csv --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.output);
    std::remove(path.c_str());
}

TEST_CASE("scan rejects invalid input") {
    CHECK(run("scan --m 5 --p 9").exit_code == 1);
    CHECK(run("scan --m 5").exit_code == 1);
    CHECK(run("scan --m 5 --all-units --p 7").exit_code == 1);
    CHECK(run("scan --m 10..4 --all-units").exit_code == 1);
    CHECK(run("scan --m 3..5 --all-units").exit_code == 1);
    CHECK(run("scan --m 4..6 --all-units --out /nonexistent_dir_xyz/out.csv").exit_code == 1);
}

TEST_CASE("verify runs its checks and exits 0") {
    const auto res = run("verify --m-max 20");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("route-agreement:") != std::string::npos);
    CHECK(res.output.find("isoorzero:") != std::string::npos);
    CHECK(res.output.find("y-symmetry:") != std::string::npos);
    CHECK(res.output.find("pair-count:") != std::string::npos);
    CHECK(res.output.find("product:") != std::string::npos);
    CHECK(res.output.find("all checks passed") != std::string::npos);
    CHECK(res.output.find("FAIL") == std::string::npos);

    const auto single = run("verify --m-max 15 --checks isoorzero --format json");
    CHECK(single.exit_code == 0);
    const auto j = nlohmann::json::parse(single.output);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["name"] == "isoorzero");
    CHECK(j[0]["passed"] == true);
    CHECK(j[0]["failures"] == 0);
    CHECK(j[0]["cases"].get<std::int64_t>() > 0);
}

TEST_CASE("verify rejects unknown checks and bad bounds") {
    CHECK(run("verify --m-max 20 --checks bogus").exit_code == 1);
    CHECK(run("verify --m-max 3").exit_code == 1);
}

TEST_CASE("top-level usage errors exit 1, help exits 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("").exit_code == 1);
    CHECK(run("frobnicate").exit_code == 1);
}
