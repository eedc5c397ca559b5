#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "fermat/relations.hpp"

using fermat::check_calabi_yau_bound;
using fermat::infer;
using fermat::invariant_report;
using fermat::invariant_status;
using fermat::to_string;

TEST_CASE("status factories canonicalize") {
    const auto e = invariant_status::exact(12, "r");
    CHECK(e.is_exact());
    CHECK(e.value() == 12);
    CHECK(to_string(e) == "12");

    const auto collapsed = invariant_status::interval(3, 3, false, "r");
    CHECK(collapsed.is_exact());
    CHECK(collapsed.value() == 3);

    const auto iv = invariant_status::interval(1, 45, true, "r");
    CHECK(iv.kind() == invariant_status::kind_t::interval);
    CHECK(to_string(iv) == "1..45|inf");
    CHECK(to_string(invariant_status::interval(2, 9, false, "r")) == "2..9");

    const auto empty_plus_inf = invariant_status::interval(1, 0, true, "r");
    CHECK(empty_plus_inf.is_infinite());
    CHECK(to_string(empty_plus_inf) == "inf");

    CHECK(to_string(invariant_status::unknown()) == "unknown");
    CHECK_THROWS_AS(invariant_status::interval(1, 0, false, "r"), std::invalid_argument);
    CHECK_THROWS_AS(invariant_status::exact(-1, "r"), std::invalid_argument);
    CHECK_THROWS_AS(invariant_status::interval(-2, 3, false, "r"), std::invalid_argument);
}

TEST_CASE("status accessors guard their kind") {
    CHECK_THROWS_AS(invariant_status::infinite("r").value(), std::logic_error);
    CHECK_THROWS_AS(invariant_status::infinite("r").lo(), std::logic_error);
    CHECK_THROWS_AS(invariant_status::unknown().hi(), std::logic_error);
    CHECK_THROWS_AS(invariant_status::interval(1, 4, false, "r").value(), std::logic_error);
}

TEST_CASE("shifting translates the finite part only") {
    CHECK(invariant_status::exact(3, "r").shifted(4, "s").value() == 7);
    const auto shifted = invariant_status::interval(1, 45, true, "r").shifted(4, "s");
    CHECK(shifted.lo() == 5);
    CHECK(shifted.hi() == 49);
    CHECK(shifted.or_infinite());
    CHECK(shifted.rule() == "s");
    CHECK(invariant_status::infinite("r").shifted(4, "s").is_infinite());
}

TEST_CASE("inference for a = 0") {
    const invariant_report rep = infer(0, 1, 20);
    CHECK(rep.b.is_exact());
    CHECK(rep.b.value() == 0);
    CHECK(rep.b.rule() == fermat::rules::a_zero_iff_b_zero);
    CHECK(rep.h.is_exact());
    CHECK(rep.h.value() == 1);
    CHECK(rep.h.rule() == fermat::rules::h_eq_b_plus_pg);
}

TEST_CASE("inference for a >= 2") {
    const invariant_report rep = infer(2, 4, 45);
    CHECK(rep.b.is_infinite());
    CHECK(rep.b.rule() == fermat::rules::a_ge_2_forces_b_infinite);
    CHECK(rep.h.is_infinite());
    CHECK(infer(5, 0, 0).b.is_infinite());
}

TEST_CASE("inference for a = 1") {
    const invariant_report rep = infer(1, 4, 45);
    CHECK(to_string(rep.b) == "1..45|inf");
    CHECK(to_string(rep.h) == "5..49|inf");
    CHECK(rep.h.same_constraint(rep.b.shifted(4, "x")));

    // rigid case: no room for a finite b, so only infinity remains
    const invariant_report rigid = infer(1, 1, 0);
    CHECK(rigid.b.is_infinite());
    CHECK(rigid.h.is_infinite());
}

TEST_CASE("a = 0 with large p_g carries an explicit conflict note") {
    const invariant_report rep = infer(0, 4, 45);
    CHECK(rep.h.value() == 4);
    bool found = false;
    for (const std::string& note : rep.notes)
        if (note.find("height_class") != std::string::npos) found = true;
    CHECK(found);
    CHECK(infer(0, 1, 20).notes.size() == 1);  // only the degeneration assumption
}

TEST_CASE("every report records the degeneration assumption") {
    for (std::int64_t a : {0, 1, 2, 3}) {
        const invariant_report rep = infer(a, 2, 10);
        bool found = false;
        for (const std::string& note : rep.notes)
            if (note.find("degeneration") != std::string::npos) found = true;
        CHECK(found);
    }
}

TEST_CASE("h is always the b status translated by p_g") {
    for (std::int64_t a = 0; a <= 3; ++a)
        for (std::int64_t p_g = 0; p_g <= 5; ++p_g)
            for (std::int64_t h_n11 = 0; h_n11 <= 50; h_n11 += 7) {
                const invariant_report rep = infer(a, p_g, h_n11);
                CHECK(rep.h.same_constraint(rep.b.shifted(p_g, "x")));
            }
}

TEST_CASE("the three a-cases pin disjoint b possibilities") {
    const auto b0 = infer(0, 1, 20).b;
    const auto b1 = infer(1, 1, 20).b;
    const auto b2 = infer(2, 1, 20).b;
    CHECK(b0.value() == 0);
    CHECK(b1.lo() >= 1);
    CHECK(b1.or_infinite());
    CHECK_FALSE(b1.is_infinite());
    CHECK(b2.is_infinite());
}

TEST_CASE("inference rejects negative input") {
    CHECK_THROWS_AS(infer(-1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(infer(0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(infer(0, 1, -1), std::invalid_argument);
}

TEST_CASE("calabi-yau bound") {
    CHECK(check_calabi_yau_bound(infer(0, 1, 20)));
    CHECK(check_calabi_yau_bound(infer(1, 1, 0)));   // h infinite
    CHECK(check_calabi_yau_bound(infer(1, 1, 20)));  // 2..21 within [1, 21]

    invariant_report synthetic = infer(0, 1, 20);
    synthetic.h = invariant_status::exact(25, "r");
    CHECK_FALSE(check_calabi_yau_bound(synthetic));

    CHECK_THROWS_AS(check_calabi_yau_bound(infer(0, 2, 20)), std::invalid_argument);
}
