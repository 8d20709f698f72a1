#include "tcheeger/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace tcheeger;

TEST_SUITE("verify") {

TEST_CASE("registry lists the expected checks in a stable order") {
    const auto& ids = claim_registry();
    REQUIRE(ids.size() == 11);
    CHECK(ids.front() == "claim1");
    CHECK(std::find(ids.begin(), ids.end(), "lemma33") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "cheeger_bound") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "reduction") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "limit_qstar") != ids.end());
}

TEST_CASE("unknown claim ids are rejected with the known list") {
    CHECK_THROWS_AS(check_claim("no_such_claim"), std::invalid_argument);
    try {
        check_claim("no_such_claim");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("claim1") != std::string::npos);
    }
}

TEST_CASE("every registered claim passes at default parameters") {
    for (const auto& report : check_all()) {
        INFO(report.claim_id, ": ", report.details);
        for (const auto& ce : report.counterexamples) INFO("  ce: ", ce);
        CHECK(report.passed);
        CHECK(report.counterexamples.empty());
        CHECK(!report.params.empty());
        CHECK(!report.details.empty());
    }
}

TEST_CASE("reports are deterministic for a fixed seed") {
    ClaimParams p;
    p.seed = 7;
    p.samples = 1500;
    const ClaimReport a = check_claim("lemma33", p);
    const ClaimReport b = check_claim("lemma33", p);
    CHECK(a.passed);
    CHECK(a.params == b.params);
    CHECK(a.details == b.details);
    CHECK(a.counterexamples == b.counterexamples);
    CHECK(a.details.find("histogram") != std::string::npos);
}

TEST_CASE("zero counting: fixed examples") {
    // All-positive combination: no positive zeros.
    CHECK(lemma_sinh_zero_count(1.0, 1.0, 1.0, 2.0, 1.0, 3.0, 50.0) == 0);
    // sinh(2x) - 3 sinh(x): one zero, at arccosh(3/2).
    CHECK(lemma_sinh_zero_count(1.0, 2.0, -3.0, 1.0, 0.0, 1.0, 50.0) == 1);
    // The oscillation part of the n = 3 profile inside its three-point
    // window has exactly two positive zeros.
    const double n = 3.0, q = 1.4427;
    CHECK(lemma_sinh_zero_count(1.0 / n + 1.0 / q - 1.0, q + 1.0 / n, 1.0 / n,
                                2.0 - q + 1.0 / n, -(1.0 - 1.0 / q),
                                q - 1.0 / n, 50.0) == 2);
    CHECK_THROWS_AS(lemma_sinh_zero_count(0.0, 1.0, 0.0, 2.0, 0.0, 3.0, 50.0),
                    std::domain_error);
}

}  // TEST_SUITE
