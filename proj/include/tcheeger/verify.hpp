#pragma once

// Machine-checkable verification registry.  Each named claim about the
// profile family f_n(., q) — monotonicity windows, the bifurcation structure,
// thresholds, the reduction identity, the Cheeger bound — is re-checked
// numerically on demand and reported with parameters, margins, and (on
// failure) explicit counterexample points.  All randomness is seeded, so a
// report is a pure function of (claim id, params).

#include "tcheeger/math_core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tcheeger {

struct ClaimParams {
    std::vector<int> dims;        // empty: use the claim's default dimensions
    int samples = 0;              // 0: claim default (grid size or draw count)
    std::uint64_t seed = 20240817;  // drives every randomised sweep
    double tol = 0.0;             // 0: claim default tolerance
};

struct ClaimReport {
    std::string claim_id;
    std::string params;   // the parameters the check actually ran with
    bool passed;          // true iff counterexamples is empty
    std::string details;  // achieved margins, counts, timing-free summary
    std::vector<std::string> counterexamples;  // first few offending points
};

// Stable list of known claim ids.
const std::vector<std::string>& claim_registry();

// Run one named check; throws std::invalid_argument for an unknown id.
ClaimReport check_claim(const std::string& id, const ClaimParams& params = {});

// Run every registered check in registry order.
std::vector<ClaimReport> check_all(const ClaimParams& params = {});

// Zero count of a*sinh(alpha x) + b*sinh(beta x) + c*sinh(gamma x) on
// (0, xmax] via a sign-change scan with bisection refinement.  Throws
// std::domain_error for the identically-zero combination.
int lemma_sinh_zero_count(double a, double alpha, double b, double beta,
                          double c, double gamma, double xmax);

}  // namespace tcheeger
