#pragma once

// Structure-aware minimisation of the profile f_n(., q) over x >= 0 and the
// symmetry-breaking threshold q~(n).
//
// The search is never a blind descent: interior stationary points are exactly
// the zeros of the odd three-term combination A(x) (see math_core), of which
// there are at most two on (0, inf).  A dense sign scan over a certified
// bracket [0, X_max] followed by bisection therefore finds every stationary
// point, and the global minimiser is read off by comparing profile values at
// the handful of candidates (x = 0 always included, f(0) = 1).

#include "tcheeger/math_core.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tcheeger {

// Raised when a bracket or scan invariant fails; the message carries the
// offending parameters and bracket state for diagnosis.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

enum class StationaryKind { minimum, maximum, degenerate };

struct StationaryPoint {
    double x;
    double f_value;
    StationaryKind kind;
};

struct MinimizationResult {
    double x_star;   // argmin of f over [0, inf); 0 for the symmetric phase
    double f_star;   // f at the minimiser (exactly 1 when x_star = 0)
    std::vector<StationaryPoint> stationary;  // all stationary points, x ascending
    std::optional<double> tie;  // interior minimiser matching f(0) within tie_tol
};

struct ThresholdResult {
    double q_tilde;                  // symmetry-breaking threshold
    double q_lo, q_hi;               // final bracket, q_lo < q_tilde < q_hi
    int iterations;                  // bisection steps taken
    std::vector<double> minimizers;  // global minimisers at q_tilde
};

struct CurveSample {
    double q;
    double x_bar;  // global minimiser
    double f_bar;  // profile value there
    std::optional<double> tie;
};

inline constexpr double kDefaultTolX = 1e-12;
inline constexpr double kDefaultTolQ = 1e-10;
inline constexpr double kDefaultTieTol = 1e-12;

// Certified right end of the search interval: f(X) > 2 and all stationary
// points of f(., q) lie strictly inside [0, X].  Derived from the asymptotic
// growth rate gamma = 2(1/q + 1/n - 1) > 0 plus the dominance point beyond
// which the leading sinh term of A outweighs the negative one; verified and,
// if needed, enlarged by a sampled safety check.
double bracket_xmax(Dim n, Exponent q);

// All stationary points of f(., q) on [0, X_max], x = 0 always first.
// Throws solver_error if more than three turn up (scan inconsistency).
std::vector<StationaryPoint> stationary_points(Dim n, Exponent q,
                                               double tol_x = kDefaultTolX);

// Global minimum of f(., q) over x >= 0.  An interior candidate within
// tie_tol of f(0) = 1 is recorded as a tie and the symmetric minimiser wins.
MinimizationResult global_min(Dim n, Exponent q, double tol_x = kDefaultTolX,
                              double tie_tol = kDefaultTieTol);

// Symmetry-breaking threshold q~(n): the supremum of exponents for which the
// global minimiser is x = 0.  For subcritical bifurcations (n >= 3) this is
// located by bisection inside (1 + 1/n, 1 + 1/n + 1/n^2); for the
// supercritical case (n = 2) the threshold coincides with the bifurcation
// exponent qbar = 1 + 1/n + 1/n^2 and is returned in closed form after the
// bracket facts are verified at runtime.
ThresholdResult threshold(Dim n, double tol_q = kDefaultTolQ,
                          double tie_tol = kDefaultTieTol);

// Map global_min over a q-grid (order preserved).
std::vector<CurveSample> minimizer_curve(Dim n,
                                         const std::vector<Exponent>& qs,
                                         double tol_x = kDefaultTolX,
                                         double tie_tol = kDefaultTieTol);

}  // namespace tcheeger
