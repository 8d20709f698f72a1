#pragma once

// Core scalar functions for the two-ball twisted-Cheeger problem.
//
// Throughout, n >= 2 is the ambient dimension and q is the twisting exponent,
// restricted to the admissible window [1, n/(n-1)).  Configurations of two
// balls with r1^n + r2^n = 1 are parametrised by the log-radius coordinate
//
//     x = (1/2) * log(r1^n / (1 - r1^n)),   x in (-inf, inf),
//
// and the normalised quotient reduces to the profile function
//
//     f_n(x, q) = cosh(x)^(1/q + 1/n - 1) * cosh(x/n) * cosh(x(q-1))^(-1/q).
//
// Everything here is evaluated through overflow-safe log-space formulas so the
// profile and its derivatives stay finite for |x| up to ~1e9 (needed when q
// approaches the critical exponent n/(n-1) and minimisers run off to huge x).

#include <stdexcept>
#include <string>

namespace tcheeger {

// Ambient dimension, n >= 2.  Also knows the critical exponent
// q* = n/(n-1), the right endpoint of the admissible q-window.
class Dim {
public:
    explicit Dim(int n) : n_(n) {
        if (n < 2)
            throw std::invalid_argument("Dim: dimension must be >= 2, got " +
                                        std::to_string(n));
    }
    int n() const { return n_; }
    double critical_exponent() const {
        return static_cast<double>(n_) / (n_ - 1);
    }

private:
    int n_;
};

// Twisting exponent constrained to the admissible window 1 <= q < n/(n-1).
class Exponent {
public:
    Exponent(double q, Dim dim) : q_(q), dim_(dim) {
        const double qstar = dim.critical_exponent();
        if (!(q >= 1.0 && q < qstar))
            throw std::invalid_argument(
                "Exponent: q must satisfy 1 <= q < n/(n-1) = " +
                std::to_string(qstar) + " for n = " + std::to_string(dim.n()) +
                ", got q = " + std::to_string(q));
    }
    double q() const { return q_; }
    Dim dim() const { return dim_; }

private:
    double q_;
    Dim dim_;
};

// log(cosh(x)) without overflow: |x| + log1p(exp(-2|x|)) - log 2.
// Exact 0 at x = 0; relative error stays at machine precision for all x.
double log_cosh(double x);

// log f_n(x, q) assembled from log_cosh terms (no overflow for any |x|).
double log_f(Dim n, Exponent q, double x);

// The profile f_n(x, q) = exp(log_f).  f(0) = 1 exactly; even in x.
double f(Dim n, Exponent q, double x);

// Oscillation part of the x-derivative:
//   A(x) = a1*sinh(w1*x) + a2*sinh(w2*x) - a3*sinh(w3*x)
// with a1 = 1/n + 1/q - 1, w1 = q + 1/n,
//      a2 = 1/n,           w2 = 2 - q + 1/n,
//      a3 = 1 - 1/q,       w3 = q - 1/n.
// Odd in x; its zeros on (0, inf) are the interior stationary points of f.
// Uses a scaled-tail form for huge |x| so the three exponentially large terms
// never produce inf - inf.
double A(Dim n, Exponent q, double x);

// Positive even prefactor with df/dx = c(x) * A(x):
//   c(x) = (1/2) * cosh(x(q-1))^(-1/q - 1) * cosh(x)^(1/q + 1/n - 2).
double c(Dim n, Exponent q, double x);

// d f / d x = c * A, evaluated in log space for huge |x|.
double dfdx(Dim n, Exponent q, double x);

// Closed form of the second x-derivative at the origin:
//   d2f/dx2 (0, q) = 1 + 1/n + 1/n^2 - q.
// Vanishes exactly at the bifurcation exponent qbar = 1 + 1/n + 1/n^2.
double d2fdx2_at_zero(Dim n, Exponent q);

// q-derivative of log f at fixed x:
//   -(1/q^2) [log cosh x - log cosh(x(q-1))] - (x/q) tanh(x(q-1)).
// Strictly negative for x != 0: the profile decreases in q pointwise.
double dlogf_dq(Dim n, Exponent q, double x);

// Pointwise limit of f as q -> n/(n-1) (n >= 2):
//   f*(x) = cosh(x/n) * cosh(x/(n-1))^(1/n - 1).
// Decreases from 1 to 2^(-1/n); the infimum is not attained.
double f_star(Dim n, double x);

// x-derivative of the limit profile:
//   df*/dx = -(1/n) * sinh(x/(n^2-n)) * cosh(x/(n-1))^(1/n - 2).
double dfstar_dx(Dim n, double x);

}  // namespace tcheeger
