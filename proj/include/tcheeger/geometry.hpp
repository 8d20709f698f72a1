#pragma once

// Geometry layer: measures/perimeters of balls, the two-set quotient Q, and
// the change of variables between normalised ball pairs and the log-radius
// coordinate x used by the optimisation layer.
//
// For a pair of disjoint sets E1, E2 with measures m_i and perimeters p_i the
// twisted quotient with exponent q is
//
//     Q(E1, E2) = (p1/m1 + p2/m2) / (m1^(1-q) + m2^(1-q))^(1/q),
//
// minimised (for fixed total measure class) by pairs of balls.  Restricted to
// balls with r1^n + r2^n = 1 it equals n * 2^(1/n) * omega_n^(1-1/q) * f_n(x,q)
// where omega_n is the unit-ball volume and x the log-radius coordinate.

#include "tcheeger/math_core.hpp"

namespace tcheeger {

// Measure and perimeter of one admissible set.  Operations below assume both
// entries are strictly positive.
struct ShapeStats {
    double measure;
    double perimeter;
};

struct ShapePair {
    ShapeStats first;
    ShapeStats second;
};

// Two balls in dimension `dim` with radii r1, r2 > 0.
struct BallPairConfig {
    Dim dim;
    double r1;
    double r2;
};

// Volume omega_n of the n-dimensional unit ball, via the two-step recursion
// omega_n = omega_{n-2} * 2*pi/n seeded with omega_1 = 2, omega_2 = pi.
double unit_ball_volume(Dim n);

// Measure and perimeter of a ball of radius r > 0 (throws std::domain_error
// otherwise): m = omega_n r^n, p = n omega_n r^(n-1).
ShapeStats ball_stats(Dim n, double r);

// The twisted quotient of a pair of sets (given by their stats).
double quotient_Q(const ShapePair& pair, Exponent q);

// Algebraically identical rewrite of quotient_Q used by the reduction
// argument:
//   (m2 p1 + m1 p2) / (m2 m1^q + m1 m2^q)^(1/q) ... normalised per measure.
// Kept as a separate code path so tests can pin the identity numerically.
double two_level_functional(const ShapePair& pair, Exponent q);

// Normalised ball pair (r1^n + r2^n = 1) for a log-radius coordinate x:
// r1 = sigma(2x)^(1/n), r2 = sigma(-2x)^(1/n) with sigma the logistic
// function, evaluated in log space for accuracy at large |x|.
BallPairConfig x_to_radii(Dim n, double x);

// Inverse map x = (n/2) (log r1 - log r2); throws std::domain_error unless
// the pair is normalised to |r1^n + r2^n - 1| <= 1e-12.
double radii_to_x(const BallPairConfig& config);

// Replace each set by the ball of the same measure; perimeters can only
// shrink (isoperimetric inequality), so quotient_Q does not increase.
ShapePair isoperimetric_replacement(const ShapePair& pair, Dim n);

// Scale-invariant objective J = n * 2^(1/n) * omega_n^(1/n) * fmin given the
// minimal profile value fmin > 0 (throws std::domain_error otherwise).
// J >= n * omega_n^(1/n), the single-ball Cheeger bound.
double scale_invariant_optimum(Dim n, Exponent q, double fmin);

// Homothety E -> lambda E applied to both stats (m -> lambda^n m,
// p -> lambda^(n-1) p); quotient_Q scales by lambda^((n(q-1)-q)/q).
ShapePair scaled(const ShapePair& pair, Dim n, double lambda);

// The homothety exponent (n(q-1) - q)/q appearing in that scaling law.
double homothety_exponent(Dim n, Exponent q);

}  // namespace tcheeger
