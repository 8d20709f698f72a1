#include "tcheeger/geometry.hpp"

#include <cmath>

namespace tcheeger {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// log(sigma(t)) for the logistic sigma(t) = 1/(1+e^-t), stable on both tails.
double log_sigmoid(double t) {
    if (t >= 0.0) return -std::log1p(std::exp(-t));
    return t - std::log1p(std::exp(t));
}

}  // namespace

double unit_ball_volume(Dim n) {
    // omega_1 = 2, omega_2 = pi, omega_k = omega_{k-2} * 2*pi/k.
    double odd = 2.0, even = kPi;
    if (n.n() == 2) return even;
    for (int k = 3; k <= n.n(); ++k) {
        if (k % 2 == 1)
            odd *= 2.0 * kPi / k;
        else
            even *= 2.0 * kPi / k;
    }
    return (n.n() % 2 == 1) ? odd : even;
}

ShapeStats ball_stats(Dim n, double r) {
    if (!(r > 0.0))
        throw std::domain_error("ball_stats: radius must be positive, got " +
                                std::to_string(r));
    const double omega = unit_ball_volume(n);
    return ShapeStats{omega * std::pow(r, n.n()),
                      n.n() * omega * std::pow(r, n.n() - 1)};
}

double quotient_Q(const ShapePair& pair, Exponent q) {
    const double m1 = pair.first.measure, p1 = pair.first.perimeter;
    const double m2 = pair.second.measure, p2 = pair.second.perimeter;
    const double num = p1 / m1 + p2 / m2;
    const double den = std::pow(std::pow(m1, 1.0 - q.q()) +
                                    std::pow(m2, 1.0 - q.q()),
                                1.0 / q.q());
    return num / den;
}

double two_level_functional(const ShapePair& pair, Exponent qq) {
    const double q = qq.q();
    const double m1 = pair.first.measure, p1 = pair.first.perimeter;
    const double m2 = pair.second.measure, p2 = pair.second.perimeter;
    // Clear denominators of the per-set terms: multiply numerator and the
    // q-mean by (m1 m2) and (m1 m2)^... respectively.  Equals quotient_Q
    // exactly in exact arithmetic.
    const double num = m2 * p1 + m1 * p2;
    const double den = std::pow(m2 * std::pow(m1, q) + m1 * std::pow(m2, q),
                                1.0 / q);
    return num / den;
}

BallPairConfig x_to_radii(Dim n, double x) {
    const double invn = 1.0 / n.n();
    // r1^n = sigma(2x), r2^n = sigma(-2x); roots taken in log space.
    return BallPairConfig{n, std::exp(invn * log_sigmoid(2.0 * x)),
                          std::exp(invn * log_sigmoid(-2.0 * x))};
}

double radii_to_x(const BallPairConfig& config) {
    const int n = config.dim.n();
    if (!(config.r1 > 0.0 && config.r2 > 0.0))
        throw std::domain_error("radii_to_x: radii must be positive");
    const double total =
        std::pow(config.r1, n) + std::pow(config.r2, n);
    if (std::abs(total - 1.0) > 1e-12)
        throw std::domain_error(
            "radii_to_x: pair not normalised, r1^n + r2^n = " +
            std::to_string(total));
    return 0.5 * n * (std::log(config.r1) - std::log(config.r2));
}

ShapePair isoperimetric_replacement(const ShapePair& pair, Dim n) {
    const double omega = unit_ball_volume(n);
    const double nn = n.n();
    // Ball of measure m has perimeter n * omega^(1/n) * m^((n-1)/n); keep the
    // measures untouched so the replacement is exactly measure-preserving.
    auto replace = [&](const ShapeStats& s) {
        return ShapeStats{s.measure,
                          nn * std::pow(omega, 1.0 / nn) *
                              std::pow(s.measure, (nn - 1.0) / nn)};
    };
    return ShapePair{replace(pair.first), replace(pair.second)};
}

double scale_invariant_optimum(Dim n, Exponent q, double fmin) {
    (void)q;
    if (!(fmin > 0.0))
        throw std::domain_error(
            "scale_invariant_optimum: fmin must be positive, got " +
            std::to_string(fmin));
    const double nn = n.n();
    return nn * std::pow(2.0, 1.0 / nn) *
           std::pow(unit_ball_volume(n), 1.0 / nn) * fmin;
}

ShapePair scaled(const ShapePair& pair, Dim n, double lambda) {
    if (!(lambda > 0.0))
        throw std::domain_error("scaled: lambda must be positive");
    const double mn = std::pow(lambda, n.n());
    const double pn = std::pow(lambda, n.n() - 1);
    return ShapePair{{pair.first.measure * mn, pair.first.perimeter * pn},
                     {pair.second.measure * mn, pair.second.perimeter * pn}};
}

double homothety_exponent(Dim n, Exponent q) {
    return (n.n() * (q.q() - 1.0) - q.q()) / q.q();
}

}  // namespace tcheeger
