#include "tcheeger/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tcheeger;

namespace {

double rel_err(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("unit ball volumes against the closed forms") {
    CHECK(rel_err(unit_ball_volume(Dim(2)), kPi) <= 1e-15);
    CHECK(rel_err(unit_ball_volume(Dim(3)), 4.0 * kPi / 3.0) <= 1e-15);
    CHECK(rel_err(unit_ball_volume(Dim(4)), kPi * kPi / 2.0) <= 1e-15);
    CHECK(rel_err(unit_ball_volume(Dim(5)), 8.0 * kPi * kPi / 15.0) <= 1e-15);
    // omega_10 = pi^5 / 5!
    CHECK(rel_err(unit_ball_volume(Dim(10)),
                  std::pow(kPi, 5) / 120.0) <= 1e-14);
}

TEST_CASE("ball stats: values and domain errors") {
    const Dim n3(3);
    const double omega = unit_ball_volume(n3);
    const ShapeStats unit = ball_stats(n3, 1.0);
    CHECK(rel_err(unit.measure, omega) <= 1e-15);
    CHECK(rel_err(unit.perimeter, 3.0 * omega) <= 1e-15);
    const ShapeStats big = ball_stats(n3, 2.0);
    CHECK(rel_err(big.measure, 8.0 * omega) <= 1e-15);
    CHECK(rel_err(big.perimeter, 12.0 * omega) <= 1e-15);
    CHECK_THROWS_AS(ball_stats(n3, 0.0), std::domain_error);
    CHECK_THROWS_AS(ball_stats(n3, -1.0), std::domain_error);
}

TEST_CASE("quotient: two unit disks at q = 1 give exactly 2") {
    const Dim n2(2);
    const ShapeStats disk = ball_stats(n2, 1.0);
    const ShapePair pair{disk, disk};
    // (2pi/pi + 2pi/pi) / (1 + 1)^(1/1) = 4 / 2.
    CHECK(rel_err(quotient_Q(pair, Exponent(1.0, n2)), 2.0) <= 1e-15);
    // Swapping the sets cannot change the value.
    const ShapePair swapped{pair.second, pair.first};
    CHECK(quotient_Q(pair, Exponent(1.3, n2)) ==
          quotient_Q(swapped, Exponent(1.3, n2)));
}

TEST_CASE("two forms of the quotient agree to machine precision") {
    std::mt19937_64 gen(42);
    for (int t = 0; t < 1000; ++t) {
        const Dim n(2 + static_cast<int>(gen() % 5));
        const Exponent q(
            1.0 + (n.critical_exponent() - 1.0 - 1e-9) * uniform01(gen), n);
        auto draw = [&] { return std::exp(14.0 * uniform01(gen) - 7.0); };
        const ShapePair pair{{draw(), draw()}, {draw(), draw()}};
        CHECK(rel_err(two_level_functional(pair, q), quotient_Q(pair, q)) <=
              1e-12);
    }
}

TEST_CASE("homothety scaling law") {
    const Dim n3(3);
    const Exponent q(1.2, n3);
    const ShapePair pair{ball_stats(n3, 0.7), ball_stats(n3, 1.9)};
    const double base = quotient_Q(pair, q);
    const double expo = homothety_exponent(n3, q);
    CHECK(expo < 0.0);  // dilation strictly decreases Q below the critical q
    for (double lambda : {0.25, 2.0, 13.0}) {
        const double scaled_q = quotient_Q(scaled(pair, n3, lambda), q);
        CHECK(rel_err(scaled_q, std::pow(lambda, expo) * base) <= 1e-13);
    }
    CHECK_THROWS_AS(scaled(pair, n3, 0.0), std::domain_error);
}

TEST_CASE("log-radius chart: symmetric point, normalisation, roundtrip") {
    for (int nn : {2, 3, 7}) {
        const Dim n(nn);
        const BallPairConfig sym = x_to_radii(n, 0.0);
        CHECK(rel_err(sym.r1, std::pow(2.0, -1.0 / nn)) <= 1e-15);
        CHECK(sym.r1 == sym.r2);
        for (double x : {-30.0, -3.0, -0.1, 0.2, 4.0, 30.0}) {
            const BallPairConfig cfg = x_to_radii(n, x);
            CHECK(std::abs(std::pow(cfg.r1, nn) + std::pow(cfg.r2, nn) - 1.0) <=
                  1e-14);
            CHECK(std::abs(radii_to_x(cfg) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
        }
        // r1 strictly increases along x.
        CHECK(x_to_radii(n, 1.0).r1 > x_to_radii(n, 0.5).r1);
    }
    CHECK_THROWS_AS(radii_to_x(BallPairConfig{Dim(2), 1.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(radii_to_x(BallPairConfig{Dim(2), -0.5, 0.5}),
                    std::domain_error);
}

TEST_CASE("ball pairs reduce the quotient to the profile") {
    for (int nn : {2, 3, 4, 6}) {
        const Dim n(nn);
        const double omega = unit_ball_volume(n);
        for (double qv : {1.0, 1.1, 1.0 + 0.9 * (n.critical_exponent() - 1.0)}) {
            const Exponent q(qv, n);
            for (double x : {-4.0, -1.0, 0.0, 0.5, 2.5, 6.0}) {
                const BallPairConfig cfg = x_to_radii(n, x);
                const ShapePair pair{ball_stats(n, cfg.r1),
                                     ball_stats(n, cfg.r2)};
                const double rhs = nn * std::pow(2.0, 1.0 / nn) *
                                   std::pow(omega, 1.0 - 1.0 / qv) *
                                   f(n, q, x);
                CHECK(rel_err(quotient_Q(pair, q), rhs) <= 1e-12);
            }
        }
    }
}

TEST_CASE("isoperimetric replacement: fixed point on balls, never increases Q") {
    const Dim n3(3);
    const ShapePair balls{ball_stats(n3, 0.8), ball_stats(n3, 1.4)};
    const ShapePair replaced = isoperimetric_replacement(balls, n3);
    CHECK(rel_err(replaced.first.perimeter, balls.first.perimeter) <= 1e-12);
    CHECK(rel_err(replaced.second.perimeter, balls.second.perimeter) <= 1e-12);
    CHECK(replaced.first.measure == balls.first.measure);

    std::mt19937_64 gen(7);
    const Exponent q(1.25, n3);
    for (int t = 0; t < 1000; ++t) {
        // Non-ball sets: same measures, perimeters inflated above the
        // isoperimetric floor.
        auto draw = [&] { return std::exp(10.0 * uniform01(gen) - 5.0); };
        ShapePair pair{ball_stats(n3, draw()), ball_stats(n3, draw())};
        pair.first.perimeter *= 1.0 + 3.0 * uniform01(gen);
        pair.second.perimeter *= 1.0 + 3.0 * uniform01(gen);
        const double before = quotient_Q(pair, q);
        const double after = quotient_Q(isoperimetric_replacement(pair, n3), q);
        CHECK(after <= before * (1.0 + 1e-12));
    }
}

TEST_CASE("scale-invariant objective: reference value and bound") {
    const Dim n2(2);
    // n 2^(1/n) omega^(1/n) with fmin = 1: 2 * sqrt(2) * sqrt(pi).
    CHECK(rel_err(scale_invariant_optimum(n2, Exponent(1.0, n2), 1.0),
                  5.0132565492620005) <= 1e-15);
    CHECK_THROWS_AS(scale_invariant_optimum(n2, Exponent(1.0, n2), 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(scale_invariant_optimum(n2, Exponent(1.0, n2), -2.0),
                    std::domain_error);
    // fmin ranges in [2^(-1/n), 1]; the objective then dominates the
    // single-ball bound n omega^(1/n).
    const double bound = 2.0 * std::sqrt(kPi);
    CHECK(scale_invariant_optimum(n2, Exponent(1.0, n2),
                                  std::pow(2.0, -0.5)) >= bound * (1 - 1e-14));
}

}  // TEST_SUITE
