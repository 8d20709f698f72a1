#include "tcheeger/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcheeger {

namespace {

constexpr double kLog2 = 0.69314718055994530941723212145817657;
constexpr int kScanPoints = 20000;    // dense uniform scan resolution
// First scan abscissa.  Must sit above the rounding noise of A in the fully
// degenerate case q = qbar, where A ~ -|c| x^3 near the origin (true interior
// zeros stay above ~1e-4 for every exponent the solvers probe, so nothing can
// hide below this).
constexpr double kScanStart = 1e-6;
constexpr double kTailFactor = 1.02;  // geometric tail step beyond the dense range

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Dominance point: beyond x_A the positive leading term a1*sinh(w1 x) of A
// outweighs the negative a3*sinh(w3 x) with margin (w1 - w3 = 2/n, and the
// 0.86 factor absorbs the worst sampled ratio of the remaining terms).
double dominance_point(Dim n, Exponent qq) {
    const double q = qq.q();
    const double a1 = 1.0 / n.n() + 1.0 / q - 1.0;
    const double a3 = 1.0 - 1.0 / q;
    if (a3 <= 0.86 * a1) return 1.0;
    return std::max(1.0, 0.5 * n.n() * std::log(a3 / (0.86 * a1)));
}

// Scan abscissas: uniform over [kScanStart, D] plus a geometric tail up to
// xmax when the certified bracket extends past the dense range (it can reach
// ~1e9 as q approaches the critical exponent).
std::vector<double> scan_points(double xmax, double x_dom) {
    const double dense_end = std::min(xmax, std::max(50.0, 2.0 * x_dom));
    std::vector<double> xs;
    xs.reserve(kScanPoints + 1200);
    for (int i = 0; i <= kScanPoints; ++i) {
        const double t = static_cast<double>(i) / kScanPoints;
        xs.push_back(kScanStart + t * (dense_end - kScanStart));
    }
    double x = dense_end;
    while (x < xmax) {
        x = std::min(x * kTailFactor, xmax);
        xs.push_back(x);
    }
    return xs;
}

// Bisection on A over a sign-changing bracket, to relative width tol.
double refine_zero(Dim n, Exponent q, double lo, double hi, int slo,
                   double tol) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol * std::max(1.0, std::abs(hi))) break;
        const int sm = sign_of(A(n, q, mid));
        if (sm == 0) return mid;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double bracket_xmax(Dim n, Exponent qq) {
    const double q = qq.q();
    const double gamma = 2.0 * (1.0 / q + 1.0 / n.n() - 1.0);  // > 0 on the window
    // log f >= gamma*x - 1.5*log2 for large x, so f(X) > 2 once
    // X > 2.5*log2/gamma; also clear the dominance point of A with margin.
    double X = std::max({2.5 * kLog2 / gamma, 1.0, 2.0 * dominance_point(n, qq)});
    for (int iter = 0; iter < 300; ++iter) {
        bool ok = f(n, qq, X) > 2.0;
        for (int j = 1; j <= 8 && ok; ++j)
            ok = f(n, qq, X * (1.0 + 0.125 * j)) > 1.0;
        if (ok) return X;
        X *= 1.5;
    }
    std::ostringstream msg;
    msg << "bracket_xmax: no certified bracket for n=" << n.n() << " q=" << q
        << " (reached X=" << X << ")";
    throw solver_error(msg.str());
}

std::vector<StationaryPoint> stationary_points(Dim n, Exponent q,
                                               double tol_x) {
    const double xmax = bracket_xmax(n, q);
    const std::vector<double> xs = scan_points(xmax, dominance_point(n, q));

    std::vector<double> zeros;
    int sprev = sign_of(A(n, q, xs.front()));
    if (sprev == 0) zeros.push_back(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const int s = sign_of(A(n, q, xs[i]));
        if (s == 0) {
            zeros.push_back(xs[i]);
        } else if (sprev != 0 && s != sprev) {
            zeros.push_back(refine_zero(n, q, xs[i - 1], xs[i], sprev, tol_x));
        }
        sprev = s;
    }
    // Merge duplicates from an exact grid zero adjacent to a sign change.
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [](double a, double b) { return b - a < 1e-8; }),
                zeros.end());

    if (zeros.size() > 2) {
        std::ostringstream msg;
        msg << "stationary_points: " << zeros.size() + 1
            << " stationary points for n=" << n.n() << " q=" << q.q()
            << " (expected at most 3); first zeros:";
        for (std::size_t i = 0; i < std::min<std::size_t>(zeros.size(), 4); ++i)
            msg << ' ' << zeros[i];
        throw solver_error(msg.str());
    }

    std::vector<StationaryPoint> pts;
    // Classify x = 0 by the sign of A just inside (0, z_first): the origin is
    // a local minimum iff f initially increases.  The probe must stay below
    // the first interior zero, which can sit arbitrarily close to 0 near the
    // bifurcation exponent.
    {
        double delta = 1e-3;
        if (!zeros.empty()) delta = std::min(delta, 0.5 * zeros.front());
        const double probe = A(n, q, delta);
        StationaryKind kind = StationaryKind::degenerate;
        if (probe > 0.0)
            kind = StationaryKind::minimum;
        else if (probe < 0.0)
            kind = StationaryKind::maximum;
        pts.push_back({0.0, 1.0, kind});
    }
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const double z = zeros[i];
        double h = 1e-6;
        // Keep the probes inside the gaps between neighbouring zeros.
        h = std::min(h, 0.25 * z);
        if (i > 0) h = std::min(h, 0.25 * (z - zeros[i - 1]));
        if (i + 1 < zeros.size()) h = std::min(h, 0.25 * (zeros[i + 1] - z));
        const double dl = dfdx(n, q, z - h);
        const double dr = dfdx(n, q, z + h);
        StationaryKind kind = StationaryKind::degenerate;
        if (dl < 0.0 && dr > 0.0)
            kind = StationaryKind::minimum;
        else if (dl > 0.0 && dr < 0.0)
            kind = StationaryKind::maximum;
        pts.push_back({z, f(n, q, z), kind});
    }
    return pts;
}

MinimizationResult global_min(Dim n, Exponent q, double tol_x,
                              double tie_tol) {
    MinimizationResult res;
    res.stationary = stationary_points(n, q, tol_x);
    res.x_star = 0.0;
    res.f_star = 1.0;
    res.tie = std::nullopt;

    const StationaryPoint* best = nullptr;
    for (const auto& p : res.stationary) {
        if (p.x <= 0.0 || p.kind != StationaryKind::minimum) continue;
        if (best == nullptr || p.f_value < best->f_value) best = &p;
    }
    if (best == nullptr) return res;

    if (best->f_value < 1.0 - tie_tol) {
        res.x_star = best->x;
        res.f_star = best->f_value;
    } else if (best->f_value <= 1.0 + tie_tol) {
        // Indistinguishable from the symmetric value: keep x = 0, record the
        // interior branch so callers can see the coexistence.
        res.tie = best->x;
    }
    return res;
}

namespace {

// Numerator of the third x-derivative of A at the origin at the bifurcation
// exponent qbar = 1 + 1/n + 1/n^2:
//   A'''(0, qbar) = 4 (-n^5 + 3n^3 + 5n^2 + 4n + 1) / (n^6 (n^2 + n + 1)).
// Positive only for n = 2 (value +21): supercritical pitchfork.  Negative for
// n >= 3: subcritical, so the threshold sits strictly below qbar.
long long pitchfork_cubic_numerator(Dim n) {
    const long long k = n.n();
    return -k * k * k * k * k + 3 * k * k * k + 5 * k * k + 4 * k + 1;
}

bool symmetric_phase(Dim n, double q, double tie_tol) {
    return global_min(n, Exponent(q, n), kDefaultTolX, tie_tol).x_star == 0.0;
}

}  // namespace

ThresholdResult threshold(Dim n, double tol_q, double tie_tol) {
    const double invn = 1.0 / n.n();
    const double qbar = 1.0 + invn + invn * invn;
    const double qstar = n.critical_exponent();

    if (pitchfork_cubic_numerator(n) > 0) {
        // Supercritical: the interior branch emerges above qbar with values
        // f > 1 near the bifurcation, so the symmetric phase ends exactly at
        // qbar.  Verify the surrounding phase facts before returning it.
        const double q_below = 1.0 + 0.5 * invn;               // 1.5 for n = 2
        const double q_above = qbar + 0.6 * (qstar - qbar);    // 1.9 for n = 2
        if (!symmetric_phase(n, q_below, tie_tol))
            throw solver_error(
                "threshold: symmetric phase check failed below qbar at q=" +
                std::to_string(q_below));
        if (symmetric_phase(n, q_above, tie_tol))
            throw solver_error(
                "threshold: broken phase check failed above qbar at q=" +
                std::to_string(q_above));
        ThresholdResult res;
        res.q_tilde = qbar;
        res.q_lo = qbar - 0.5 * tol_q;
        res.q_hi = qbar + 0.5 * tol_q;
        res.iterations = 0;
        res.minimizers = {0.0};
        return res;
    }

    // Subcritical: first crossing of the phase predicate inside
    // (1 + 1/n, qbar).  The predicate is monotone (profile decreases in q
    // pointwise), so plain bisection applies.
    double q_lo = 1.0 + invn;
    double q_hi = qbar;
    if (!symmetric_phase(n, q_lo, tie_tol)) {
        std::ostringstream msg;
        msg << "threshold: bracket orientation failed, expected symmetric "
               "phase at q_lo="
            << q_lo << " for n=" << n.n();
        throw solver_error(msg.str());
    }
    if (symmetric_phase(n, q_hi, tie_tol)) {
        std::ostringstream msg;
        msg << "threshold: bracket orientation failed, expected broken phase "
               "at q_hi="
            << q_hi << " for n=" << n.n();
        throw solver_error(msg.str());
    }
    int iterations = 0;
    while (q_hi - q_lo > tol_q && iterations < 200) {
        const double mid = 0.5 * (q_lo + q_hi);
        if (symmetric_phase(n, mid, tie_tol))
            q_lo = mid;
        else
            q_hi = mid;
        ++iterations;
    }

    ThresholdResult res;
    res.q_tilde = 0.5 * (q_lo + q_hi);
    res.q_lo = q_lo;
    res.q_hi = q_hi;
    res.iterations = iterations;
    // At the threshold the symmetric minimiser coexists with the interior
    // branch; read the interior location off the broken side of the bracket.
    const MinimizationResult broken = global_min(n, Exponent(q_hi, n));
    res.minimizers = {0.0};
    if (broken.x_star > 0.0) res.minimizers.push_back(broken.x_star);
    return res;
}

std::vector<CurveSample> minimizer_curve(Dim n, const std::vector<Exponent>& qs,
                                         double tol_x, double tie_tol) {
    std::vector<CurveSample> out;
    out.reserve(qs.size());
    for (const Exponent& q : qs) {
        const MinimizationResult r = global_min(n, q, tol_x, tie_tol);
        out.push_back({q.q(), r.x_star, r.f_star, r.tie});
    }
    return out;
}

}  // namespace tcheeger
