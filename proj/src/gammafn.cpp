#include "resonance/gammafn.hpp"

#include <cmath>
#include <stdexcept>

namespace resonance::gammafn {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos g = 7, 9-term coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
} // namespace

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // Reflection; principal branch.  Callers in this codebase stay off
        // the negative real axis, where the branch cut would bite.
        return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    cplx a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

double digamma(double x) {
    if (x <= 0.0) throw std::domain_error("digamma requires a positive argument");
    double acc = 0.0;
    while (x < 8.0) { acc -= 1.0 / x; x += 1.0; }
    // psi(x) ~ ln x - 1/2x - sum B_{2k} / (2k x^{2k})
    const double inv = 1.0 / x, inv2 = inv * inv;
    double series = std::log(x) - 0.5 * inv;
    series -= inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132)))));
    return acc + series;
}

cplx upper_incomplete_gamma(cplx a, double x) {
    if (x <= 0.0) throw std::domain_error("upper incomplete gamma needs x > 0");
    const cplx log_pref = a * std::log(x) - x; // log of x^a e^{-x}

    if (x > std::abs(a) + 4.0) {
        // Lentz's method on the standard continued fraction
        //   Gamma(a,x) = x^a e^{-x} / (x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(...)))
        const double tiny = 1e-300;
        cplx b = x + 1.0 - a;
        cplx c = 1.0 / tiny, d = 1.0 / b, h = d;
        for (int i = 1; i <= 400; ++i) {
            const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const cplx delta = d * c;
            h *= delta;
            if (std::abs(delta - 1.0) < 1e-16) break;
        }
        return std::exp(log_pref) * h;
    }

    // Lower series gamma(a,x) = x^a e^{-x} sum_n x^n / (a (a+1) ... (a+n)),
    // subtracted from the full Gamma(a).
    cplx ap = a;
    cplx term = 1.0 / a;
    cplx sum = term;
    for (int n = 1; n <= 2000; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    const cplx lower = std::exp(log_pref) * sum;
    return std::exp(log_gamma(a)) - lower;
}

} // namespace resonance::gammafn
