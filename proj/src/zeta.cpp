#include "resonance/lfunc.hpp"

#include "resonance/gammafn.hpp"

#include <cmath>

namespace resonance::lfunc {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

// B_{2k} / (2k)! for the Euler-Maclaurin correction terms, k = 1..8.
constexpr double kEmCoef[8] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

struct KahanCplx {
    cplx sum{0.0, 0.0};
    cplx carry{0.0, 0.0};
    void add(cplx x) {
        const cplx y = x - carry;
        const cplx t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Euler-Maclaurin for zeta(s, a) with N initial terms:
//   sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//   + sum_k B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}.
// The caller picks N; 8 correction terms throughout.
cplx euler_maclaurin(cplx s, double a, std::uint64_t N) {
    KahanCplx acc;
    // Smallest terms first (sigma > 0 in all our uses).
    for (std::uint64_t n = N; n-- > 0;) {
        const double base = static_cast<double>(n) + a;
        acc.add(std::exp(-s * std::log(base)));
    }
    const double base = static_cast<double>(N) + a;
    const double lb = std::log(base);
    acc.add(std::exp((1.0 - s) * lb) / (s - 1.0));
    const cplx invp = std::exp(-s * lb);
    acc.add(0.5 * invp);
    cplx poch = s;                      // (s)_{2k-1}, updated per k
    cplx fac = invp / base;             // (N+a)^{-s-2k+1}, updated per k
    const double inv2 = 1.0 / (base * base);
    for (int k = 1; k <= 8; ++k) {
        acc.add(kEmCoef[k - 1] * poch * fac);
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        fac *= inv2;
    }
    return acc.sum;
}

std::uint64_t strict_N(cplx s) {
    return static_cast<std::uint64_t>(std::ceil(3.0 * (std::abs(s.imag()) + 10.0)));
}

std::uint64_t fast_N(cplx s) {
    // N = t/2 keeps the eight-term correction block's truncation error
    // below ~1e-10 uniformly in t (the t/3 choice already leaks ~1e-7
    // around t ~ 100, where the N^{1/2}/t prefactor is least helpful).
    const double t = std::abs(s.imag());
    return static_cast<std::uint64_t>(std::max(32.0, std::ceil(t / 2.0)));
}

void check_pole(cplx s) {
    if (s == cplx(1.0, 0.0))
        throw pole_error("zeta has its pole at s = 1");
}

void check_hurwitz_a(double a) {
    if (!(a > 0.0) || a > 1.0)
        throw parameter_error("Hurwitz shift must satisfy 0 < a <= 1");
}

} // namespace

cplx evaluate_zeta(cplx s) {
    check_pole(s);
    return euler_maclaurin(s, 1.0, strict_N(s));
}

cplx hurwitz_zeta(cplx s, double a) {
    check_pole(s);
    check_hurwitz_a(a);
    return euler_maclaurin(s, a, strict_N(s));
}

namespace detail {

cplx zeta_fast(cplx s) {
    check_pole(s);
    return euler_maclaurin(s, 1.0, fast_N(s));
}

cplx hurwitz_fast(cplx s, double a) {
    check_pole(s);
    check_hurwitz_a(a);
    return euler_maclaurin(s, a, fast_N(s));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Riemann-Siegel

double riemann_siegel_theta(double t) {
    if (t < 64.0) {
        // Im log Gamma(1/4 + it/2) - (t/2) log pi, exact route for small t.
        const cplx lg = gammafn::log_gamma(cplx(0.25, 0.5 * t));
        return lg.imag() - 0.5 * t * std::log(kPi);
    }
    // Asymptotic series; error well below 1e-12 here.
    const double lt = std::log(t / kTwoPi);
    const double t2 = t * t;
    return 0.5 * t * lt - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) +
           31.0 / (80640.0 * t2 * t2 * t);
}

namespace {

// First Riemann-Siegel correction term C0(p), stabilized near the zeros of
// cos(2 pi p) at p = 1/4, 3/4 (the numerator vanishes there too; the limit
// value is 1/2) by interpolating across the removable singularity.
double rs_C0(double p) {
    auto raw = [](double x) {
        return std::cos(kTwoPi * (x * x - x - 1.0 / 16.0)) / std::cos(kTwoPi * x);
    };
    const double d1 = std::abs(p - 0.25), d2 = std::abs(p - 0.75);
    const double d = std::min(d1, d2);
    if (d > 0.02) return raw(p);
    const double p0 = (d1 < d2) ? 0.25 : 0.75;
    const double lo = raw(p0 - 0.02), hi = raw(p0 + 0.02);
    const double u = (p - (p0 - 0.02)) / 0.04;
    return lo + u * (hi - lo);
}

} // namespace

double riemann_siegel_Z(double t) {
    if (!(t > 0.0)) throw parameter_error("Z(t) is evaluated for t > 0 only");
    if (t < 50000.0) {
        // Rotate the Euler-Maclaurin value; strict below 64 (cheap there),
        // reduced truncation above.
        const cplx z = (t < 64.0) ? evaluate_zeta(cplx(0.5, t)) : detail::zeta_fast(cplx(0.5, t));
        const double th = riemann_siegel_theta(t);
        return (std::exp(cplx(0.0, th)) * z).real();
    }
    const double q = std::sqrt(t / kTwoPi);
    const std::uint64_t m = static_cast<std::uint64_t>(std::floor(q));
    const double p = q - static_cast<double>(m);
    const double th = riemann_siegel_theta(t);
    // Grid scans call this tens of millions of times; keep the n-dependent
    // factors in static tables (single-threaded by design, see README).
    static std::vector<double> logs{0.0, 0.0};   // logs[n] = log n
    static std::vector<double> isqrt{0.0, 1.0};  // isqrt[n] = 1/sqrt(n)
    while (logs.size() <= m) {
        const double n = static_cast<double>(logs.size());
        logs.push_back(std::log(n));
        isqrt.push_back(1.0 / std::sqrt(n));
    }
    double sum = 0.0;
    for (std::uint64_t n = 1; n <= m; ++n) sum += std::cos(th - t * logs[n]) * isqrt[n];
    double z = 2.0 * sum;
    const double corr = ((m % 2 == 1) ? 1.0 : -1.0) * std::pow(t / kTwoPi, -0.25) * rs_C0(p);
    return z + corr;
}

} // namespace resonance::lfunc
