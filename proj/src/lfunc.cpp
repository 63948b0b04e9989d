#include "resonance/lfunc.hpp"

#include "resonance/gammafn.hpp"

#include <cmath>

namespace resonance::lfunc {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kCuspShift = 5.5; // half of (weight - 1) for weight 12
} // namespace

// ---------------------------------------------------------------------------
// LFunctionSpec

LFunctionSpec LFunctionSpec::make_zeta() {
    LFunctionSpec s;
    s.kind_ = SpecKind::zeta;
    s.label_ = "zeta";
    s.degree_ = 1;
    s.theta_ = 0.0;
    s.kappa_ = 1.0;
    s.pole_order_ = 1;
    return s;
}

LFunctionSpec LFunctionSpec::make_dirichlet(arith::DirichletCharacter chi) {
    LFunctionSpec s;
    s.kind_ = SpecKind::dirichlet;
    s.label_ = chi.label();
    s.degree_ = 1;
    s.theta_ = 0.0;
    s.kappa_ = 1.0;
    s.pole_order_ = chi.is_principal() ? 1 : 0;
    s.chi_ = std::make_shared<const arith::DirichletCharacter>(std::move(chi));
    return s;
}

LFunctionSpec LFunctionSpec::make_cuspform(const std::string& form, std::uint64_t n_max) {
    LFunctionSpec s;
    s.kind_ = SpecKind::cuspform;
    s.degree_ = 2;
    s.theta_ = 0.0;
    s.kappa_ = 1.0;
    s.pole_order_ = 0;
    s.cusp_ = std::make_shared<const arith::CoefficientSeries>(
        arith::cuspform_coefficients(form, n_max));
    s.label_ = s.cusp_->label;
    return s;
}

std::vector<cplx> LFunctionSpec::local_roots(std::uint64_t p) const {
    switch (kind_) {
        case SpecKind::zeta:
            return {cplx(1.0, 0.0)};
        case SpecKind::dirichlet:
            return {(*chi_)(p)};
        case SpecKind::cuspform: {
            if (p > cusp_->n_max())
                throw parameter_error("prime beyond the cusp-form coefficient table");
            // Roots of x^2 - a(p) x + 1 with |a(p)| <= 2: a conjugate pair
            // on the unit circle.
            const double a = cusp_->at(p).real();
            const double half = 0.5 * a;
            const double disc = 1.0 - half * half;
            const double im = disc > 0.0 ? std::sqrt(disc) : 0.0;
            return {cplx(half, im), cplx(half, -im)};
        }
    }
    throw std::logic_error("unreachable spec kind");
}

cplx LFunctionSpec::coefficient(std::uint64_t n) const {
    if (n == 0) throw parameter_error("Dirichlet coefficients are indexed from 1");
    switch (kind_) {
        case SpecKind::zeta:
            return cplx(1.0, 0.0);
        case SpecKind::dirichlet:
            return (*chi_)(n);
        case SpecKind::cuspform:
            if (n > cusp_->n_max())
                throw parameter_error("index beyond the cusp-form coefficient table");
            return cusp_->at(n);
    }
    throw std::logic_error("unreachable spec kind");
}

arith::CoefficientSeries LFunctionSpec::coefficients(std::uint64_t n_max) const {
    switch (kind_) {
        case SpecKind::zeta:
            return arith::series_ones(n_max);
        case SpecKind::dirichlet:
            return arith::series_from_character(*chi_, n_max);
        case SpecKind::cuspform: {
            if (n_max > cusp_->n_max())
                throw parameter_error("requested length beyond the cusp-form coefficient table");
            arith::CoefficientSeries out;
            out.label = label_;
            out.a.assign(cusp_->a.begin(), cusp_->a.begin() + static_cast<std::ptrdiff_t>(n_max));
            return out;
        }
    }
    throw std::logic_error("unreachable spec kind");
}

// ---------------------------------------------------------------------------
// evaluate_L

namespace {

// Completed-function sum for the weight-12 form.  With c = 11/2 and
// gamma(s) = (2pi)^{-(s+c)} Gamma(s+c), unfolding the Mellin integral and
// applying modularity at the split point x = 1 gives the exact identity
//   Lambda(s) = sum_n tau(n) [ (2pi n)^{-(s+c)}  Gamma(s+c,  2pi n)
//                            + (2pi n)^{-(1-s+c)} Gamma(1-s+c, 2pi n) ],
// valid for every s; the n-th term decays like e^{-2pi n}, so a short sum
// suffices.  L(s) = Lambda(s) (2pi)^{s+c} / Gamma(s+c).
cplx cusp_functional_sum(const arith::CoefficientSeries& coeffs, cplx s) {
    const cplx sc = s + kCuspShift;
    const cplx rc = (1.0 - s) + kCuspShift;
    cplx lambda = 0.0;
    for (std::uint64_t n = 1; n <= 24; ++n) {
        const double x = kTwoPi * static_cast<double>(n);
        const double tau_n =
            coeffs.at(n).real() * std::pow(static_cast<double>(n), kCuspShift);
        const cplx left = std::exp(-sc * std::log(x)) * gammafn::upper_incomplete_gamma(sc, x);
        const cplx right = std::exp(-rc * std::log(x)) * gammafn::upper_incomplete_gamma(rc, x);
        lambda += tau_n * (left + right);
    }
    const cplx norm = std::exp(sc * std::log(kTwoPi) - gammafn::log_gamma(sc));
    return lambda * norm;
}

} // namespace

LValue evaluate_L(const LFunctionSpec& spec, cplx s) {
    switch (spec.kind()) {
        case SpecKind::zeta: {
            if (s.real() < -1.0 || s.real() > 4.0)
                throw unsupported_region_error("zeta evaluation is supported for -1 <= Re s <= 4");
            const cplx v = evaluate_zeta(s);
            return {v, 1e-10 * (1.0 + std::abs(v))};
        }
        case SpecKind::dirichlet: {
            if (s.real() < -1.0 || s.real() > 4.0)
                throw unsupported_region_error(
                    "Dirichlet L evaluation is supported for -1 <= Re s <= 4");
            const cplx v = evaluate_dirichlet_L(*spec.character(), s);
            return {v, 1e-9 * (1.0 + std::abs(v))};
        }
        case SpecKind::cuspform: {
            if (s.real() < -1.0 || s.real() > 3.0 || std::abs(s.imag()) > 50.0)
                throw unsupported_region_error(
                    "cusp-form evaluation is supported for -1 <= Re s <= 3, |Im s| <= 50");
            const cplx v = cusp_functional_sum(spec.coefficients(24), s);
            return {v, 1e-8 * (1.0 + std::abs(v))};
        }
    }
    throw std::logic_error("unreachable spec kind");
}

// ---------------------------------------------------------------------------
// tau_q and fractional coefficients

double tau_q(double q, unsigned k) {
    if (!(q > 0.0)) throw parameter_error("tau_q needs q > 0");
    double v = 1.0;
    for (unsigned j = 1; j <= k; ++j) v *= (q + static_cast<double>(j) - 1.0) / static_cast<double>(j);
    return v;
}

FractionalCoefficients fractional_coefficients(const std::vector<LFunctionSpec>& specs,
                                               double q, std::uint64_t p, unsigned nu_max,
                                               bool in_P) {
    if (!(q > 0.0)) throw parameter_error("fractional power q must be positive");
    if (p < 2) throw parameter_error("fractional coefficients live at a prime");
    FractionalCoefficients out;
    out.q = q;
    out.p = p;
    out.in_P = in_P;
    out.c.assign(nu_max + 1, cplx(0.0, 0.0));
    out.c[0] = 1.0;
    // Multiply the per-root series (1 - alpha X)^{-q} = sum_k tau_q(k) alpha^k X^k
    // into the accumulator, one root at a time, truncating at nu_max.
    std::vector<cplx> acc(nu_max + 1, cplx(0.0, 0.0));
    for (const auto& spec : specs) {
        for (const cplx alpha : spec.local_roots(p)) {
            std::fill(acc.begin(), acc.end(), cplx(0.0, 0.0));
            cplx apow = 1.0;
            for (unsigned k = 0; k <= nu_max; ++k) {
                const cplx factor = tau_q(q, k) * apow;
                for (unsigned j = 0; j + k <= nu_max; ++j) acc[j + k] += factor * out.c[j];
                apow *= alpha;
            }
            out.c = acc;
        }
    }
    return out;
}

} // namespace resonance::lfunc
