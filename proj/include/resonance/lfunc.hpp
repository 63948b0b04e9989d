#pragma once

#include "resonance/arith.hpp"
#include "resonance/errors.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

// L-function evaluation: the Riemann zeta function and Dirichlet L-functions
// anywhere in the usual strip via Euler-Maclaurin, the weight-12 cusp form
// via an incomplete-gamma functional-equation sum, logarithms by continuous
// branch tracking, fractional-power Euler coefficients, and zero counting
// by the argument principle.

namespace resonance::lfunc {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// GL(1) evaluators

// zeta(s) by Euler-Maclaurin with conservative truncation (relative error
// ~1e-12 for 0 <= Re s <= 3, |Im s| up to 1e8 in principle; runtime grows
// linearly with |Im s|).  Throws pole_error at s = 1.
cplx evaluate_zeta(cplx s);

// Hurwitz zeta(s, a) for 0 < a <= 1, same method and domain.  The pole at
// s = 1 throws; zeta(s, 1) = zeta(s).
cplx hurwitz_zeta(cplx s, double a);

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q).  Principal chi inherits the
// pole at s = 1; nonprincipal chi at s = 1 goes through a finite digamma
// formula instead of the (cancelling) Hurwitz poles.
cplx evaluate_dirichlet_L(const arith::DirichletCharacter& chi, cplx s);

// Riemann-Siegel: theta(t) by its asymptotic series (t >= 16), and
// Z(t) = 2 sum_{n <= m} cos(theta - t log n)/sqrt(n) + first correction,
// so |Z(t)| = |zeta(1/2+it)| with absolute error O(t^{-3/4}).  These are
// the bulk-scan path on the critical line for large t.
double riemann_siegel_theta(double t);
double riemann_siegel_Z(double t);

namespace detail {
// Reduced-truncation Euler-Maclaurin variants for bulk scans (quadrature
// loops, contour walks).  Cross-validated against the strict evaluators in
// the unit tests; accuracy ~1e-9 on the test window.
cplx zeta_fast(cplx s);
cplx hurwitz_fast(cplx s, double a);
cplx dirichlet_L_fast(const arith::DirichletCharacter& chi, cplx s);
} // namespace detail

// ---------------------------------------------------------------------------
// L-function data model

enum class SpecKind { zeta, dirichlet, cuspform };

// One L-function: enough Euler-product data to drive every consumer here
// (coefficients for Dirichlet polynomials, local roots for fractional
// powers, analytic data for evaluation).  Copyable value type.
class LFunctionSpec {
public:
    static LFunctionSpec make_zeta();
    static LFunctionSpec make_dirichlet(arith::DirichletCharacter chi);
    // form: currently "delta".  n_max bounds the coefficient table used by
    // direct series; local roots at any prime <= n_max are available.
    static LFunctionSpec make_cuspform(const std::string& form, std::uint64_t n_max = 200000);

    const std::string& label() const { return label_; }
    SpecKind kind() const { return kind_; }
    int degree() const { return degree_; }
    double theta() const { return theta_; }        // Ramanujan bound exponent
    double kappa() const { return kappa_; }        // density of |a(p)|^2 in the PNT sense
    int pole_order() const { return pole_order_; } // at s = 1

    // Inverse local roots alpha_j(p), j <= degree, |alpha_j| <= p^theta.
    std::vector<cplx> local_roots(std::uint64_t p) const;

    // Dirichlet coefficient a(n).
    cplx coefficient(std::uint64_t n) const;

    // The first n_max coefficients as a series (label preserved).
    arith::CoefficientSeries coefficients(std::uint64_t n_max) const;

    const arith::DirichletCharacter* character() const { return chi_.get(); }

private:
    LFunctionSpec() = default;
    SpecKind kind_ = SpecKind::zeta;
    std::string label_;
    int degree_ = 1;
    double theta_ = 0.0;
    double kappa_ = 1.0;
    int pole_order_ = 0;
    std::shared_ptr<const arith::DirichletCharacter> chi_;
    std::shared_ptr<const arith::CoefficientSeries> cusp_; // cusp-form coefficients
};

// Value with an attached absolute error estimate.
struct LValue {
    cplx value;
    double abs_error;
};

// Evaluate the spec's L-function.  zeta/Dirichlet specs delegate to the
// Euler-Maclaurin evaluators (documented domain: 0 <= Re s <= 3, any
// reachable |Im s|); cusp-form specs use an exact functional-equation sum
// with incomplete-gamma weights, supported for -1 <= Re s <= 3 and
// |Im s| <= 50.  Outside the supported region: unsupported_region_error.
LValue evaluate_L(const LFunctionSpec& spec, cplx s);

// Branch path for log L: straight up from the anchor on the real axis
// (default 2), then horizontally to the target.
struct LogBranchPath {
    double anchor = 2.0;
};

// log L(s) continued from the Euler-product value at the anchor along the
// vertical-then-horizontal path, with adaptive phase tracking.  Throws
// zero_crossing_error if refinement drives the step below minimum near a
// zero of |L| on the path.
cplx log_L(const LFunctionSpec& spec, cplx s, const LogBranchPath& path = {});

// tau_q(p^k) = Gamma(q+k) / (k! Gamma(q)) by the exact recurrence
// tau_q(p^0) = 1, tau_q(p^k) = tau_q(p^{k-1}) (q+k-1)/k.
double tau_q(double q, unsigned k);

// Fractional-power Euler coefficients at one prime: c[nu] is the
// coefficient of X^nu in prod_{h} prod_{j} (1 - alpha_{h,j}(p) X)^{-q}.
// in_P records which of the two multiplicative functions (support inside
// or outside the resonator prime set) these values belong to.
struct FractionalCoefficients {
    double q;
    std::uint64_t p;
    bool in_P;
    std::vector<cplx> c; // c[nu], nu = 0..nu_max
};

FractionalCoefficients fractional_coefficients(const std::vector<LFunctionSpec>& specs,
                                               double q, std::uint64_t p, unsigned nu_max,
                                               bool in_P);

// Zeros rho with Re rho >= sigma_low and t1 <= Im rho <= t2, counted with
// multiplicity by the winding number of L around the rectangle with right
// edge at Re s = 3.  The contour is nudged by up to 1e-3 (a few attempts)
// if a zero sits too close to it; after that, contour_error.
int count_zeros_rectangle(const LFunctionSpec& spec, double sigma_low, double t1, double t2);

} // namespace resonance::lfunc
