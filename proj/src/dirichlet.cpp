#include "resonance/lfunc.hpp"

#include "resonance/gammafn.hpp"

#include <cmath>

namespace resonance::lfunc {

namespace {

// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q), splitting the series
// by residue class.  The strict/fast switch picks the Hurwitz backend.
template <typename HurwitzFn>
cplx dirichlet_via_hurwitz(const arith::DirichletCharacter& chi, cplx s, HurwitzFn hz) {
    const std::uint64_t q = chi.modulus();
    cplx sum = 0.0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        const cplx c = chi(a % q);
        if (c == cplx(0.0, 0.0)) continue;
        sum += c * hz(s, static_cast<double>(a) / static_cast<double>(q));
    }
    return std::exp(-s * std::log(static_cast<double>(q))) * sum;
}

// L(1, chi) for nonprincipal chi: the Hurwitz poles cancel in exact
// arithmetic but not numerically, so use the finite digamma formula
//   L(1, chi) = -(1/q) sum_{a=1}^{q-1} chi(a) psi(a/q).
cplx dirichlet_at_one(const arith::DirichletCharacter& chi) {
    const std::uint64_t q = chi.modulus();
    cplx sum = 0.0;
    for (std::uint64_t a = 1; a < q; ++a) {
        const cplx c = chi(a);
        if (c == cplx(0.0, 0.0)) continue;
        sum += c * gammafn::digamma(static_cast<double>(a) / static_cast<double>(q));
    }
    return -sum / static_cast<double>(q);
}

template <typename HurwitzFn>
cplx dirichlet_impl(const arith::DirichletCharacter& chi, cplx s, HurwitzFn hz) {
    if (s == cplx(1.0, 0.0)) {
        if (chi.is_principal())
            throw pole_error("principal-character L-function has its pole at s = 1");
        return dirichlet_at_one(chi);
    }
    return dirichlet_via_hurwitz(chi, s, hz);
}

} // namespace

cplx evaluate_dirichlet_L(const arith::DirichletCharacter& chi, cplx s) {
    return dirichlet_impl(chi, s, [](cplx z, double a) { return hurwitz_zeta(z, a); });
}

namespace detail {

cplx dirichlet_L_fast(const arith::DirichletCharacter& chi, cplx s) {
    return dirichlet_impl(chi, s, [](cplx z, double a) { return hurwitz_fast(z, a); });
}

} // namespace detail

} // namespace resonance::lfunc
