#include "resonance/lfunc.hpp"

#include <cmath>

namespace resonance::lfunc {

namespace {

// Evaluator used while walking a path: the reduced-truncation variants for
// the GL(1) specs (paths can climb to large t), the functional-equation sum
// for the cusp form (domain enforced by evaluate_L itself).
cplx path_eval(const LFunctionSpec& spec, cplx z) {
    switch (spec.kind()) {
        case SpecKind::zeta: return detail::zeta_fast(z);
        case SpecKind::dirichlet: return detail::dirichlet_L_fast(*spec.character(), z);
        case SpecKind::cuspform: return evaluate_L(spec, z).value;
    }
    throw std::logic_error("unreachable spec kind");
}

// Continue log L from (start, log_start) to the point `stop` along the
// straight segment, keeping each phase increment below pi/4 by step
// halving.  Throws zero_crossing_error when refinement bottoms out or the
// modulus collapses, both of which mean a zero (or pole) sits on or next
// to the segment.
cplx continue_segment(const LFunctionSpec& spec, cplx start, cplx stop, cplx log_start,
                      cplx value_start) {
    const double length = std::abs(stop - start);
    if (length == 0.0) return log_start;
    const cplx dir = (stop - start) / length;
    double pos = 0.0;
    double h = std::min(0.5, length);
    cplx logv = log_start;
    cplx prev = value_start;
    while (pos < length) {
        h = std::min(h, length - pos);
        for (;;) {
            const cplx z = start + (pos + h) * dir;
            const cplx v = path_eval(spec, z);
            if (std::abs(v) < 1e-13 * (1.0 + std::abs(prev)))
                throw zero_crossing_error("log continuation hit a zero of the function");
            const cplx ratio_log = std::log(v / prev); // principal; |Im| <= pi
            if (std::abs(ratio_log.imag()) > 0.785398163397448309616 && h > 1e-9) {
                h *= 0.5;
                continue;
            }
            if (std::abs(ratio_log.imag()) > 0.785398163397448309616)
                throw zero_crossing_error(
                    "phase step would not settle below pi/4; zero adjacent to the path");
            logv += ratio_log;
            prev = v;
            pos += h;
            h *= 1.9; // relax the step after a success
            break;
        }
    }
    return logv;
}

} // namespace

cplx log_L(const LFunctionSpec& spec, cplx s, const LogBranchPath& path) {
    if (path.anchor < 1.5)
        throw parameter_error("branch anchor must lie in the absolute-convergence range (>= 1.5)");
    // At the anchor the Euler product gives |log L| <= d log zeta(anchor) < pi
    // for the degrees in scope, so the principal logarithm IS the continued
    // value there; everything else is continuation.
    const cplx anchor_pt(path.anchor, 0.0);
    const cplx v0 = path_eval(spec, anchor_pt);
    cplx logv = std::log(v0);
    const cplx corner(path.anchor, s.imag());
    logv = continue_segment(spec, anchor_pt, corner, logv, v0);
    const cplx v1 = path_eval(spec, corner);
    logv = continue_segment(spec, corner, s, logv, v1);
    return logv;
}

} // namespace resonance::lfunc
