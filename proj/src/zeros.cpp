#include "resonance/lfunc.hpp"

#include <cmath>

namespace resonance::lfunc {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kQuarterPi = kPi / 4.0;

cplx contour_eval(const LFunctionSpec& spec, cplx z) {
    switch (spec.kind()) {
        case SpecKind::zeta: return detail::zeta_fast(z);
        case SpecKind::dirichlet: return detail::dirichlet_L_fast(*spec.character(), z);
        case SpecKind::cuspform: return evaluate_L(spec, z).value;
    }
    throw std::logic_error("unreachable spec kind");
}

// Total change of arg L along the segment, by adaptive phase stepping
// (every accepted increment below pi/4 in modulus, so the winding cannot
// slip by a full turn).  Throws zero_crossing_error when |L| collapses or
// the step control bottoms out.
double arg_change_on_segment(const LFunctionSpec& spec, cplx z0, cplx z1) {
    const double length = std::abs(z1 - z0);
    if (length == 0.0) return 0.0;
    const cplx dir = (z1 - z0) / length;
    double pos = 0.0;
    double h = std::min(0.25, length);
    cplx prev = contour_eval(spec, z0);
    if (std::abs(prev) < 1e-12)
        throw zero_crossing_error("contour started on top of a zero");
    double total = 0.0;
    while (pos < length) {
        h = std::min(h, length - pos);
        for (;;) {
            const cplx z = z0 + (pos + h) * dir;
            const cplx v = contour_eval(spec, z);
            if (std::abs(v) < 1e-12)
                throw zero_crossing_error("zero of the function lies on the contour");
            const double step = std::arg(v / prev);
            if (std::abs(step) > kQuarterPi && h > 1e-6 * length) {
                h *= 0.5;
                continue;
            }
            if (std::abs(step) > kQuarterPi)
                throw zero_crossing_error("phase refinement exhausted on the contour");
            total += step;
            prev = v;
            pos += h;
            h *= 1.9;
            break;
        }
    }
    return total;
}

} // namespace

int count_zeros_rectangle(const LFunctionSpec& spec, double sigma_low, double t1, double t2) {
    if (t2 < t1) throw parameter_error("rectangle needs t2 >= t1");
    if (sigma_low >= 3.0) throw parameter_error("rectangle needs sigma_low < 3 (right edge)");
    if (t1 == t2) return 0;

    // Expand the rectangle by `nudge` when a zero sits on the boundary; the
    // perturbation stays below 1e-3 in total.
    for (int attempt = 0; attempt < 4; ++attempt) {
        const double nudge = 2.5e-4 * attempt;
        const double sl = sigma_low - nudge;
        const double sr = 3.0 + nudge;
        const double lo = t1 - nudge;
        const double hi = t2 + nudge;
        try {
            double w = 0.0;
            w += arg_change_on_segment(spec, cplx(sr, lo), cplx(sr, hi)); // right, upward
            w += arg_change_on_segment(spec, cplx(sr, hi), cplx(sl, hi)); // top, leftward
            w += arg_change_on_segment(spec, cplx(sl, hi), cplx(sl, lo)); // left, downward
            w += arg_change_on_segment(spec, cplx(sl, lo), cplx(sr, lo)); // bottom, rightward
            const double turns = w / (2.0 * kPi);
            const long rounded = std::lround(turns);
            if (std::abs(turns - static_cast<double>(rounded)) > 0.05)
                throw contour_error("winding number failed to close up to an integer");
            long zeros = rounded;
            // The winding counts zeros minus poles; put the pole at s = 1
            // back when the rectangle contains it.
            if (spec.pole_order() > 0 && sl < 1.0 && 1.0 < sr && lo < 0.0 && 0.0 < hi)
                zeros += spec.pole_order();
            if (zeros < 0)
                throw contour_error("negative winding after pole correction");
            return static_cast<int>(zeros);
        } catch (const zero_crossing_error&) {
            // boundary too close to a zero: widen a little and retry
            continue;
        }
    }
    throw contour_error("zero stayed on the contour after maximum nudging");
}

} // namespace resonance::lfunc
