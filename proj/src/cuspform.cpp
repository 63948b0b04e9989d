#include "resonance/arith.hpp"

#include <cmath>
#include <vector>

namespace resonance::arith {

// tau(n) for n = 1..n_max, exactly, in 128-bit integers.
//
// eta(q)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}   (Jacobi), so the
// generating series of tau is q * S(q)^8 with S the sparse cube series.
// S^8 is built as one dense square of S followed by six dense-by-sparse
// multiplications; every intermediate stays far below the 128-bit range
// for n_max up to ~2*10^5 (|tau(n)| < n^6 and the partial products are
// coefficientwise dominated by the same growth).
std::vector<__int128> delta_tau(std::uint64_t n_max) {
    if (n_max == 0) throw parameter_error("tau series length must be positive");
    if (n_max > 200000)
        throw parameter_error("tau series length above 200000 would overflow 128-bit intermediates");
    const std::uint64_t N = n_max; // we need exponents 0..N-1 of S^8

    // Sparse terms of S: exponent k(k+1)/2, sign (-1)^k, weight 2k+1.
    std::vector<std::uint64_t> expo;
    std::vector<long long> wt;
    for (std::uint64_t k = 0;; ++k) {
        const std::uint64_t t = k * (k + 1) / 2;
        if (t >= N) break;
        expo.push_back(t);
        wt.push_back((k % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(2 * k + 1));
    }

    // S^2 by sparse-times-sparse.
    std::vector<__int128> acc(N, 0);
    for (std::size_t i = 0; i < expo.size(); ++i)
        for (std::size_t j = 0; j < expo.size(); ++j) {
            const std::uint64_t e = expo[i] + expo[j];
            if (e >= N) break;
            acc[e] += static_cast<__int128>(wt[i]) * wt[j];
        }

    // Six more factors of S, dense-times-sparse each time.
    std::vector<__int128> next(N);
    for (int pass = 0; pass < 6; ++pass) {
        std::fill(next.begin(), next.end(), static_cast<__int128>(0));
        for (std::size_t i = 0; i < expo.size(); ++i) {
            const std::uint64_t off = expo[i];
            const long long w = wt[i];
            for (std::uint64_t e = 0; e + off < N; ++e)
                next[e + off] += acc[e] * w;
        }
        acc.swap(next);
    }

    // tau(n) = coefficient of q^{n-1} in S^8.
    return acc;
}

// Hecke eigenvalues of the weight-12 level-1 form, normalized so that the
// Dirichlet series has its functional-equation symmetry at s = 1/2:
// a(n) = tau(n) / n^{11/2}.  Ramanujan-Deligne gives |a(p)| <= 2, which we
// assert as an internal consistency check on the integer arithmetic.
CoefficientSeries cuspform_coefficients(const std::string& form, std::uint64_t n_max) {
    if (form != "delta")
        throw unsupported_form_error("unknown cusp form '" + form + "' (only 'delta' is available)");
    if (n_max == 0) throw parameter_error("series length must be positive");
    const auto tau = delta_tau(n_max);
    CoefficientSeries s;
    s.label = "delta";
    s.a.resize(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const long double t = static_cast<long double>(tau[n - 1]);
        const long double scale = std::pow(static_cast<long double>(n), -5.5L);
        s.a[n - 1] = cplx(static_cast<double>(t * scale), 0.0);
    }
    const PrimeTable pt(n_max >= 2 ? n_max : 2);
    for (auto p : pt.primes()) {
        if (p > n_max) break;
        if (std::abs(s.a[p - 1].real()) > 2.0 + 1e-9)
            throw std::logic_error("eigenvalue bound violated; tau arithmetic is corrupt");
    }
    return s;
}

} // namespace resonance::arith
