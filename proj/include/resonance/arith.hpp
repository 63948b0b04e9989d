#ifndef RESONANCE_ARITH_HPP
#define RESONANCE_ARITH_HPP

// Shared arithmetic layer: prime sieve, Dirichlet characters given by
// generator-exponent indices, coefficient series for the supported forms, and
// a little binary cache so expensive coefficient runs are computed once.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "resonance/errors.hpp"

namespace resonance::arith {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Primes

class PrimeTable {
public:
    // Sieve of Eratosthenes over [2, limit].  limit >= 2.
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const;
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    // Number of primes <= x (x <= limit).
    std::size_t count_leq(std::uint64_t x) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint8_t> composite_; // composite_[i] refers to the integer i
    std::vector<std::uint64_t> primes_;
};

// Throws parameter_error for limit < 2 (empty sieve domain).
PrimeTable sieve_primes(std::uint64_t limit);

// ---------------------------------------------------------------------------
// Dirichlet characters
//
// The unit group mod q is decomposed into cyclic factors with fixed
// generators; a character is an exponent vector k against those generators,
// with chi(g_i) = exp(2 pi i k_i / d_i).  Values are tabulated over a full
// period so evaluation is an array lookup.

class DirichletCharacter {
public:
    DirichletCharacter(std::uint64_t modulus, std::vector<std::uint64_t> index);

    std::uint64_t modulus() const { return q_; }
    const std::vector<std::uint64_t>& index() const { return index_; }
    const std::vector<std::uint64_t>& component_orders() const { return orders_; }
    bool is_principal() const;
    // chi(n); 0 when gcd(n, q) > 1.
    cplx operator()(std::uint64_t n) const { return table_[n % q_]; }
    // Order of the character in the dual group.
    std::uint64_t order() const;
    // Compact label, e.g. "chi4.1" for the nonprincipal character mod 4.
    std::string label() const;

private:
    std::uint64_t q_;
    std::vector<std::uint64_t> index_;  // exponent against each generator
    std::vector<std::uint64_t> orders_; // cyclic factor orders d_i
    std::vector<cplx> table_;           // chi(n) for n = 0..q-1
};

// Validates q >= 1 and the exponent vector length/ranges.
// Throws invalid_index_error on a vector inconsistent with the group
// structure, parameter_error on q = 0 or q > 10^6.
DirichletCharacter dirichlet_character(std::uint64_t q, const std::vector<std::uint64_t>& index);

// All characters mod q in deterministic order (index vectors in mixed-radix
// counting order); the principal character comes first.
std::vector<DirichletCharacter> all_characters(std::uint64_t q);

// ---------------------------------------------------------------------------
// Coefficient series

// Dirichlet coefficients a(1..n_max) of some form, with a stable label.
struct CoefficientSeries {
    std::string label;
    std::vector<cplx> a; // a[n-1] = a(n)
    std::uint64_t n_max() const { return a.size(); }
    cplx at(std::uint64_t n) const { return a[n - 1]; }
};

// Exact integer Fourier coefficients of the weight-12 discriminant form,
// tau(1..n_max), computed from the eighth power of Jacobi's cube identity for
// the eta function.  Values are exact in 128-bit integers (safe for
// n_max <= 2*10^5).
std::vector<__int128> delta_tau(std::uint64_t n_max);

// Arithmetically normalized coefficients a(n) = tau(n) / n^{11/2} so that the
// Euler-product roots sit on the unit circle.  Only form == "delta" is
// shipped; anything else raises unsupported_form_error.  The Deligne bound
// |a(p)| <= 2 is asserted at every prime (an internal-consistency check on
// the expansion).
CoefficientSeries cuspform_coefficients(const std::string& form, std::uint64_t n_max);

// Materialize chi(1..n_max) as a series.
CoefficientSeries series_from_character(const DirichletCharacter& chi, std::uint64_t n_max);
// Constant-one coefficients (the zeta series).
CoefficientSeries series_ones(std::uint64_t n_max);

// ---------------------------------------------------------------------------
// Prime correlation

struct Correlation {
    cplx value = 0.0;  // (log x / x) * sum_{p <= x} a_A(p) * conj(a_B(p))
    bool empty = false; // set when x < 2 (no primes in range)
};

// Normalized prime correlation of two coefficient series.  With A = B this
// estimates the Rankin-Selberg density (limit 1 for the supported forms);
// for nonequivalent forms it decays to 0.  Requires n_max of both series
// >= x unless x < 2.
Correlation coeff_correlation(const CoefficientSeries& A, const CoefficientSeries& B,
                              std::uint64_t x, const PrimeTable& primes);

// ---------------------------------------------------------------------------
// Coefficient cache
//
// One file per label under a cache directory:
//   "RCOF" magic | u32 version | u32 label length | label bytes |
//   u64 n_max | n_max * (f64 re, f64 im) records, all little-endian.

class CoefficientCache {
public:
    explicit CoefficientCache(std::string directory);
    const std::string& directory() const { return dir_; }

    // Overwrites any existing entry with the same label.
    void write(const CoefficientSeries& series) const;
    // Throws cache_not_found_error / cache_integrity_error.
    CoefficientSeries read(const std::string& label) const;
    bool contains(const std::string& label) const;

    // Full path of the file a given label is stored under.
    std::string path_for(const std::string& label) const;

private:
    std::string dir_;
};

} // namespace resonance::arith

#endif
