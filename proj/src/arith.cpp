#include "resonance/arith.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>

namespace resonance::arith {

// ---------------------------------------------------------------------------
// PrimeTable

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2)
        throw parameter_error("sieve limit must be >= 2 (empty prime domain)");
    composite_.assign(limit + 1, 0);
    composite_[0] = composite_[1] = 1;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite_[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite_[i]) primes_.push_back(i);
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n > limit_) throw parameter_error("is_prime query beyond sieve limit");
    return !composite_[n];
}

std::size_t PrimeTable::count_leq(std::uint64_t x) const {
    if (x > limit_) throw parameter_error("count_leq query beyond sieve limit");
    return static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

PrimeTable sieve_primes(std::uint64_t limit) { return PrimeTable(limit); }

// ---------------------------------------------------------------------------
// Unit group structure mod q

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((__int128)r * b % m);
        b = static_cast<std::uint64_t>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> d;
    for (auto& [p, e] : factorize(n)) d.push_back(p);
    return d;
}

// Smallest primitive root mod the odd prime power p^e.
std::uint64_t primitive_root(std::uint64_t p, unsigned e) {
    const auto qs = prime_divisors(p - 1);
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto r : qs)
            if (pow_mod(g, (p - 1) / r, p) == 1) { ok = false; break; }
        if (ok) break;
    }
    if (e == 1) return g;
    // Lift: g generates mod p^e unless g^{p-1} = 1 mod p^2, in which case g+p does.
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
    return g;
}

struct UnitComponent {
    std::uint64_t prime_power; // the modulus piece this component lives in
    std::uint64_t generator;
    std::uint64_t order;
};

// Cyclic decomposition of (Z/q)^* with explicit generators.
std::vector<UnitComponent> unit_components(std::uint64_t q) {
    std::vector<UnitComponent> comps;
    for (auto& [p, e] : factorize(q)) {
        std::uint64_t m = 1;
        for (unsigned i = 0; i < e; ++i) m *= p;
        if (p == 2) {
            if (e == 1) continue;            // (Z/2)^* trivial
            if (e == 2) {
                comps.push_back({m, 3, 2});  // <-1> mod 4
            } else {
                comps.push_back({m, m - 1, 2});          // <-1>
                comps.push_back({m, 5, m / 4});           // <5>, order 2^{e-2}
            }
        } else {
            std::uint64_t phi = m / p * (p - 1);
            comps.push_back({m, primitive_root(p, e), phi});
        }
    }
    return comps;
}

} // namespace

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<std::uint64_t> index)
    : q_(modulus), index_(std::move(index)) {
    if (q_ == 0 || q_ > 1000000)
        throw parameter_error("character modulus must be in [1, 10^6]");
    const auto comps = unit_components(q_);
    if (index_.size() != comps.size())
        throw invalid_index_error("character index length does not match the unit group rank");
    orders_.clear();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        orders_.push_back(comps[i].order);
        if (index_[i] >= comps[i].order)
            throw invalid_index_error("character index exponent exceeds its cyclic factor order");
    }

    // Discrete-log tables, one per component.  Odd prime powers and 2^2 are
    // plain cyclic dlogs.  For 2^e with e >= 3 every odd residue is uniquely
    // (-1)^s 5^j, so the <-1> table stores s and the <5> table stores j,
    // filled in one joint pass.
    std::vector<std::vector<std::uint32_t>> dlog(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        if (c.prime_power % 2 == 0 && c.prime_power >= 8) {
            if (c.generator != 5) continue; // handled together with its <5> partner
            const std::uint64_t m = c.prime_power;
            dlog[i - 1].assign(m, 0); // sign exponent s
            dlog[i].assign(m, 0);     // 5-exponent j
            std::uint64_t v = 1;
            for (std::uint64_t j = 0; j < c.order; ++j) {
                dlog[i][v] = static_cast<std::uint32_t>(j);
                dlog[i][m - v] = static_cast<std::uint32_t>(j);
                dlog[i - 1][m - v] = 1;
                v = v * 5 % m;
            }
        } else {
            dlog[i].assign(c.prime_power, 0);
            std::uint64_t v = 1;
            for (std::uint64_t j = 0; j < c.order; ++j) {
                dlog[i][v] = static_cast<std::uint32_t>(j);
                v = static_cast<std::uint64_t>((__int128)v * c.generator % c.prime_power);
            }
        }
    }
    table_.assign(q_, cplx(0.0, 0.0));
    for (std::uint64_t n = 0; n < q_; ++n) {
        if (std::gcd(n, q_) != 1) continue;
        long double phase = 0.0L; // sum of k_i * dlog_i(n) / d_i, mod 1
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const auto& c = comps[i];
            const std::uint64_t j = dlog[i][n % c.prime_power];
            phase += static_cast<long double>((index_[i] * (j % c.order)) % c.order) / c.order;
        }
        phase -= std::floor(phase);
        const long double ang = 2.0L * 3.14159265358979323846264338327950288L * phase;
        table_[n] = cplx(static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang)));
    }
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(index_.begin(), index_.end(), [](std::uint64_t k) { return k == 0; });
}

std::uint64_t DirichletCharacter::order() const {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < index_.size(); ++i) {
        std::uint64_t d = orders_[i] / std::gcd(orders_[i], index_[i] == 0 ? orders_[i] : index_[i]);
        ord = std::lcm(ord, d);
    }
    return ord;
}

std::string DirichletCharacter::label() const {
    std::string s = "chi" + std::to_string(q_) + ".";
    if (index_.empty()) s += "0";
    for (std::size_t i = 0; i < index_.size(); ++i) {
        if (i) s += "_";
        s += std::to_string(index_[i]);
    }
    return s;
}

DirichletCharacter dirichlet_character(std::uint64_t q, const std::vector<std::uint64_t>& index) {
    return DirichletCharacter(q, index);
}

std::vector<DirichletCharacter> all_characters(std::uint64_t q) {
    const auto comps = unit_components(q);
    std::vector<std::uint64_t> idx(comps.size(), 0);
    std::vector<DirichletCharacter> out;
    for (;;) {
        out.emplace_back(q, idx);
        // mixed-radix increment, last component fastest
        std::size_t i = comps.size();
        while (i > 0) {
            --i;
            if (++idx[i] < comps[i].order) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (comps.empty()) return out; // q in {1, 2}: only the principal character
    }
}

// ---------------------------------------------------------------------------
// Series helpers

CoefficientSeries series_from_character(const DirichletCharacter& chi, std::uint64_t n_max) {
    if (n_max == 0) throw parameter_error("series length must be positive");
    CoefficientSeries s;
    s.label = chi.label();
    s.a.resize(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) s.a[n - 1] = chi(n);
    return s;
}

CoefficientSeries series_ones(std::uint64_t n_max) {
    if (n_max == 0) throw parameter_error("series length must be positive");
    return CoefficientSeries{"zeta", std::vector<cplx>(n_max, cplx(1.0, 0.0))};
}

// ---------------------------------------------------------------------------
// Correlation

Correlation coeff_correlation(const CoefficientSeries& A, const CoefficientSeries& B,
                              std::uint64_t x, const PrimeTable& primes) {
    if (x < 2) return Correlation{cplx(0.0, 0.0), true};
    if (x > primes.limit())
        throw parameter_error("correlation bound exceeds the sieve limit");
    if (A.n_max() < x || B.n_max() < x)
        throw parameter_error("coefficient series shorter than the correlation bound");
    cplx sum = 0.0;
    for (auto p : primes.primes()) {
        if (p > x) break;
        sum += A.at(p) * std::conj(B.at(p));
    }
    const double scale = std::log(static_cast<double>(x)) / static_cast<double>(x);
    return Correlation{scale * sum, false};
}

// ---------------------------------------------------------------------------
// Cache

static_assert(std::endian::native == std::endian::little,
              "cache records are little-endian; big-endian hosts are unsupported");

namespace {
constexpr char kMagic[4] = {'R', 'C', 'O', 'F'};
constexpr std::uint32_t kVersion = 1;

std::string sanitize(const std::string& label) {
    std::string s;
    for (char c : label)
        s += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-')
                 ? c : '_';
    return s;
}
} // namespace

CoefficientCache::CoefficientCache(std::string directory) : dir_(std::move(directory)) {
    std::filesystem::create_directories(dir_);
}

std::string CoefficientCache::path_for(const std::string& label) const {
    return (std::filesystem::path(dir_) / (sanitize(label) + ".rcof")).string();
}

bool CoefficientCache::contains(const std::string& label) const {
    return std::filesystem::exists(path_for(label));
}

void CoefficientCache::write(const CoefficientSeries& series) const {
    const std::string final_path = path_for(series.label);
    const std::string tmp_path = final_path + ".tmp";
    {
        std::ofstream f(tmp_path, std::ios::binary | std::ios::trunc);
        if (!f) throw cache_integrity_error("cannot open cache file for writing: " + tmp_path);
        f.write(kMagic, 4);
        std::uint32_t ver = kVersion;
        f.write(reinterpret_cast<const char*>(&ver), 4);
        std::uint32_t len = static_cast<std::uint32_t>(series.label.size());
        f.write(reinterpret_cast<const char*>(&len), 4);
        f.write(series.label.data(), len);
        std::uint64_t n = series.n_max();
        f.write(reinterpret_cast<const char*>(&n), 8);
        for (const auto& z : series.a) {
            double re = z.real(), im = z.imag();
            f.write(reinterpret_cast<const char*>(&re), 8);
            f.write(reinterpret_cast<const char*>(&im), 8);
        }
        if (!f) throw cache_integrity_error("short write to cache file: " + tmp_path);
    }
    std::filesystem::rename(tmp_path, final_path);
}

CoefficientSeries CoefficientCache::read(const std::string& label) const {
    const std::string path = path_for(label);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw cache_not_found_error("no cache entry for label '" + label + "'");
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, kMagic, 4) != 0)
        throw cache_integrity_error("bad magic in cache file: " + path);
    std::uint32_t ver = 0, len = 0;
    f.read(reinterpret_cast<char*>(&ver), 4);
    if (!f || ver != kVersion)
        throw cache_integrity_error("unsupported cache version in " + path);
    f.read(reinterpret_cast<char*>(&len), 4);
    if (!f || len > 4096) throw cache_integrity_error("corrupt label length in " + path);
    std::string stored(len, '\0');
    f.read(stored.data(), len);
    std::uint64_t n = 0;
    f.read(reinterpret_cast<char*>(&n), 8);
    if (!f) throw cache_integrity_error("truncated header in " + path);
    CoefficientSeries s;
    s.label = stored;
    s.a.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        double re, im;
        f.read(reinterpret_cast<char*>(&re), 8);
        f.read(reinterpret_cast<char*>(&im), 8);
        if (!f) throw cache_integrity_error("truncated record block in " + path);
        s.a[i] = cplx(re, im);
    }
    return s;
}

} // namespace resonance::arith
