#include "capkit/exactint.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

namespace capkit {

Int Factorization::value() const {
    Int v = 1;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

bool Factorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& f) { return f.second == 1; });
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_perfect_square(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() != 1) return false;
    return is_perfect_square(Int(c.get_num()));
}

std::optional<Int> sqrt_exact(const Int& n) {
    if (!is_perfect_square(n)) return std::nullopt;
    return isqrt(n);
}

int jacobi(const Int& a_in, const Int& n_in) {
    if (n_in < 3 || mpz_even_p(n_in.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and >= 3");
    Int a = a_in % n_in;
    if (a < 0) a += n_in;
    Int n = n_in;
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a >>= 1;
            unsigned long m8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

namespace {

// splitmix64, used only to derive extra Miller-Rabin witnesses.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    // n odd, n > 3, 2 <= a <= n-2. Returns true if a proves n composite.
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

constexpr std::array<unsigned long, 12> kSmallWitnesses = {2,  3,  5,  7,  11, 13,
                                                           17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long p : kSmallWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // The 12 small witnesses are a proven deterministic set below 3.3e24,
    // which covers everything under 2^64.
    for (unsigned long w : kSmallWitnesses)
        if (miller_rabin_witness(n, Int(w))) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;
    std::uint64_t state = 0x5eed5eed5eed5eedULL;
    for (int round = 0; round < 64; ++round) {
        Int a = Int(splitmix64(state)) % (n - 3) + 2;
        if (miller_rabin_witness(n, a)) return false;
    }
    return true;
}

namespace {

Int rho_brent(const Int& n) {
    // Brent's cycle variant with a deterministic parameter schedule.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x;
        unsigned long power = 1, lam = 0;
        auto step = [&](Int& v) { v = (v * v + c) % n; };
        step(y);
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            saved_x = y;
            Int prod = 1;
            unsigned long batch = std::min<unsigned long>(128, power - lam);
            for (unsigned long i = 0; i < batch; ++i) {
                step(y);
                prod = prod * (x > y ? x - y : y - x) % n;
            }
            lam += batch;
            mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
        // Batch overshot a factor; replay one step at a time.
        y = saved_x;
        d = 1;
        while (d == 1 || d == n) {
            step(y);
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = rho_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factorize(const Int& n_in) {
    if (n_in < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    std::map<Int, unsigned> acc;
    Int n = n_in;
    for (unsigned long p = 2; p < 10000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    factor_into(n, acc);
    Factorization f;
    f.factors.assign(acc.begin(), acc.end());
    if (f.value() != n_in) throw theory_violation("factorize: product check failed");
    return f;
}

Int squarefree_kernel(const Int& n) {
    Factorization f = factorize(n);
    Int k = 1;
    for (const auto& [p, e] : f.factors)
        if (e % 2 == 1) k *= p;
    return k;
}

std::pair<Int, Int> decompose_e2_4f2(const Int& p) {
    if (!is_prime(p) || mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
        throw std::invalid_argument("decompose_e2_4f2: argument must be a prime = 1 (mod 4)");
    Int fmax = isqrt(p / 4);
    for (Int f = 1; f <= fmax; ++f) {
        Int e2 = p - 4 * f * f;
        if (auto e = sqrt_exact(e2); e && *e > 0) return {*e, f};
    }
    throw theory_violation("decompose_e2_4f2: no representation found");
}

}  // namespace capkit
