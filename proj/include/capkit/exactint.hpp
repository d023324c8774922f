#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace capkit {

// Unbounded integers and rationals. mpq_class keeps rationals canonical
// (lowest terms, positive denominator), which is exactly the contract the
// rest of the library relies on.
using Int = mpz_class;
using Nat = mpz_class;
using Rational = mpq_class;

// Thrown when a consequence of the underlying theory fails to hold; these
// paths are unreachable for valid inputs and indicate a bug if they fire.
struct theory_violation : std::logic_error {
    explicit theory_violation(const std::string& what) : std::logic_error(what) {}
};

// Thrown by bounded searches that run out of room.
struct bound_exhausted : std::runtime_error {
    explicit bound_exhausted(const std::string& what) : std::runtime_error(what) {}
};

struct Factorization {
    // (prime, exponent), primes strictly increasing, exponents >= 1.
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const;
    bool squarefree() const;
};

// floor(sqrt(n)); n must be >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// A rational is a square here iff it is a non-negative integer that is a
// perfect square; non-integers always fail.
bool is_perfect_square(const Rational& r);

// sqrt(n) when n is a perfect square, nullopt otherwise.
std::optional<Int> sqrt_exact(const Int& n);

// Jacobi symbol (a/n); n must be odd and >= 3.
int jacobi(const Int& a, const Int& n);

// Deterministic below 2^64 (fixed Miller-Rabin witness set 2..37); above,
// 64 further rounds with witnesses from a fixed splitmix64 stream, so the
// answer is reproducible and the error probability is < 2^-128.
bool is_prime(const Int& n);

// Complete factorization of n >= 1 by trial division plus Brent's rho.
// Intended for inputs below 2^64; larger values are legal but may be slow.
Factorization factorize(const Int& n);

// Product of the primes dividing n to an odd power; n >= 1.
Int squarefree_kernel(const Int& n);

// p = e^2 + 4f^2 with e, f > 0 (e odd); unique for primes p = 1 (mod 4).
std::pair<Int, Int> decompose_e2_4f2(const Int& p);

}  // namespace capkit
