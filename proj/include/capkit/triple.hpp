#pragma once

#include "capkit/exactint.hpp"

#include <string>

namespace capkit {

// Ordered triple (p, q1, q2) of distinct primes with p = 1 and
// q1 = q2 = 3 (mod 4); carries d = p*q1*q2 and the decomposition
// p = e^2 + 4f^2.  The order of q1 and q2 is significant.
struct PrimeTriple {
    Int p, q1, q2;
    Int d;
    Int e, f;

    static PrimeTriple create(const Int& p, const Int& q1, const Int& q2);

    std::string factor_str() const;  // "p.q1.q2"
    bool operator==(const PrimeTriple&) const = default;
};

}  // namespace capkit
