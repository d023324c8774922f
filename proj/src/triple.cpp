#include "capkit/triple.hpp"

#include <sstream>

namespace capkit {

PrimeTriple PrimeTriple::create(const Int& p, const Int& q1, const Int& q2) {
    if (!is_prime(p) || mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
        throw std::invalid_argument("p must be a prime ≡ 1 (mod 4)");
    if (!is_prime(q1) || mpz_fdiv_ui(q1.get_mpz_t(), 4) != 3)
        throw std::invalid_argument("q1 must be a prime ≡ 3 (mod 4)");
    if (!is_prime(q2) || mpz_fdiv_ui(q2.get_mpz_t(), 4) != 3)
        throw std::invalid_argument("q2 must be a prime ≡ 3 (mod 4)");
    if (p == q1 || p == q2 || q1 == q2)
        throw std::invalid_argument("p, q1, q2 must be distinct");
    PrimeTriple t;
    t.p = p;
    t.q1 = q1;
    t.q2 = q2;
    t.d = p * q1 * q2;
    std::tie(t.e, t.f) = decompose_e2_4f2(p);
    return t;
}

std::string PrimeTriple::factor_str() const {
    std::ostringstream os;
    os << p << "." << q1 << "." << q2;
    return os.str();
}

}  // namespace capkit
