#include "capkit/quadunit.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace capkit {

std::string QuadUnit::str() const {
    std::ostringstream os;
    if (D == 1)
        os << X << " + " << Y << "*sqrt(" << d << ")";
    else
        os << "(" << X << " + " << Y << "*sqrt(" << d << "))/2";
    return os.str();
}

namespace {

void check_unit(const QuadUnit& u) {
    if (u.X * u.X - u.d * u.Y * u.Y != u.norm * Int(u.D) * u.D)
        throw theory_violation("fundamental_unit: Pell identity violated");
}

QuadUnit compute_fundamental_unit(const Int& d) {
    if (d <= 1) throw std::invalid_argument("fundamental_unit: d must be > 1");
    if (!factorize(d).squarefree())
        throw std::invalid_argument("fundamental_unit: d must be squarefree");

    // Convergents of sqrt(d): stop at the end of the first period (Q back
    // to 1), where h^2 - d k^2 = (-1)^r.
    const Int a0 = isqrt(d);
    Int P = 0, Q = 1;
    Int a = a0;
    Int h_prev = 1, h = a0;
    Int k_prev = 0, k = 1;
    int parity = -1;  // (-1)^1 after the first step below
    for (;;) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        if (Q == 1) break;
        a = (a0 + P) / Q;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        parity = -parity;
    }

    QuadUnit u{d, h, k, 1, parity};
    if (mpz_fdiv_ui(d.get_mpz_t(), 4) == 1) {
        // Try the descent u0^3 = eps with u0 = (t + v sqrt d)/2.
        Int rhs = 2 * h;
        Int t0;
        mpz_root(t0.get_mpz_t(), rhs.get_mpz_t(), 3);
        for (Int t = t0 - 2; t <= t0 + 2; ++t) {
            if (t <= 0) continue;
            if (t * t * t - 3 * parity * t != rhs) continue;
            Int v2 = t * t - 4 * parity;
            if (!mpz_divisible_p(v2.get_mpz_t(), d.get_mpz_t())) continue;
            auto v = sqrt_exact(v2 / d);
            if (!v) continue;
            if (mpz_even_p(t.get_mpz_t()) || mpz_even_p(v->get_mpz_t()))
                throw theory_violation("fundamental_unit: improper half-integral descent");
            u = QuadUnit{d, t, *v, 2, parity};
            break;
        }
    }
    check_unit(u);
    return u;
}

}  // namespace

QuadUnit fundamental_unit(const Int& d) {
    static std::map<Int, QuadUnit> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    QuadUnit u = compute_fundamental_unit(d);
    std::lock_guard lock(mutex);
    return cache.emplace(d, u).first->second;
}

QuadUnit fundamental_unit_bruteforce(const Int& d, unsigned long y_bound) {
    if (d <= 1) throw std::invalid_argument("fundamental_unit_bruteforce: d must be > 1");
    if (!factorize(d).squarefree())
        throw std::invalid_argument("fundamental_unit_bruteforce: d must be squarefree");
    const bool half_possible = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
    // t is the doubled y-coordinate, so candidates come out smallest first.
    for (unsigned long t = 1; t <= 2 * y_bound; ++t) {
        if (t % 2 == 1) {
            if (!half_possible || t > y_bound) continue;
            Int dy2 = d * t * t;
            for (int n : {-1, 1}) {
                if (auto X = sqrt_exact(dy2 + 4 * n)) {
                    QuadUnit u{d, *X, Int(t), 2, n};
                    check_unit(u);
                    return u;
                }
            }
        } else {
            Int y = t / 2;
            Int dy2 = d * y * y;
            for (int n : {-1, 1}) {
                if (auto X = sqrt_exact(dy2 + n)) {
                    QuadUnit u{d, *X, y, 1, n};
                    check_unit(u);
                    return u;
                }
            }
        }
    }
    std::ostringstream os;
    os << "fundamental_unit_bruteforce: no solution for d=" << d << " with Y <= " << y_bound;
    throw bound_exhausted(os.str());
}

Int two_x_plus_minus(const QuadUnit& u, Sign sign) {
    Int s = sign == Sign::plus ? 1 : -1;
    if (u.D == 1) return 2 * (u.X + s);
    return u.X + 2 * s;
}

}  // namespace capkit
