#pragma once

#include "capkit/quadunit.hpp"
#include "capkit/triple.hpp"

#include <string>
#include <vector>

namespace capkit {

// For a norm +1 unit with x^2 - 1 = y^2 d, the square class of x +- 1 is
// represented by a divisor of 2d, so each sign has a unique minimal
// squarefree multiplier m with m(x +- 1) a perfect square in N.  The two
// multipliers form a complementary pair: m_plus * m_minus is d or 4d.
struct SquareCertificate {
    QuadUnit unit;
    Int m_plus, w_plus;    // m_plus * (x+1) = w_plus^2
    Int m_minus, w_minus;  // m_minus * (x-1) = w_minus^2

    const Int& m(Sign s) const { return s == Sign::plus ? m_plus : m_minus; }
    const Int& w(Sign s) const { return s == Sign::plus ? w_plus : w_minus; }
    bool pair_has(const Int& m) const { return m_plus == m || m_minus == m; }
    // "a +- 1 is a square" for one of the two signs.
    bool side_is_square() const { return pair_has(1); }
};

// Trichotomy for eps_{p q1 q2}: the multiplier pair is {2p, 2 q1 q2},
// {2 q1, 2 p q2} or {2 q2, 2 p q1}, never anything else.
enum class SquareCase { case_p, case_q1, case_q2 };

std::string to_string(SquareCase c);

// Split for a two-prime product d = p*q with p = 1, q = 3 (mod 4): the pair
// is {1, pq}, {p, q} or {2p, 2q}.
enum class PqSplit { unit_side, p_side, two_p_side };

PqSplit pq_split(const Int& p, const SquareCertificate& cert);

SquareCertificate square_certificate(const QuadUnit& u);

// (m, w) for one sign; rejects norm -1 units.
std::pair<Int, Int> square_multiplier(const QuadUnit& u, Sign sign);

// True iff m(x +- 1) is a perfect square in N (integrality required first;
// half-integral x makes odd multipliers fail immediately).
bool is_m_square(const QuadUnit& u, const Int& m, Sign sign);

SquareCase square_case_triple(const PrimeTriple& t);

// Audits checking that a unit satisfies every exclusion the classification
// rests on.  Each context has its own hypothesis on d and the unit.
enum class AuditContext {
    norm_one,    // norm +1: 2(x+-1) and 2d(x+-1) never squares
    q3_prime,    // d prime = 3 (mod 4): x even integer, pair {1, d}
    d1_mod4,     // d = 1 (mod 4), norm +1: x+-1 and r(x+-1) non-square, r | d prime
    pq_split,    // d = p*q, p = 1, q = 3 (mod 4): pair among {1,d},{p,q},{2p,2q}
};

struct AuditEntry {
    std::string what;
    bool ok;
};

struct AuditReport {
    AuditContext context;
    std::vector<AuditEntry> entries;

    bool ok() const;
    std::vector<std::string> violations() const;
};

AuditReport exclusion_audit(const QuadUnit& u, AuditContext context);

}  // namespace capkit
