#include "capkit/squarecls.hpp"

#include <algorithm>
#include <sstream>

namespace capkit {

std::string to_string(SquareCase c) {
    switch (c) {
        case SquareCase::case_p: return "CaseP";
        case SquareCase::case_q1: return "CaseQ1";
        case SquareCase::case_q2: return "CaseQ2";
    }
    return "?";
}

std::pair<Int, Int> square_multiplier(const QuadUnit& u, Sign sign) {
    if (u.norm != 1)
        throw std::invalid_argument("square_multiplier: unit must have norm +1");
    const Int v = sign == Sign::plus ? Int(u.X + u.D) : Int(u.X - u.D);  // D * (x +- 1)
    if (v <= 0) throw theory_violation("square_multiplier: x - 1 <= 0");
    // x +- 1 = v/D has the same square class as v*D, and every prime with
    // odd valuation in v*D divides 2d because (x-1)(x+1) = y^2 d.
    Int t = v * u.D;
    Int m = 1;
    std::vector<Int> primes{2};
    for (const auto& [r, e] : factorize(u.d).factors) primes.push_back(r);
    for (const Int& r : primes) {
        unsigned long val = mpz_remove(t.get_mpz_t(), t.get_mpz_t(), r.get_mpz_t());
        if (val % 2 == 1) m *= r;
    }
    Int mv = m * v;
    if (!mpz_divisible_ui_p(mv.get_mpz_t(), u.D))
        throw theory_violation("square_multiplier: multiplier not integral");
    auto w = sqrt_exact(mv / u.D);
    if (!w) throw theory_violation("square_multiplier: residual cofactor not square");
    return {m, *w};
}

SquareCertificate square_certificate(const QuadUnit& u) {
    SquareCertificate cert;
    cert.unit = u;
    std::tie(cert.m_plus, cert.w_plus) = square_multiplier(u, Sign::plus);
    std::tie(cert.m_minus, cert.w_minus) = square_multiplier(u, Sign::minus);
    return cert;
}

bool is_m_square(const QuadUnit& u, const Int& m, Sign sign) {
    if (u.norm != 1)
        throw std::invalid_argument("is_m_square: unit must have norm +1");
    if (m < 1) throw std::invalid_argument("is_m_square: multiplier must be >= 1");
    const Int v = sign == Sign::plus ? Int(u.X + u.D) : Int(u.X - u.D);
    Int mv = m * v;
    if (!mpz_divisible_ui_p(mv.get_mpz_t(), u.D)) return false;
    return is_perfect_square(Int(mv / u.D));
}

PqSplit pq_split(const Int& p, const SquareCertificate& cert) {
    if (cert.pair_has(1)) return PqSplit::unit_side;
    if (cert.pair_has(p)) return PqSplit::p_side;
    if (cert.pair_has(2 * p)) return PqSplit::two_p_side;
    throw theory_violation("pq_split: certificate matches no split");
}

SquareCase square_case_triple(const PrimeTriple& t) {
    SquareCertificate cert = square_certificate(fundamental_unit(t.d));
    auto pair_is = [&](const Int& m1, const Int& m2) {
        return (cert.m_plus == m1 && cert.m_minus == m2) ||
               (cert.m_plus == m2 && cert.m_minus == m1);
    };
    if (pair_is(2 * t.p, 2 * t.q1 * t.q2)) return SquareCase::case_p;
    if (pair_is(2 * t.q1, 2 * t.p * t.q2)) return SquareCase::case_q1;
    if (pair_is(2 * t.q2, 2 * t.p * t.q1)) return SquareCase::case_q2;
    std::ostringstream os;
    os << "square_case_triple: pair {" << cert.m_plus << ", " << cert.m_minus
       << "} matches no case for d=" << t.d;
    throw theory_violation(os.str());
}

namespace {

void check_multiplier(AuditReport& report, const QuadUnit& u, const Int& m, Sign sign) {
    std::ostringstream os;
    os << m << "(x" << (sign == Sign::plus ? "+" : "-") << "1) not a square";
    report.entries.push_back({os.str(), !is_m_square(u, m, sign)});
}

}  // namespace

bool AuditReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

std::vector<std::string> AuditReport::violations() const {
    std::vector<std::string> v;
    for (const auto& e : entries)
        if (!e.ok) v.push_back(e.what);
    return v;
}

AuditReport exclusion_audit(const QuadUnit& u, AuditContext context) {
    AuditReport report;
    report.context = context;
    const unsigned long d_mod4 = mpz_fdiv_ui(u.d.get_mpz_t(), 4);
    switch (context) {
        case AuditContext::norm_one: {
            if (u.norm != 1)
                throw std::invalid_argument("exclusion_audit: unit must have norm +1");
            for (Sign s : {Sign::plus, Sign::minus}) {
                check_multiplier(report, u, 2, s);
                check_multiplier(report, u, 2 * u.d, s);
            }
            break;
        }
        case AuditContext::q3_prime: {
            if (!is_prime(u.d) || d_mod4 != 3)
                throw std::invalid_argument("exclusion_audit: d must be a prime = 3 (mod 4)");
            report.entries.push_back({"x is an even integer",
                                      u.D == 1 && mpz_even_p(u.X.get_mpz_t())});
            SquareCertificate cert = square_certificate(u);
            report.entries.push_back({"multiplier pair is {1, d}",
                                      cert.pair_has(1) && cert.pair_has(u.d)});
            break;
        }
        case AuditContext::d1_mod4: {
            if (d_mod4 != 1)
                throw std::invalid_argument("exclusion_audit: d must be = 1 (mod 4)");
            if (u.norm != 1)
                throw std::invalid_argument("exclusion_audit: unit must have norm +1");
            for (Sign s : {Sign::plus, Sign::minus}) {
                check_multiplier(report, u, 1, s);
                for (const auto& [r, e] : factorize(u.d).factors)
                    check_multiplier(report, u, r, s);
            }
            break;
        }
        case AuditContext::pq_split: {
            Factorization f = factorize(u.d);
            auto mod4 = [](const Int& n) { return mpz_fdiv_ui(n.get_mpz_t(), 4); };
            bool shape_ok =
                f.factors.size() == 2 && f.squarefree() &&
                ((mod4(f.factors[0].first) == 1 && mod4(f.factors[1].first) == 3) ||
                 (mod4(f.factors[0].first) == 3 && mod4(f.factors[1].first) == 1));
            if (!shape_ok || u.norm != 1)
                throw std::invalid_argument(
                    "exclusion_audit: d must be p*q with p = 1, q = 3 (mod 4), norm +1");
            const Int& p = mod4(f.factors[0].first) == 1 ? f.factors[0].first
                                                         : f.factors[1].first;
            const Int& q = f.factors[0].first == p ? f.factors[1].first : f.factors[0].first;
            for (Sign s : {Sign::plus, Sign::minus}) {
                check_multiplier(report, u, 2, s);
                check_multiplier(report, u, 2 * u.d, s);
            }
            SquareCertificate cert = square_certificate(u);
            auto pair_is = [&](const Int& m1, const Int& m2) {
                return cert.pair_has(m1) && cert.pair_has(m2);
            };
            report.entries.push_back(
                {"multiplier pair among {1,pq},{p,q},{2p,2q}",
                 pair_is(1, u.d) || pair_is(p, q) || pair_is(2 * p, 2 * q)});
            break;
        }
    }
    return report;
}

}  // namespace capkit
