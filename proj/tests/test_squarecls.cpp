#include "capkit/squarecls.hpp"

#include <doctest.h>

using namespace capkit;

namespace {

// Oracle: smallest squarefree m with m*(x +- 1) a perfect natural square,
// found by scanning m upward and testing directly.
std::optional<std::pair<Int, Int>> multiplier_by_scan(const QuadUnit& u, Sign sign,
                                                      long m_max) {
    Int v = sign == Sign::plus ? Int(u.X + u.D) : Int(u.X - u.D);
    for (long m = 1; m <= m_max; ++m) {
        bool squarefree = true;
        for (long r = 2; r * r <= m; ++r)
            if (m % (r * r) == 0) squarefree = false;
        if (!squarefree) continue;
        Int mv = m * v;
        if (!mpz_divisible_ui_p(mv.get_mpz_t(), u.D)) continue;
        if (auto w = sqrt_exact(Int(mv / u.D))) return std::pair<Int, Int>{m, *w};
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("square multipliers on the worked examples") {
    CHECK(square_multiplier(fundamental_unit(105), Sign::minus) ==
          std::pair<Int, Int>{10, 20});
    CHECK(square_multiplier(fundamental_unit(165), Sign::minus) ==
          std::pair<Int, Int>{22, 11});
    CHECK(square_multiplier(fundamental_unit(7), Sign::plus) == std::pair<Int, Int>{1, 3});
    CHECK(square_multiplier(fundamental_unit(105), Sign::plus) ==
          std::pair<Int, Int>{42, 42});
}

TEST_CASE("square multiplier rejects norm -1 units") {
    CHECK_THROWS_AS(square_multiplier(fundamental_unit(5), Sign::plus),
                    std::invalid_argument);
    CHECK_THROWS_AS(square_certificate(fundamental_unit(2)), std::invalid_argument);
}

TEST_CASE("multiplier agrees with the direct scan oracle") {
    for (long d : {3L, 7L, 21L, 33L, 35L, 57L, 105L, 165L, 273L, 357L, 561L, 1533L, 4029L}) {
        QuadUnit u = fundamental_unit(d);
        if (u.norm != 1) continue;
        for (Sign s : {Sign::plus, Sign::minus}) {
            auto oracle = multiplier_by_scan(u, s, 5 * d);
            REQUIRE(oracle.has_value());
            CHECK(square_multiplier(u, s) == *oracle);
        }
    }
}

TEST_CASE("is_m_square") {
    QuadUnit u105 = fundamental_unit(105);
    CHECK(is_m_square(u105, 10, Sign::minus));
    CHECK_FALSE(is_m_square(u105, 10, Sign::plus));
    CHECK_FALSE(is_m_square(fundamental_unit(165), 10, Sign::plus));
    // Non-squarefree multipliers are legal inputs.
    CHECK(is_m_square(u105, 40, Sign::minus));  // 40*40 = 1600 = 40^2
    CHECK_THROWS_AS(is_m_square(u105, 0, Sign::plus), std::invalid_argument);
    // Odd multiplier on a half-integral unit: never integral.
    CHECK_FALSE(is_m_square(fundamental_unit(165), 11, Sign::minus));
}

TEST_CASE("two-prime split classification") {
    CHECK(pq_split(5, square_certificate(fundamental_unit(15))) == PqSplit::p_side);
    CHECK(pq_split(17, square_certificate(fundamental_unit(51))) == PqSplit::unit_side);
    CHECK(pq_split(5, square_certificate(fundamental_unit(35))) == PqSplit::p_side);
    // eps_111 = 295 + 28 sqrt(111): 2p(a+1) = 2*37*296 = 21904 = 148^2.
    CHECK(pq_split(37, square_certificate(fundamental_unit(111))) == PqSplit::two_p_side);
}

TEST_CASE("square case of the worked triples") {
    CHECK(square_case_triple(PrimeTriple::create(5, 3, 7)) == SquareCase::case_p);
    CHECK(square_case_triple(PrimeTriple::create(5, 3, 11)) == SquareCase::case_q2);
    CHECK(square_case_triple(PrimeTriple::create(5, 11, 3)) == SquareCase::case_q1);
    CHECK(square_case_triple(PrimeTriple::create(17, 79, 3)) == SquareCase::case_p);
    CHECK(square_case_triple(PrimeTriple::create(17, 19, 3)) == SquareCase::case_q1);
}

TEST_CASE("certificate pair is complementary") {
    for (long d : {105L, 165L, 273L, 345L, 357L, 561L, 4029L}) {
        SquareCertificate c = square_certificate(fundamental_unit(d));
        Int prod = c.m_plus * c.m_minus;
        CHECK((prod == d || prod == 4 * d));
    }
}

TEST_CASE("audit: norm-one exclusions") {
    AuditReport r = exclusion_audit(fundamental_unit(105), AuditContext::norm_one);
    CHECK(r.ok());
    CHECK(r.entries.size() == 4);  // 2 and 2d on both signs
    CHECK_THROWS_AS(exclusion_audit(fundamental_unit(5), AuditContext::norm_one),
                    std::invalid_argument);
}

TEST_CASE("audit: prime q = 3 (mod 4)") {
    AuditReport r = exclusion_audit(fundamental_unit(7), AuditContext::q3_prime);
    CHECK(r.ok());  // x = 8 even, x+1 = 9 square
    CHECK_THROWS_AS(exclusion_audit(fundamental_unit(21), AuditContext::q3_prime),
                    std::invalid_argument);
    CHECK_THROWS_AS(exclusion_audit(fundamental_unit(13), AuditContext::q3_prime),
                    std::invalid_argument);
}

TEST_CASE("audit: d = 1 (mod 4) exclusions") {
    AuditReport r = exclusion_audit(fundamental_unit(165), AuditContext::d1_mod4);
    CHECK(r.ok());  // x+-1, 3(x+-1), 5(x+-1), 11(x+-1) all non-square
    CHECK(r.entries.size() == 8);
    CHECK(r.violations().empty());
    CHECK_THROWS_AS(exclusion_audit(fundamental_unit(35), AuditContext::d1_mod4),
                    std::invalid_argument);
}

TEST_CASE("audit: two-prime split") {
    CHECK(exclusion_audit(fundamental_unit(15), AuditContext::pq_split).ok());
    CHECK(exclusion_audit(fundamental_unit(51), AuditContext::pq_split).ok());
    CHECK_THROWS_AS(exclusion_audit(fundamental_unit(21), AuditContext::pq_split),
                    std::invalid_argument);  // both primes are 3 (mod 4)
    CHECK_THROWS_AS(exclusion_audit(fundamental_unit(105), AuditContext::pq_split),
                    std::invalid_argument);
}

TEST_CASE("one-sign complementarity of the 2p predicate") {
    // 2p(x+-1) square on one side forces 2 q1 q2 (x-+1) square on the other.
    for (auto [p, q1, q2] : {std::array<long, 3>{5, 3, 7}, {17, 3, 7}, {5, 7, 23}}) {
        PrimeTriple t = PrimeTriple::create(p, q1, q2);
        QuadUnit u = fundamental_unit(t.d);
        for (Sign s : {Sign::plus, Sign::minus})
            CHECK(is_m_square(u, 2 * t.p, s) ==
                  is_m_square(u, 2 * t.q1 * t.q2, other(s)));
    }
}
