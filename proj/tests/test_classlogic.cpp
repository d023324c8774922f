#include "capkit/classlogic.hpp"

#include <doctest.h>

using namespace capkit;

namespace {

PrimeTriple T(long p, long q1, long q2) { return PrimeTriple::create(p, q1, q2); }

// Sieve oracle for the auxiliary prime conditions.
Int aux_by_sieve(const PrimeTriple& t, const Int& q, long limit) {
    for (long l = 5; l <= limit; ++l) {
        if (l % 4 != 1 || !is_prime(l)) continue;
        if (t.d % l == 0) continue;
        if (jacobi(t.d, l) == 1 && jacobi(q, l) == -1) return l;
    }
    return 0;
}

}  // namespace

TEST_CASE("triple validation messages") {
    CHECK_THROWS_WITH_AS(T(4, 3, 7), "p must be a prime ≡ 1 (mod 4)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(T(7, 3, 11), "p must be a prime ≡ 1 (mod 4)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(T(5, 13, 7), "q1 must be a prime ≡ 3 (mod 4)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(T(5, 3, 9), "q2 must be a prime ≡ 3 (mod 4)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(T(5, 3, 3), "p, q1, q2 must be distinct", std::invalid_argument);
    PrimeTriple t = T(5, 3, 7);
    CHECK(t.d == 105);
    CHECK(t.e == 1);
    CHECK(t.f == 1);
}

TEST_CASE("rank and i_is_norm") {
    CHECK(rank_cl2(T(17, 19, 3)) == 3);
    CHECK(rank_cl2(T(5, 3, 7)) == 2);
    CHECK(rank_cl2(T(13, 7, 3)) == 2);
    CHECK(i_is_norm(T(17, 79, 3)));
    CHECK_FALSE(i_is_norm(T(5, 3, 7)));
    CHECK(i_is_norm(T(41, 3, 7)));
}

TEST_CASE("ambiguous orders") {
    CHECK(ambiguous_orders(T(5, 3, 7)) == std::pair<unsigned, unsigned>{4, 4});
    CHECK(ambiguous_orders(T(17, 19, 3)) == std::pair<unsigned, unsigned>{8, 4});
    CHECK(ambiguous_orders(T(13, 7, 3)) == std::pair<unsigned, unsigned>{4, 4});
}

TEST_CASE("relations per square case") {
    CHECK(relations(T(5, 3, 7)).render() == std::vector<std::string>{"H1H2 = 1"});
    CHECK(relations(T(5, 3, 11)).render() ==
          std::vector<std::string>{"H1H2Q1 = 1", "Q2 = 1"});
    CHECK(relations(T(17, 19, 3)).render() ==
          std::vector<std::string>{"H1H2Q2 = 1", "Q1 = 1"});
    // H1 and H2 are never individually trivial.
    for (auto [p, q1, q2] : {std::array<long, 3>{5, 3, 7}, {5, 3, 11}, {17, 19, 3}}) {
        RelationSet rel = relations(T(p, q1, q2));
        CHECK_FALSE(rel.is_trivial(kH1));
        CHECK_FALSE(rel.is_trivial(kH2));
    }
}

TEST_CASE("ambiguous generators") {
    auto [s1, a1] = ambiguous_generators(T(5, 3, 7));
    CHECK(s1.render() == "<H1,Q1>");
    CHECK(a1.render() == "<H1,Q1>");
    CHECK(a1.order == 4);
    auto [s2, a2] = ambiguous_generators(T(5, 3, 11));
    CHECK(s2.render() == "<H1,H2>");
    CHECK(a2.order == 4);
    auto [s3, a3] = ambiguous_generators(T(17, 19, 3));
    CHECK(s3.render() == "<H1,H2>");
    CHECK(a3.render() == "<H1,H2,I>");
    CHECK(a3.order == 8);
}

TEST_CASE("kernel orders, both routes") {
    CHECK(kernel_order(T(5, 3, 7), Extension::K1) == 4);
    CHECK(kernel_order(T(17, 79, 3), Extension::K2) == 4);
    CHECK(kernel_order(T(5, 11, 3), Extension::K2) == 2);
    CHECK(kernel_order(T(5, 3, 7), Extension::K2) == 2);
    CHECK(kernel_order(T(5, 3, 7), Extension::K3) == 2);
}

TEST_CASE("kernels on the worked examples") {
    KernelResult k1 = kernel(T(5, 3, 7), Extension::K1);
    CHECK(k1.determined());
    CHECK(k1.determined_subgroup()->render() == "<H1,Q1>");
    CHECK(k1.order == 4);

    KernelResult k2 = kernel(T(17, 79, 3), Extension::K2);
    CHECK_FALSE(k2.determined());
    CHECK(k2.render() == "<Q1,I> or <Q1,H1I>");
    CHECK(k2.order == 4);
    CHECK(k2.case_no == 1);

    KernelResult k3 = kernel(T(5, 11, 3), Extension::K2);
    CHECK(k3.determined());
    CHECK(k3.determined_subgroup()->render() == "<Q2>");
    CHECK(k3.order == 2);
    CHECK(k3.case_no == 3);
    // <Q2> = <H1H2> via the CaseQ1 relation.
    RelationSet rel = relations(T(5, 11, 3));
    SubgroupDescriptor h1h2 = make_subgroup(rel, {kH1 ^ kH2});
    CHECK(k3.determined_subgroup()->same_span(h1h2));
}

TEST_CASE("kernel case split for K3 mirrors K2") {
    KernelResult k = kernel(T(17, 79, 3), Extension::K3);
    CHECK(k.render() == "<Q2,I> or <Q2,H1I>");
    KernelResult k4 = kernel(T(5, 3, 7), Extension::K3);
    CHECK(k4.determined_subgroup()->render() == "<Q2>");
    CHECK(k4.case_no == 4);
    // (5,3,11) is CaseQ2: K3 goes through case 3 with <Q1> = <H1H2>.
    KernelResult k5 = kernel(T(5, 3, 11), Extension::K3);
    CHECK(k5.case_no == 3);
    CHECK(k5.determined_subgroup()->render() == "<Q1>");
    SubgroupDescriptor h1h2 = make_subgroup(relations(T(5, 3, 11)), {kH1 ^ kH2});
    CHECK(k5.determined_subgroup()->same_span(h1h2));
}

TEST_CASE("genus kernel bound") {
    CHECK(genus_kernel_bound(T(5, 3, 7)).render() == "<H1,Q1>");
    CHECK(genus_kernel_bound(T(5, 3, 11)).render() == "<H1,H2>");
    CHECK(genus_kernel_bound(T(17, 79, 3)).render() == "<H1,Q1,I>");
    CHECK(genus_kernel_bound(T(17, 79, 3)).order == 8);
}

TEST_CASE("type classification") {
    CHECK(classify_type(T(17, 19, 3)) == TypeLabel::BI1);
    CHECK(classify_type(T(17, 79, 3)) == TypeLabel::BIII2);
    CHECK(classify_type(T(5, 3, 7)) == TypeLabel::Not222);   // (2/5) = -1
    CHECK(classify_type(T(13, 7, 3)) == TypeLabel::Not222);  // (2/13) = -1
    CHECK(classify_type(T(137, 7, 3)) == TypeLabel::BII1);
    // Condition A is ordered: swapping q1, q2 can break it.
    CHECK(classify_type(T(17, 3, 19)) == TypeLabel::Not222);
}

TEST_CASE("(2,2,2) kernels for a B(III) triple") {
    Kernels222 k = kernels_under_222(T(17, 79, 3));
    CHECK(k.label == TypeLabel::BIII2);
    CHECK(k.k1.determined_subgroup()->render() == "<H1,Q1>");
    CHECK(k.k2.render() == "<Q1,I> or <Q1,H1I>");
    CHECK(k.k2.order == 4);
    CHECK(k.genus.order == 8);
    CHECK(k.genus.render() == "<H1,Q1,I>");
}

TEST_CASE("(2,2,2) kernels for a B(I)(1) triple") {
    Kernels222 k = kernels_under_222(T(17, 19, 3));
    CHECK(k.k1.determined_subgroup()->render() == "<H1,H2>");
    CHECK(k.k2.candidates.size() == 4);
    CHECK(k.k2.order == 2);
    CHECK(k.k2.render() == "<I> or <H1I> or <H2I> or <H1H2I>");
    CHECK(k.genus.render() == "<H1,H2,I>");
}

TEST_CASE("(2,2,2) rejects other triples") {
    CHECK_THROWS_AS(kernels_under_222(T(5, 3, 7)), std::invalid_argument);
}

TEST_CASE("auxiliary primes") {
    PrimeTriple t = T(5, 3, 7);
    CHECK(aux_prime(t, Extension::K2, 1000) == 41);
    CHECK(aux_prime(t, Extension::K3, 1000) == aux_by_sieve(t, t.q2, 1000));
    CHECK(aux_prime(t, Extension::K3, 1000) == 13);
    CHECK_THROWS_AS(aux_prime(t, Extension::K2, 10), bound_exhausted);
    CHECK_THROWS_AS(aux_prime(t, Extension::K1, 1000), std::invalid_argument);
    // Returned primes satisfy all the sieve conditions.
    for (auto [p, q1, q2] : {std::array<long, 3>{17, 79, 3}, {13, 19, 3}, {73, 3, 7}}) {
        PrimeTriple u = T(p, q1, q2);
        for (Extension ext : {Extension::K2, Extension::K3}) {
            Int l = aux_prime(u, ext, 100000);
            CHECK(mpz_fdiv_ui(l.get_mpz_t(), 4) == 1);
            CHECK(is_prime(l));
            CHECK(jacobi(u.d, l) == 1);
            CHECK(jacobi(ext == Extension::K2 ? u.q1 : u.q2, l) == -1);
            CHECK(l == aux_by_sieve(u, ext == Extension::K2 ? u.q1 : u.q2, 100000));
        }
    }
}

TEST_CASE("kernel candidates always share their order") {
    for (auto [p, q1, q2] :
         {std::array<long, 3>{5, 3, 7}, {5, 3, 11}, {17, 19, 3}, {17, 79, 3}, {137, 7, 3}}) {
        PrimeTriple t = T(p, q1, q2);
        for (Extension ext : {Extension::K1, Extension::K2, Extension::K3}) {
            KernelResult k = kernel(t, ext);
            CHECK((k.order == 2 || k.order == 4));
            for (const auto& c : k.candidates) CHECK(c.order == k.order);
            CHECK(k.determined() == (k.candidates.size() == 1));
        }
    }
}
