#pragma once

#include "capkit/classlogic.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace capkit {

// All valid ordered triples with d <= max_d, in ascending (d, p, q1) order.
std::vector<PrimeTriple> enumerate_triples(long max_d);

// Primes below limit, optionally filtered by residue mod 4.
std::vector<long> primes_below(long limit);

struct SweepResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::vector<std::string> violations;  // first few failures, for reporting

    bool ok() const { return failed == 0; }
};

// Named invariant sweeps.  The bound applies to each sweep's natural
// parameter (a prime bound or a bound on d, as noted per sweep).
SweepResult sweep_unit_oracle(long d_bound, unsigned long y_bound = 5000);
SweepResult sweep_trichotomy(long d_bound);
SweepResult sweep_two_prime_pairs(long prime_bound);     // eps_{q1 q2}: pair {2q1, 2q2}
SweepResult sweep_pq_pairs(long prime_bound);            // eps_{p q}: three splits
SweepResult sweep_q3_units(long prime_bound);            // eps_q: x even, pair {1, q}
SweepResult sweep_pair_complement(long d_bound);         // m+ * m- in {d, 4d}
SweepResult sweep_one_mod4_exclusions(long d_bound);     // x+-1, r(x+-1) non-square
SweepResult sweep_side_square_p_mod8(long d_bound);      // a+-1 square => p = 1 (mod 8)
SweepResult sweep_b_type_exclusions(long d_bound);       // exclusions on eps_{p q2}
SweepResult sweep_case_sign(long d_bound);               // B-type => pinned square side
SweepResult sweep_kernel_dual_route(long d_bound);
SweepResult sweep_222_consistency(long d_bound);
SweepResult sweep_ambiguous_orders(long d_bound);

// Suite names: units, squares, lemmas, kernels, all.
std::vector<SweepResult> verify_suite(const std::string& suite, long bound);

struct SearchRecord {
    PrimeTriple triple;
    SquareCase square_case;
    TypeLabel type;
};

std::vector<SearchRecord> search_triples(long max_d, std::optional<TypeLabel> filter);

}  // namespace capkit
