#pragma once

#include "capkit/classlogic.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace capkit {

// Everything the library can say about one triple, assembled in one place.
struct AnalysisReport {
    PrimeTriple triple;

    QuadUnit eps_d, eps_pq1, eps_pq2, eps_q1q2, eps_p;
    SquareCertificate cert_d, cert_pq1, cert_pq2, cert_q1q2;  // norm +1 units only

    SquareCase square_case;
    UnitSystem sys_k, sys_k1, sys_k2, sys_k3;
    int rank = 0;
    bool i_norm = false;
    unsigned am_order = 0, am_s_order = 0;
    SubgroupDescriptor am_s_gens, am_gens;
    RelationSet rels;
    KernelResult kernel_k1, kernel_k2, kernel_k3;
    SubgroupDescriptor genus_bound;
    TypeLabel type_label = TypeLabel::Not222;
    std::optional<Int> aux_k2, aux_k3;
    std::vector<std::string> warnings;
};

// Full analysis; re-verifies every certificate and the kernel orders before
// returning.  aux_limit bounds the auxiliary-prime sieve.
AnalysisReport analyze(const PrimeTriple& t, const Int& aux_limit = 100000);

nlohmann::ordered_json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace capkit
