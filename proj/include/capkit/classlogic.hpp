#pragma once

#include "capkit/squarecls.hpp"
#include "capkit/triple.hpp"
#include "capkit/unitsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace capkit {

// Formal 2-torsion class symbols of Cl_2(k): [H1], [H2] above the Gaussian
// factors of p, [Q1], [Q2] above q1, q2, and [I] above an auxiliary split
// prime.  Words are F_2 products encoded as bitmasks.
using ClassWord = unsigned;

inline constexpr ClassWord kH1 = 1u << 0;
inline constexpr ClassWord kH2 = 1u << 1;
inline constexpr ClassWord kQ1 = 1u << 2;
inline constexpr ClassWord kQ2 = 1u << 3;
inline constexpr ClassWord kI = 1u << 4;

std::string render_word(ClassWord w);  // "H1H2I", "1" for the identity

// Relations among the class symbols implied by the square case of eps_d:
//   CaseP:  H1 H2 = 1
//   CaseQ1: Q1 = 1 and Q2 = H1 H2
//   CaseQ2: Q2 = 1 and Q1 = H1 H2
struct RelationSet {
    std::vector<ClassWord> basis;  // reduced row echelon over F_2

    void add(ClassWord w);
    ClassWord reduce(ClassWord w) const;
    bool is_trivial(ClassWord w) const { return reduce(w) == 0; }
    std::vector<std::string> render() const;
};

// Subgroup of the formal class group given by generators; order computed as
// 2^rank modulo the relations.
struct SubgroupDescriptor {
    std::vector<ClassWord> generators;       // as stated, for display
    std::vector<ClassWord> canonical_basis;  // reduced modulo relations
    unsigned order = 1;

    std::string render() const;  // "<H1,Q1>"
    bool same_span(const SubgroupDescriptor& other) const {
        return canonical_basis == other.canonical_basis;
    }
};

SubgroupDescriptor make_subgroup(const RelationSet& rel, std::vector<ClassWord> generators);

// Capitulation kernel of K_j/k: a single determined subgroup, or the list of
// alternatives when the underlying classification leaves several.
struct KernelResult {
    std::vector<SubgroupDescriptor> candidates;  // nonempty; all same order
    unsigned order = 1;
    int case_no = 0;  // case number in the four-way split for K2/K3, two-way for K1

    bool determined() const { return candidates.size() == 1; }
    const SubgroupDescriptor* determined_subgroup() const {
        return determined() ? &candidates[0] : nullptr;
    }
    std::string render() const;  // "<Q1,I> or <Q1,H1I>"
};

// rank Cl_2(k): 3 if p = 1 (mod 8), else 2.
int rank_cl2(const PrimeTriple& t);

// Whether i is a norm in k/Q(i); true iff p = 1 (mod 8).
bool i_is_norm(const PrimeTriple& t);

// (|Am|, |Am_s|) for k/Q(i): |Am| = 2^rank, and the strongly ambiguous part
// is half of it exactly when i is a norm.
std::pair<unsigned, unsigned> ambiguous_orders(const PrimeTriple& t);

RelationSet relations(const PrimeTriple& t);

// Generators of Am_s and Am: <H1,Q1> in CaseP, else <H1,H2>; Am gains [I]
// exactly when p = 1 (mod 8).
std::pair<SubgroupDescriptor, SubgroupDescriptor> ambiguous_generators(const PrimeTriple& t);

// |kappa_{K_j}|, computed two ways (the case table, and 2 * [E_k : N(E_K)]),
// which must agree; returns 2 or 4.
unsigned kernel_order(const PrimeTriple& t, Extension ext);

KernelResult kernel(const PrimeTriple& t, Extension ext);

// Lower bound for the capitulation kernel of the genus field (containment
// only, not an equality in general).
SubgroupDescriptor genus_kernel_bound(const PrimeTriple& t);

// Classification of Cl_2(k) = (2,2,2) by quadratic residue conditions, with
// the B-subtypes resolved through the square case of eps_d.
enum class TypeLabel { Not222, BI1, BI2, BII1, BII2, BIII1, BIII2 };

std::string to_string(TypeLabel label);
bool is_biii(TypeLabel label);

TypeLabel classify_type(const PrimeTriple& t);

// Kernels of all three extensions plus the genus-field statement, valid only
// for (2,2,2) triples; cross-checked against the general kernel computation.
struct Kernels222 {
    TypeLabel label = TypeLabel::Not222;
    KernelResult k1, k2, k3;
    SubgroupDescriptor genus;  // kappa_G = Cl_2(k), order 8
};

Kernels222 kernels_under_222(const PrimeTriple& t);

// Smallest prime l <= limit with l = 1 (mod 4), l coprime to 2d,
// (d/l) = 1 and (q1/l) = -1 (q2 for K3); such l split completely in k and
// stay inert in the extension, providing the class [I].
Int aux_prime(const PrimeTriple& t, Extension ext, const Int& limit);

}  // namespace capkit
