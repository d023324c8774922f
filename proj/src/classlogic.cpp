#include "capkit/classlogic.hpp"

#include <algorithm>
#include <sstream>

namespace capkit {

std::string render_word(ClassWord w) {
    if (w == 0) return "1";
    static constexpr const char* names[] = {"H1", "H2", "Q1", "Q2", "I"};
    std::string out;
    for (int b = 0; b < 5; ++b)
        if (w & (1u << b)) out += names[b];
    return out;
}

void RelationSet::add(ClassWord w) {
    w = reduce(w);
    if (w == 0) return;
    // Keep reduced row echelon form with the lowest set bit as pivot.
    ClassWord pivot = w & ~(w - 1);
    for (ClassWord& b : basis)
        if (b & pivot) b ^= w;
    basis.push_back(w);
    std::sort(basis.begin(), basis.end(),
              [](ClassWord a, ClassWord b) { return (a & ~(a - 1)) < (b & ~(b - 1)); });
}

ClassWord RelationSet::reduce(ClassWord w) const {
    for (ClassWord b : basis) {
        ClassWord pivot = b & ~(b - 1);
        if (w & pivot) w ^= b;
    }
    return w;
}

std::vector<std::string> RelationSet::render() const {
    std::vector<std::string> out;
    for (ClassWord b : basis) out.push_back(render_word(b) + " = 1");
    return out;
}

SubgroupDescriptor make_subgroup(const RelationSet& rel, std::vector<ClassWord> generators) {
    SubgroupDescriptor s;
    s.generators = std::move(generators);
    // Span of the reduced generators, in reduced row echelon form.
    for (ClassWord g : s.generators) {
        ClassWord w = rel.reduce(g);
        for (ClassWord b : s.canonical_basis) {
            ClassWord pivot = b & ~(b - 1);
            if (w & pivot) w ^= b;
        }
        if (w == 0) continue;
        ClassWord pivot = w & ~(w - 1);
        for (ClassWord& b : s.canonical_basis)
            if (b & pivot) b ^= w;
        s.canonical_basis.push_back(w);
    }
    std::sort(s.canonical_basis.begin(), s.canonical_basis.end());
    s.order = 1u << s.canonical_basis.size();
    return s;
}

std::string SubgroupDescriptor::render() const {
    std::string out = "<";
    for (size_t i = 0; i < generators.size(); ++i) {
        if (i > 0) out += ",";
        out += render_word(generators[i]);
    }
    return out + ">";
}

std::string KernelResult::render() const {
    std::string out;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (i > 0) out += " or ";
        out += candidates[i].render();
    }
    return out;
}

int rank_cl2(const PrimeTriple& t) {
    return mpz_fdiv_ui(t.p.get_mpz_t(), 8) == 1 ? 3 : 2;
}

bool i_is_norm(const PrimeTriple& t) {
    return mpz_fdiv_ui(t.p.get_mpz_t(), 8) == 1;
}

std::pair<unsigned, unsigned> ambiguous_orders(const PrimeTriple& t) {
    unsigned am = 1u << rank_cl2(t);
    unsigned am_s = i_is_norm(t) ? am / 2 : am;
    return {am, am_s};
}

RelationSet relations(const PrimeTriple& t) {
    RelationSet rel;
    switch (square_case_triple(t)) {
        case SquareCase::case_p:
            rel.add(kH1 ^ kH2);
            break;
        case SquareCase::case_q1:
            rel.add(kQ1);
            rel.add(kQ2 ^ kH1 ^ kH2);
            break;
        case SquareCase::case_q2:
            rel.add(kQ2);
            rel.add(kQ1 ^ kH1 ^ kH2);
            break;
    }
    return rel;
}

std::pair<SubgroupDescriptor, SubgroupDescriptor> ambiguous_generators(const PrimeTriple& t) {
    RelationSet rel = relations(t);
    std::vector<ClassWord> gens = square_case_triple(t) == SquareCase::case_p
                                      ? std::vector<ClassWord>{kH1, kQ1}
                                      : std::vector<ClassWord>{kH1, kH2};
    SubgroupDescriptor am_s = make_subgroup(rel, gens);
    if (i_is_norm(t)) gens.push_back(kI);
    SubgroupDescriptor am = make_subgroup(rel, gens);
    auto [am_order, am_s_order] = ambiguous_orders(t);
    if (am_s.order != am_s_order || am.order != am_order)
        throw theory_violation("ambiguous_generators: generator count disagrees with order");
    return {am_s, am};
}

namespace {

struct KernelInputs {
    SquareCase eps_d_case;
    bool side_square;   // a +- 1 square for eps_{p q2} (K2) / eps_{p q1} (K3)
    bool q_side_square; // 2 q_j (x +- 1) square for eps_d, j matching ext
};

KernelInputs kernel_inputs(const PrimeTriple& t, Extension ext) {
    if (ext == Extension::K1)
        throw std::logic_error("kernel_inputs: only meaningful for K2/K3");
    KernelInputs in;
    in.eps_d_case = square_case_triple(t);
    const Int pq = ext == Extension::K2 ? t.p * t.q2 : t.p * t.q1;
    in.side_square = square_certificate(fundamental_unit(pq)).side_is_square();
    in.q_side_square = ext == Extension::K2 ? in.eps_d_case == SquareCase::case_q1
                                            : in.eps_d_case == SquareCase::case_q2;
    return in;
}

unsigned kernel_order_case_table(const PrimeTriple& t, Extension ext) {
    if (ext == Extension::K1) return 4;
    KernelInputs in = kernel_inputs(t, ext);
    return in.side_square && !in.q_side_square ? 4 : 2;
}

}  // namespace

unsigned kernel_order(const PrimeTriple& t, Extension ext) {
    unsigned via_cases = kernel_order_case_table(t, ext);
    unsigned via_norms = 2 * norm_unit_index(t, ext);
    if (via_cases != via_norms)
        throw theory_violation("kernel_order: case table and unit-norm route disagree");
    return via_cases;
}

KernelResult kernel(const PrimeTriple& t, Extension ext) {
    RelationSet rel = relations(t);
    KernelResult result;
    auto add = [&](std::vector<ClassWord> gens) {
        result.candidates.push_back(make_subgroup(rel, std::move(gens)));
    };

    if (ext == Extension::K1) {
        if (square_case_triple(t) == SquareCase::case_p) {
            add({kH1, kQ1});
            result.case_no = 1;
        } else {
            add({kH1, kH2});
            result.case_no = 2;
        }
    } else {
        KernelInputs in = kernel_inputs(t, ext);
        const ClassWord q_own = ext == Extension::K2 ? kQ1 : kQ2;
        const ClassWord q_other = ext == Extension::K2 ? kQ2 : kQ1;
        if (in.side_square && !in.q_side_square) {
            add({q_own, kI});
            add({q_own, kH1 ^ kI});
            result.case_no = 1;
        } else if (in.side_square && in.q_side_square) {
            add({kI});
            add({kH1 ^ kI});
            add({kH2 ^ kI});
            add({kH1 ^ kH2 ^ kI});
            result.case_no = 2;
        } else if (!in.side_square && in.q_side_square) {
            add({q_other});
            result.case_no = 3;
        } else {
            add({q_own});
            result.case_no = 4;
        }
    }

    result.order = result.candidates.front().order;
    for (const auto& c : result.candidates)
        if (c.order != result.order)
            throw theory_violation("kernel: candidates of unequal order");
    if (result.order != kernel_order(t, ext))
        throw theory_violation("kernel: subgroup order disagrees with kernel_order");
    return result;
}

SubgroupDescriptor genus_kernel_bound(const PrimeTriple& t) {
    RelationSet rel = relations(t);
    std::vector<ClassWord> gens = square_case_triple(t) == SquareCase::case_p
                                      ? std::vector<ClassWord>{kH1, kQ1}
                                      : std::vector<ClassWord>{kH1, kH2};
    if (i_is_norm(t)) gens.push_back(kI);
    return make_subgroup(rel, gens);
}

std::string to_string(TypeLabel label) {
    switch (label) {
        case TypeLabel::Not222: return "Not222";
        case TypeLabel::BI1: return "BI1";
        case TypeLabel::BI2: return "BI2";
        case TypeLabel::BII1: return "BII1";
        case TypeLabel::BII2: return "BII2";
        case TypeLabel::BIII1: return "BIII1";
        case TypeLabel::BIII2: return "BIII2";
    }
    return "?";
}

bool is_biii(TypeLabel label) {
    return label == TypeLabel::BIII1 || label == TypeLabel::BIII2;
}

TypeLabel classify_type(const PrimeTriple& t) {
    // Condition A.
    if (jacobi(2, t.p) != 1 || jacobi(t.q1, t.q2) != 1 || jacobi(t.q2, t.q1) != -1)
        return TypeLabel::Not222;
    const int p_q1 = jacobi(t.p, t.q1);
    const int p_q2 = jacobi(t.p, t.q2);
    const int two_q1 = jacobi(2, t.q1);
    const int two_q2 = jacobi(2, t.q2);

    if (p_q1 == -1 && p_q2 == -1 && two_q1 * two_q2 == -1)
        return two_q1 == 1 ? TypeLabel::BIII2 : TypeLabel::BIII1;

    bool bi = p_q1 * p_q2 == -1 && two_q1 == -1 && two_q2 == -1;
    bool bii = p_q1 * p_q2 == -1 && two_q1 == 1 && two_q2 == -1;
    if (!bi && !bii) return TypeLabel::Not222;

    // Subtype from the square case of eps_d; such triples are never CaseP.
    switch (square_case_triple(t)) {
        case SquareCase::case_q1: return bi ? TypeLabel::BI1 : TypeLabel::BII1;
        case SquareCase::case_q2: return bi ? TypeLabel::BI2 : TypeLabel::BII2;
        case SquareCase::case_p:
            throw theory_violation("classify_type: B-type triple landed in CaseP");
    }
    return TypeLabel::Not222;
}

namespace {

// Exclusions on eps_{p q2} that the (2,2,2) classification guarantees.
void check_222_exclusions(const PrimeTriple& t, TypeLabel label) {
    const QuadUnit u = fundamental_unit(t.p * t.q2);
    auto square = [&](const Int& m, Sign s) { return is_m_square(u, m, s); };
    bool ok = true;
    switch (label) {
        case TypeLabel::BI1:
        case TypeLabel::BII1:
            ok = !square(1, Sign::plus) && !square(t.p, Sign::minus) &&
                 !square(2 * t.p, Sign::plus);
            break;
        case TypeLabel::BI2:
        case TypeLabel::BII2:
            ok = !square(1, Sign::plus) && !square(t.p, Sign::plus) &&
                 !square(2 * t.p, Sign::minus);
            break;
        case TypeLabel::BIII1:
            ok = !square(1, Sign::minus) && !square(t.p, Sign::plus) &&
                 !square(2 * t.p, Sign::plus);
            break;
        case TypeLabel::BIII2:
            ok = !square(1, Sign::plus) && !square(t.p, Sign::minus) &&
                 !square(2 * t.p, Sign::plus);
            break;
        default:
            break;
    }
    if (!ok) throw theory_violation("kernels_under_222: exclusion check failed");
}

}  // namespace

Kernels222 kernels_under_222(const PrimeTriple& t) {
    TypeLabel label = classify_type(t);
    if (label == TypeLabel::Not222)
        throw std::invalid_argument("kernels_under_222: triple is not of type (2,2,2)");
    check_222_exclusions(t, label);

    RelationSet rel = relations(t);
    Kernels222 out;
    out.label = label;
    auto make_result = [&](std::vector<std::vector<ClassWord>> cand_gens, int case_no) {
        KernelResult r;
        for (auto& gens : cand_gens) r.candidates.push_back(make_subgroup(rel, std::move(gens)));
        r.order = r.candidates.front().order;
        r.case_no = case_no;
        return r;
    };
    const std::vector<std::vector<ClassWord>> four_singletons = {
        {kI}, {kH1 ^ kI}, {kH2 ^ kI}, {kH1 ^ kH2 ^ kI}};

    // K1
    out.k1 = is_biii(label) ? make_result({{kH1, kQ1}}, 1) : make_result({{kH1, kH2}}, 2);

    // K2
    const bool sub1 = label == TypeLabel::BI1 || label == TypeLabel::BII1;
    const bool sub2 = label == TypeLabel::BI2 || label == TypeLabel::BII2;
    if (sub1) {
        out.k2 = make_result(four_singletons, 2);
    } else if (sub2) {
        if (is_m_square(fundamental_unit(t.p * t.q2), 1, Sign::minus))
            out.k2 = make_result({{kH1 ^ kH2, kI}, {kH1 ^ kH2, kH1 ^ kI}}, 1);
        else
            out.k2 = make_result({{kQ1}}, 4);
    } else {  // B(III)
        if (square_certificate(fundamental_unit(t.p * t.q2)).side_is_square())
            out.k2 = make_result({{kQ1, kI}, {kQ1, kH1 ^ kI}}, 1);
        else
            out.k2 = make_result({{kQ1}}, 4);
    }

    // K3, mirror image.  Unlike eps_{p q2}, the plus side CAN be square for
    // eps_{p q1} here (d = 2877 = 137.7.3 has a+1 = 31^2), so the branch
    // condition is a +- 1 rather than a - 1.
    if (sub2) {
        out.k3 = make_result(four_singletons, 2);
    } else if (sub1) {
        if (square_certificate(fundamental_unit(t.p * t.q1)).side_is_square())
            out.k3 = make_result({{kH1 ^ kH2, kI}, {kH1 ^ kH2, kH1 ^ kI}}, 1);
        else
            out.k3 = make_result({{kQ2}}, 4);
    } else {  // B(III)
        if (square_certificate(fundamental_unit(t.p * t.q1)).side_is_square())
            out.k3 = make_result({{kQ2, kI}, {kQ2, kH1 ^ kI}}, 1);
        else
            out.k3 = make_result({{kQ2}}, 4);
    }

    // kappa_G is all of Cl_2(k), of order 8.
    std::vector<ClassWord> genus_gens =
        is_biii(label) ? std::vector<ClassWord>{kH1, kQ1, kI}
                       : std::vector<ClassWord>{kH1, kH2, kI};
    out.genus = make_subgroup(rel, genus_gens);
    if (out.genus.order != 8)
        throw theory_violation("kernels_under_222: genus kernel not of order 8");

    // Cross-check against the general kernel computation: candidate sets must
    // span the same subgroups modulo the relations.
    auto same_candidates = [](const KernelResult& a, const KernelResult& b) {
        if (a.candidates.size() != b.candidates.size() || a.order != b.order) return false;
        for (const auto& ca : a.candidates) {
            bool found = false;
            for (const auto& cb : b.candidates)
                if (ca.same_span(cb)) found = true;
            if (!found) return false;
        }
        return true;
    };
    if (!same_candidates(out.k1, kernel(t, Extension::K1)) ||
        !same_candidates(out.k2, kernel(t, Extension::K2)) ||
        !same_candidates(out.k3, kernel(t, Extension::K3)))
        throw theory_violation("kernels_under_222: mismatch with the general kernels");
    return out;
}

Int aux_prime(const PrimeTriple& t, Extension ext, const Int& limit) {
    if (ext == Extension::K1)
        throw std::invalid_argument("aux_prime: extension must be K2 or K3");
    const Int& q = ext == Extension::K2 ? t.q1 : t.q2;
    for (Int l = 5; l <= limit; l += 4) {
        if (!is_prime(l)) continue;
        if (mpz_divisible_p(Int(2 * t.d).get_mpz_t(), l.get_mpz_t())) continue;
        if (jacobi(t.d, l) != 1) continue;
        if (jacobi(q, l) != -1) continue;
        return l;
    }
    std::ostringstream os;
    os << "aux_prime: no admissible prime <= " << limit << " for d=" << t.d;
    throw bound_exhausted(os.str());
}

}  // namespace capkit
