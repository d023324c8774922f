#include "capkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace capkit {

namespace {

void verify_certificate(const SquareCertificate& cert) {
    const QuadUnit& u = cert.unit;
    for (Sign s : {Sign::plus, Sign::minus}) {
        Int v = s == Sign::plus ? Int(u.X + u.D) : Int(u.X - u.D);
        Int mv = cert.m(s) * v;
        if (!mpz_divisible_ui_p(mv.get_mpz_t(), u.D) ||
            mv / u.D != cert.w(s) * cert.w(s))
            throw theory_violation("analyze: certificate re-verification failed");
    }
}

}  // namespace

AnalysisReport analyze(const PrimeTriple& t, const Int& aux_limit) {
    AnalysisReport r;
    r.triple = t;

    r.eps_d = fundamental_unit(t.d);
    r.eps_pq1 = fundamental_unit(t.p * t.q1);
    r.eps_pq2 = fundamental_unit(t.p * t.q2);
    r.eps_q1q2 = fundamental_unit(t.q1 * t.q2);
    r.eps_p = fundamental_unit(t.p);
    r.cert_d = square_certificate(r.eps_d);
    r.cert_pq1 = square_certificate(r.eps_pq1);
    r.cert_pq2 = square_certificate(r.eps_pq2);
    r.cert_q1q2 = square_certificate(r.eps_q1q2);
    for (const auto* c : {&r.cert_d, &r.cert_pq1, &r.cert_pq2, &r.cert_q1q2})
        verify_certificate(*c);

    r.square_case = square_case_triple(t);
    r.sys_k = base_field_units(t);
    r.sys_k1 = unit_system(t, Extension::K1, false);
    r.sys_k2 = unit_system(t, Extension::K2, false);
    r.sys_k3 = unit_system(t, Extension::K3, false);
    r.rank = rank_cl2(t);
    r.i_norm = i_is_norm(t);
    std::tie(r.am_order, r.am_s_order) = ambiguous_orders(t);
    std::tie(r.am_s_gens, r.am_gens) = ambiguous_generators(t);
    r.rels = relations(t);
    r.kernel_k1 = kernel(t, Extension::K1);
    r.kernel_k2 = kernel(t, Extension::K2);
    r.kernel_k3 = kernel(t, Extension::K3);
    const std::pair<const KernelResult*, Extension> kernel_checks[] = {
        {&r.kernel_k1, Extension::K1},
        {&r.kernel_k2, Extension::K2},
        {&r.kernel_k3, Extension::K3}};
    for (const auto& [k, ext] : kernel_checks)
        if (k->order != kernel_order(t, ext))
            throw theory_violation("analyze: kernel order mismatch");
    r.genus_bound = genus_kernel_bound(t);
    r.type_label = classify_type(t);
    try {
        r.aux_k2 = aux_prime(t, Extension::K2, aux_limit);
        r.aux_k3 = aux_prime(t, Extension::K3, aux_limit);
    } catch (const bound_exhausted&) {
        r.warnings.push_back("auxiliary prime sieve exhausted below the limit");
    }
    if (r.i_norm)
        r.warnings.push_back(
            "|Am| reported as 2^rank = 8; an alternative count of 16 "
            "circulates for p = 1 (mod 8) and is not used here");
    return r;
}

namespace {

using json = nlohmann::ordered_json;

std::string str(const Int& n) { return n.get_str(); }

json unit_json(const QuadUnit& u, const SquareCertificate* cert) {
    json j;
    j["d"] = str(u.d);
    j["x"] = str(u.X);
    j["y"] = str(u.Y);
    j["denom"] = u.D;
    j["norm"] = u.norm;
    if (cert) {
        json c;
        c["m_plus"] = str(cert->m_plus);
        c["w_plus"] = str(cert->w_plus);
        c["m_minus"] = str(cert->m_minus);
        c["w_minus"] = str(cert->w_minus);
        j["certificate"] = c;
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

json system_json(const UnitSystem& s) {
    json j;
    j["field"] = s.field_label;
    j["hasse_index"] = s.hasse_index;
    j["torsion"] = s.torsion;
    j["generators"] = s.render();
    return j;
}

json kernel_json(const KernelResult& k) {
    json j;
    j["order"] = k.order;
    j["case"] = k.case_no;
    if (const auto* det = k.determined_subgroup()) {
        j["determined"] = det->render();
        std::string canon = "<";
        for (size_t i = 0; i < det->canonical_basis.size(); ++i) {
            if (i > 0) canon += ",";
            canon += render_word(det->canonical_basis[i]);
        }
        j["canonical"] = canon + ">";
    } else {
        j["determined"] = nullptr;
        j["canonical"] = nullptr;
    }
    json cands = json::array();
    for (const auto& c : k.candidates) cands.push_back(c.render());
    j["candidates"] = cands;
    return j;
}

}  // namespace

json report_to_json(const AnalysisReport& r) {
    json j;
    json triple;
    triple["p"] = str(r.triple.p);
    triple["q1"] = str(r.triple.q1);
    triple["q2"] = str(r.triple.q2);
    triple["d"] = str(r.triple.d);
    triple["e"] = str(r.triple.e);
    triple["f"] = str(r.triple.f);
    j["triple"] = triple;

    json units;
    units["eps_pq1q2"] = unit_json(r.eps_d, &r.cert_d);
    units["eps_pq1"] = unit_json(r.eps_pq1, &r.cert_pq1);
    units["eps_pq2"] = unit_json(r.eps_pq2, &r.cert_pq2);
    units["eps_q1q2"] = unit_json(r.eps_q1q2, &r.cert_q1q2);
    units["eps_p"] = unit_json(r.eps_p, nullptr);
    j["units"] = units;

    j["square_case"] = to_string(r.square_case);

    json systems;
    systems["k"] = system_json(r.sys_k);
    systems["k1"] = system_json(r.sys_k1);
    systems["k2"] = system_json(r.sys_k2);
    systems["k3"] = system_json(r.sys_k3);
    j["unit_systems"] = systems;

    json hasse;
    hasse["k1"] = r.sys_k1.hasse_index;
    hasse["k2"] = r.sys_k2.hasse_index;
    hasse["k3"] = r.sys_k3.hasse_index;
    j["hasse_indices"] = hasse;

    j["rank"] = r.rank;
    j["i_is_norm"] = r.i_norm;

    json amb;
    amb["am_order"] = r.am_order;
    amb["am_s_order"] = r.am_s_order;
    amb["am_s_generators"] = r.am_s_gens.render();
    amb["am_generators"] = r.am_gens.render();
    j["ambiguous"] = amb;

    j["relations"] = r.rels.render();
    j["kernel_k1"] = kernel_json(r.kernel_k1);
    j["kernel_k2"] = kernel_json(r.kernel_k2);
    j["kernel_k3"] = kernel_json(r.kernel_k3);

    json genus;
    genus["generators"] = r.genus_bound.render();
    genus["containment_only"] = true;
    j["genus_bound"] = genus;

    j["type_label"] = to_string(r.type_label);

    json aux;
    aux["k2"] = r.aux_k2 ? json(str(*r.aux_k2)) : json(nullptr);
    aux["k3"] = r.aux_k3 ? json(str(*r.aux_k3)) : json(nullptr);
    j["aux_primes"] = aux;

    j["warnings"] = r.warnings;
    return j;
}

namespace {

void line(std::ostringstream& os, const std::string& key, const std::string& value) {
    os << std::left << std::setw(14) << key << value << "\n";
}

std::string cert_str(const SquareCertificate& c) {
    std::ostringstream os;
    os << "m+=" << c.m_plus << " (w=" << c.w_plus << ")  m-=" << c.m_minus << " (w="
       << c.w_minus << ")";
    return os.str();
}

std::string system_str(const UnitSystem& s) {
    std::ostringstream os;
    os << "Q=" << s.hasse_index << "  { " << s.torsion;
    for (const auto& g : s.render()) os << "; " << g;
    os << " }";
    return os.str();
}

std::string kernel_str(const KernelResult& k) {
    std::ostringstream os;
    os << "order " << k.order << "  case " << k.case_no << "  " << k.render();
    return os.str();
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    {
        std::ostringstream t;
        t << "p=" << r.triple.p << " q1=" << r.triple.q1 << " q2=" << r.triple.q2
          << "  d=" << r.triple.d << " = " << r.triple.factor_str() << "  (e=" << r.triple.e
          << ", f=" << r.triple.f << ")";
        line(os, "triple", t.str());
    }
    line(os, "eps_pq1q2", r.eps_d.str() + "  norm " + (r.eps_d.norm > 0 ? "+1" : "-1"));
    line(os, "  cert", cert_str(r.cert_d));
    line(os, "eps_pq1", r.eps_pq1.str());
    line(os, "  cert", cert_str(r.cert_pq1));
    line(os, "eps_pq2", r.eps_pq2.str());
    line(os, "  cert", cert_str(r.cert_pq2));
    line(os, "eps_q1q2", r.eps_q1q2.str());
    line(os, "  cert", cert_str(r.cert_q1q2));
    line(os, "eps_p", r.eps_p.str() + "  norm " + (r.eps_p.norm > 0 ? "+1" : "-1"));
    line(os, "square_case", to_string(r.square_case));
    line(os, "units(k)", system_str(r.sys_k));
    line(os, "units(K1)", system_str(r.sys_k1));
    line(os, "units(K2)", system_str(r.sys_k2));
    line(os, "units(K3)", system_str(r.sys_k3));
    line(os, "rank", std::to_string(r.rank));
    line(os, "i_is_norm", r.i_norm ? "yes" : "no");
    {
        std::ostringstream t;
        t << "|Am|=" << r.am_order << " |Am_s|=" << r.am_s_order
          << "  Am_s=" << r.am_s_gens.render() << "  Am=" << r.am_gens.render();
        line(os, "ambiguous", t.str());
    }
    {
        std::string rels;
        for (const auto& rel : r.rels.render()) rels += (rels.empty() ? "" : ",  ") + rel;
        line(os, "relations", rels.empty() ? "(none)" : rels);
    }
    line(os, "kernel(K1)", kernel_str(r.kernel_k1));
    line(os, "kernel(K2)", kernel_str(r.kernel_k2));
    line(os, "kernel(K3)", kernel_str(r.kernel_k3));
    line(os, "genus_bound", r.genus_bound.render() + "  (containment only)");
    line(os, "type", to_string(r.type_label));
    {
        std::ostringstream t;
        t << "K2: " << (r.aux_k2 ? r.aux_k2->get_str() : "-") << "   K3: "
          << (r.aux_k3 ? r.aux_k3->get_str() : "-");
        line(os, "aux_prime", t.str());
    }
    for (const auto& w : r.warnings) line(os, "warning", w);
    return os.str();
}

}  // namespace capkit
