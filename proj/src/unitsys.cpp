#include "capkit/unitsys.hpp"

#include <numeric>
#include <sstream>

namespace capkit {

std::string to_string(Extension ext) {
    switch (ext) {
        case Extension::K1: return "K1";
        case Extension::K2: return "K2";
        case Extension::K3: return "K3";
    }
    return "?";
}

namespace {

constexpr const char* kSymbolNames[kNumUnitSymbols] = {
    "i", "eps_p", "eps_q1", "eps_q2", "eps_pq1", "eps_pq2", "eps_q1q2", "eps_pq1q2"};

}  // namespace

UnitGenerator UnitGenerator::pure(UnitSymbol s) {
    UnitGenerator g;
    g.exp2[static_cast<int>(s)] = 2;
    return g;
}

UnitGenerator UnitGenerator::sqrt_of(std::initializer_list<UnitSymbol> symbols) {
    UnitGenerator g;
    for (UnitSymbol s : symbols) g.exp2[static_cast<int>(s)] = 1;
    return g;
}

bool UnitGenerator::is_root() const {
    for (int e : exp2)
        if (e % 2 != 0) return true;
    return false;
}

std::string UnitGenerator::render() const {
    std::ostringstream os;
    if (is_root()) {
        os << "sqrt(";
        bool first = true;
        for (int s = 0; s < kNumUnitSymbols; ++s) {
            if (exp2[s] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << kSymbolNames[s];
            if (exp2[s] != 1) os << "^" << exp2[s];
        }
        os << ")";
        return os.str();
    }
    bool first = true;
    for (int s = 0; s < kNumUnitSymbols; ++s) {
        if (exp2[s] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << kSymbolNames[s];
        if (exp2[s] != 2) os << "^" << exp2[s] / 2;
    }
    return first ? "1" : os.str();
}

std::vector<std::string> UnitSystem::render() const {
    std::vector<std::string> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.render());
    return out;
}

namespace {

using S = UnitSymbol;

struct K23Symbols {
    S eps_q;    // eps_q1 for K2, eps_q2 for K3
    S eps_pq;   // eps_pq2 for K2, eps_pq1 for K3
};

K23Symbols k23_symbols(Extension ext) {
    return ext == Extension::K2 ? K23Symbols{S::eps_q1, S::eps_pq2}
                                : K23Symbols{S::eps_q2, S::eps_pq1};
}

}  // namespace

UnitSystem base_field_units(const PrimeTriple& t) {
    QuadUnit eps = fundamental_unit(t.d);
    SquareCertificate cert = square_certificate(eps);
    if (cert.side_is_square())
        throw theory_violation("base_field_units: x +- 1 square for eps_d");
    UnitSystem sys;
    sys.field_label = "k";
    sys.generators = {UnitGenerator::pure(S::eps_pq1q2)};
    sys.hasse_index = 1;
    sys.torsion = "i";
    return sys;
}

UnitSystem unit_system(const PrimeTriple& t, Extension ext, bool real_only) {
    const SquareCase c = square_case_triple(t);
    UnitSystem sys;
    sys.field_label = to_string(ext) + (real_only ? "+" : "");
    sys.torsion = real_only ? "-1" : "i";

    if (ext == Extension::K1) {
        // Q = 1: the real system survives into the CM field.
        sys.hasse_index = 1;
        UnitGenerator third = c == SquareCase::case_p
                                  ? UnitGenerator::sqrt_of({S::eps_pq1q2})
                                  : UnitGenerator::sqrt_of({S::eps_q1q2, S::eps_pq1q2});
        sys.generators = {UnitGenerator::pure(S::eps_p), UnitGenerator::pure(S::eps_q1q2),
                          third};
        return sys;
    }

    sys.hasse_index = 2;
    const auto [eps_q, eps_pq] = k23_symbols(ext);
    const Int pq = ext == Extension::K2 ? t.p * t.q2 : t.p * t.q1;
    const PqSplit pair = pq_split(t.p, square_certificate(fundamental_unit(pq)));
    const bool eps_d_splits =  // eps_{p q1 q2} becomes a square in K_j^+
        (ext == Extension::K2 && c == SquareCase::case_q1) ||
        (ext == Extension::K3 && c == SquareCase::case_q2);

    UnitGenerator g_q = UnitGenerator::pure(eps_q);
    UnitGenerator g_pq = UnitGenerator::pure(eps_pq);
    UnitGenerator g_d = UnitGenerator::pure(S::eps_pq1q2);
    UnitGenerator g_root_d = UnitGenerator::sqrt_of({S::eps_pq1q2});
    UnitGenerator g_mix = UnitGenerator::sqrt_of({eps_q, eps_pq});
    UnitGenerator g_i_q = UnitGenerator::sqrt_of({S::i, eps_q});

    std::vector<UnitGenerator> real, cm;
    if (eps_d_splits) {
        if (pair == PqSplit::unit_side) {
            real = {g_q, g_mix, g_root_d};
            cm = {g_mix, g_root_d, g_i_q};
        } else {
            real = {g_q, g_pq, g_root_d};
            cm = {g_pq, g_root_d, g_i_q};
        }
    } else {
        switch (pair) {
            case PqSplit::unit_side:
                real = {g_q, g_mix, g_d};
                cm = {g_mix, g_d, g_i_q};
                break;
            case PqSplit::p_side:
                real = {g_q, g_pq, UnitGenerator::sqrt_of({eps_q, eps_pq, S::eps_pq1q2})};
                cm = {g_pq, UnitGenerator::sqrt_of({eps_q, eps_pq, S::eps_pq1q2}), g_i_q};
                break;
            case PqSplit::two_p_side:
                real = {g_q, g_pq, UnitGenerator::sqrt_of({eps_pq, S::eps_pq1q2})};
                cm = {g_pq, UnitGenerator::sqrt_of({eps_pq, S::eps_pq1q2}), g_i_q};
                break;
        }
    }
    sys.generators = real_only ? real : cm;
    return sys;
}

int norm_unit_index(const PrimeTriple& t, Extension ext) {
    // N_{K/k} fixes eps_{p q1 q2} (contributing its square), sends i and
    // eps_p to -1, and kills every other basis unit into +1.  The image of a
    // generator is therefore (i^a, eps^b) with a = exp2(i) + exp2(eps_p)
    // mod 4 and b = exp2(eps_pq1q2); sign ambiguities of square roots are
    // absorbed because -1 = N(i) is always in the image.
    UnitSystem sys = unit_system(t, ext, /*real_only=*/false);
    std::vector<std::pair<int, int>> lattice = {{4, 0}, {2, 0}};  // i^4 = 1, N(i) = -1
    for (const auto& g : sys.generators) {
        int a = (g.exp2[static_cast<int>(S::i)] + g.exp2[static_cast<int>(S::eps_p)]) % 4;
        int b = g.exp2[static_cast<int>(S::eps_pq1q2)];
        lattice.emplace_back(a, b);
    }
    // Index of the image in Z/4 x Z = index in Z^2 of the span plus (4,0).
    int g2 = 0, a_star = 0;
    for (auto& [a, b] : lattice) {
        if (b == 0) continue;
        if (g2 == 0) {
            g2 = b;
            a_star = a;
        } else {
            while (b % g2 != 0) {  // gcd by subtraction keeps the x-part paired
                int q = b / g2;
                a -= q * a_star;
                b -= q * g2;
                std::swap(a, a_star);
                std::swap(b, g2);
            }
        }
    }
    if (g2 == 0) throw theory_violation("norm_unit_index: no eps component in image");
    int gx = 0;
    for (auto& [a, b] : lattice) {
        int q = b / g2;
        int a0 = a - q * a_star;
        gx = std::gcd(gx, a0);
    }
    int index = gx * g2;
    if (index != 1 && index != 2)
        throw theory_violation("norm_unit_index: index outside {1, 2}");
    return index;
}

}  // namespace capkit
