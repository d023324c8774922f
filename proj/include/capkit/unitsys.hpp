#pragma once

#include "capkit/squarecls.hpp"
#include "capkit/triple.hpp"

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

namespace capkit {

// The three unramified quadratic extensions of k = Q(sqrt(p q1 q2), i) that
// are abelian over Q: K1 = k(sqrt p), K2 = k(sqrt q1), K3 = k(sqrt q2).
enum class Extension { K1, K2, K3 };

std::string to_string(Extension ext);

// Basis symbols for writing units of k and the K_j multiplicatively.
enum class UnitSymbol : int {
    i = 0,
    eps_p,
    eps_q1,
    eps_q2,
    eps_pq1,
    eps_pq2,
    eps_q1q2,
    eps_pq1q2,
};

inline constexpr int kNumUnitSymbols = 8;

// Formal product of basis symbols with half-integer exponents, stored
// doubled; an odd doubled exponent marks a square root.
struct UnitGenerator {
    std::array<int, kNumUnitSymbols> exp2{};

    static UnitGenerator pure(UnitSymbol s);
    static UnitGenerator sqrt_of(std::initializer_list<UnitSymbol> symbols);

    bool is_root() const;
    std::string render() const;  // e.g. "sqrt(eps_q1*eps_pq2)"
    bool operator==(const UnitGenerator&) const = default;
};

// Fundamental system of units of one field in the tower, together with the
// Hasse unit index of the CM field it belongs to.  CM systems carry the
// torsion generator i alongside the three fundamental units.
struct UnitSystem {
    std::string field_label;
    std::vector<UnitGenerator> generators;
    int hasse_index = 1;
    std::string torsion;  // "i" for CM fields, "-1" for real ones

    std::vector<std::string> render() const;
};

// E_k = <i, eps_pq1q2>: x +- 1 is never a square for eps_{p q1 q2}, so the
// fundamental unit survives unchanged in k.
UnitSystem base_field_units(const PrimeTriple& t);

// Fundamental system of units of K_j (or of its maximal real subfield),
// selected by the square certificates of eps_d and eps_{p q2} / eps_{p q1}.
UnitSystem unit_system(const PrimeTriple& t, Extension ext, bool real_only);

// [E_k : N_{K/k}(E_K)], computed by applying the relative norm to each
// generator symbolically; always 1 or 2.
int norm_unit_index(const PrimeTriple& t, Extension ext);

}  // namespace capkit
