#pragma once

#include "capkit/classlogic.hpp"

#include <array>
#include <string>
#include <vector>

namespace capkit {

// Built-in example tables, one per class of triples:
//   T1: 2p(x+-1) square for eps_d              (kernel K1 = <H1,Q1>)
//   T2: neither 2p(x+1) nor 2p(x-1) square     (kernel K1 = <H1,H2>)
//   T3: a+-1 not square, 2q1(x+-1) square      (kernel K2 case 3)
//   T4: a+-1 and 2q1(x+-1) all non-square      (kernel K2 case 4)
//   T5: a+-1 square, 2q1(x+-1) not             (kernel K2 case 1)
//   T6: a+-1 and 2q1(x+-1) both square         (kernel K2 case 2)
// with a taken from eps_{p q2} and x from eps_d.
enum class TableId { T1, T2, T3, T4, T5, T6 };

std::string to_string(TableId id);
TableId table_id_from_string(const std::string& name);

enum class SquareMarker { square_plus, square_minus, neither };

std::string to_string(SquareMarker m);

struct TableRow {
    PrimeTriple triple;
    // Cells actually present depend on the table; unused ones stay empty.
    Int val_plus, val_minus;   // 2p(x+-1) for T1/T2, 2q1(x+-1) for T3/T4
    Int a_plus_1, a_minus_1;   // T4 only
    Int a;                     // T3 only
    SquareMarker marker = SquareMarker::neither;
    std::string kernel;        // symbolic kernel prediction (K1 for T1/T2, K2 otherwise)
};

const std::vector<std::array<long, 3>>& table_triples(TableId id);
std::vector<TableRow> compute_table(TableId id);

std::string render_table_text(TableId id);
std::string render_table_csv(TableId id);

}  // namespace capkit
