#include "capkit/tables.hpp"

#include <array>
#include <iomanip>
#include <sstream>

namespace capkit {

std::string to_string(TableId id) {
    static constexpr const char* names[] = {"T1", "T2", "T3", "T4", "T5", "T6"};
    return names[static_cast<int>(id)];
}

TableId table_id_from_string(const std::string& name) {
    for (int i = 0; i < 6; ++i)
        if (name == to_string(static_cast<TableId>(i))) return static_cast<TableId>(i);
    throw std::invalid_argument("unknown table id: " + name);
}

std::string to_string(SquareMarker m) {
    switch (m) {
        case SquareMarker::square_plus: return "square_plus";
        case SquareMarker::square_minus: return "square_minus";
        case SquareMarker::neither: return "neither";
    }
    return "?";
}

const std::vector<std::array<long, 3>>& table_triples(TableId id) {
    static const std::vector<std::array<long, 3>> t1 = {
        {5, 3, 7}, {5, 23, 3}, {17, 3, 7}, {17, 11, 3}, {5, 3, 43}, {5, 47, 3}, {5, 7, 23}};
    static const std::vector<std::array<long, 3>> t2 = {
        {5, 3, 11},  {13, 7, 3}, {5, 3, 19}, {13, 11, 3}, {5, 3, 31},
        {29, 7, 3},  {5, 7, 19}, {13, 19, 3}, {73, 3, 7}};
    static const std::vector<std::array<long, 3>> t3 = {
        {5, 11, 3}, {13, 3, 7},  {5, 19, 3}, {5, 11, 7},  {13, 3, 11},
        {5, 31, 3}, {29, 7, 3},  {5, 19, 7}, {13, 3, 19}, {37, 7, 3},
        {5, 59, 3}, {13, 3, 23}, {5, 11, 19}};
    static const std::vector<std::array<long, 3>> t4 = {
        {5, 7, 3},  {5, 3, 11}, {13, 7, 3},  {5, 3, 19}, {5, 3, 23},
        {5, 23, 3}, {5, 7, 11}, {13, 11, 3}, {5, 3, 31}};
    static const std::vector<std::array<long, 3>> t5 = {
        {17, 3, 79}, {17, 79, 3}, {17, 79, 3}, {17, 79, 3},
        {17, 79, 3}, {17, 79, 3}, {17, 79, 3}, {17, 79, 3}};
    static const std::vector<std::array<long, 3>> t6 = {
        {17, 19, 3}, {73, 3, 7}, {97, 3, 7}, {17, 43, 3}};
    switch (id) {
        case TableId::T1: return t1;
        case TableId::T2: return t2;
        case TableId::T3: return t3;
        case TableId::T4: return t4;
        case TableId::T5: return t5;
        case TableId::T6: return t6;
    }
    throw std::invalid_argument("unknown table id");
}

std::vector<TableRow> compute_table(TableId id) {
    std::vector<TableRow> rows;
    for (const auto& [p, q1, q2] : table_triples(id)) {
        TableRow row;
        row.triple = PrimeTriple::create(p, q1, q2);
        const PrimeTriple& t = row.triple;
        QuadUnit eps_d = fundamental_unit(t.d);

        auto set_marker = [&](const Int& m) {
            if (is_m_square(eps_d, m, Sign::plus))
                row.marker = SquareMarker::square_plus;
            else if (is_m_square(eps_d, m, Sign::minus))
                row.marker = SquareMarker::square_minus;
            else
                row.marker = SquareMarker::neither;
        };

        if (id == TableId::T1 || id == TableId::T2) {
            row.val_plus = t.p * two_x_plus_minus(eps_d, Sign::plus);
            row.val_minus = t.p * two_x_plus_minus(eps_d, Sign::minus);
            set_marker(2 * t.p);
            row.kernel = kernel(t, Extension::K1).render();
        } else {
            QuadUnit eps_pq2 = fundamental_unit(t.p * t.q2);
            if (id == TableId::T3) row.a = eps_pq2.X;
            if (id == TableId::T4) {
                row.a_plus_1 = eps_pq2.X + 1;
                row.a_minus_1 = eps_pq2.X - 1;
            }
            if (id == TableId::T3 || id == TableId::T4) {
                row.val_plus = t.q1 * two_x_plus_minus(eps_d, Sign::plus);
                row.val_minus = t.q1 * two_x_plus_minus(eps_d, Sign::minus);
                set_marker(2 * t.q1);
            }
            row.kernel = kernel(t, Extension::K2).render();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::vector<std::string> csv_header(TableId id) {
    switch (id) {
        case TableId::T1:
        case TableId::T2:
            return {"d", "factorization", "2p(x+1)", "2p(x-1)", "marker"};
        case TableId::T3:
            return {"d", "factorization", "a", "2q1(x+1)", "2q1(x-1)", "marker"};
        case TableId::T4:
            return {"d", "factorization", "a_plus_1", "a_minus_1", "2q1(x+1)", "2q1(x-1)",
                    "marker"};
        case TableId::T5:
        case TableId::T6:
            return {"d", "factorization", "kernel_k2"};
    }
    return {};
}

std::vector<std::string> row_cells(TableId id, const TableRow& r) {
    switch (id) {
        case TableId::T1:
        case TableId::T2:
            return {r.triple.d.get_str(), r.triple.factor_str(), r.val_plus.get_str(),
                    r.val_minus.get_str(), to_string(r.marker)};
        case TableId::T3:
            return {r.triple.d.get_str(), r.triple.factor_str(), r.a.get_str(),
                    r.val_plus.get_str(), r.val_minus.get_str(), to_string(r.marker)};
        case TableId::T4:
            return {r.triple.d.get_str(),     r.triple.factor_str(),
                    r.a_plus_1.get_str(),     r.a_minus_1.get_str(),
                    r.val_plus.get_str(),     r.val_minus.get_str(),
                    to_string(r.marker)};
        case TableId::T5:
        case TableId::T6:
            return {r.triple.d.get_str(), r.triple.factor_str(), r.kernel};
    }
    return {};
}

constexpr const char* kCaptions[] = {
    "T1: 2p(x+1) or 2p(x-1) a perfect square; kernel of K1 is <H1,Q1>",
    "T2: neither 2p(x+1) nor 2p(x-1) a square; kernel of K1 is <H1,H2>",
    "T3: a+-1 not square, 2q1(x+-1) square; kernel of K2 is <Q2> = <H1H2>",
    "T4: a+-1, 2q1(x+-1) all non-square; kernel of K2 is <Q1>",
    "T5: a+-1 square, 2q1(x+-1) not; kernel of K2 has order 4",
    "T6: a+-1 and 2q1(x+-1) both square; kernel of K2 has order 2",
};

}  // namespace

std::string render_table_csv(TableId id) {
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) os << ",";
            if (cells[i].find(',') != std::string::npos)
                os << '"' << cells[i] << '"';
            else
                os << cells[i];
        }
        os << "\n";
    };
    emit(csv_header(id));
    for (const auto& row : compute_table(id)) emit(row_cells(id, row));
    return os.str();
}

std::string render_table_text(TableId id) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back(csv_header(id));
    std::vector<TableRow> rows = compute_table(id);
    for (const auto& row : rows) {
        grid.push_back(row_cells(id, row));
        // In text mode the kernel prediction is shown for every table.
        if (id != TableId::T5 && id != TableId::T6) grid.back().push_back(row.kernel);
    }
    if (id != TableId::T5 && id != TableId::T6)
        grid.front().push_back(id == TableId::T1 || id == TableId::T2 ? "kernel_k1"
                                                                      : "kernel_k2");
    std::vector<size_t> width(grid.front().size(), 0);
    for (const auto& row : grid)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    os << kCaptions[static_cast<int>(id)] << "\n";
    for (const auto& row : grid) {
        for (size_t i = 0; i < row.size(); ++i)
            os << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace capkit
