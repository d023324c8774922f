// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Expected numbers are frozen from the published example tables.

#include "capkit/report.hpp"
#include "capkit/sweeps.hpp"
#include "capkit/tables.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace capkit;

namespace {

int failures = 0;
int criterion_no = 0;

void report(const std::string& name, bool ok, double seconds, double budget,
            const std::string& detail = "") {
    ++criterion_no;
    std::printf("[%2d/10] %s  %-48s %6.2fs (budget %gs)%s%s\n", criterion_no,
                ok ? "PASS" : "FAIL", name.c_str(), seconds, budget,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

template <typename F>
void run(const std::string& name, double budget, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    report(name, ok, seconds, budget, detail);
}

struct TwoColRow {
    long p, q1, q2;
    const char* plus;
    const char* minus;
    SquareMarker marker;
};

bool check_two_col_table(TableId id, const std::vector<TwoColRow>& expected,
                         std::string& detail) {
    std::vector<TableRow> rows = compute_table(id);
    if (rows.size() != expected.size()) {
        detail = "row count mismatch";
        return false;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& e = expected[i];
        const auto& r = rows[i];
        if (r.triple.p != e.p || r.triple.q1 != e.q1 || r.triple.q2 != e.q2 ||
            r.val_plus != Int(e.plus) || r.val_minus != Int(e.minus) ||
            r.marker != e.marker) {
            detail = "mismatch at d=" + r.triple.d.get_str();
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    run("2p-table values, marked side square", 1.0, [](std::string& detail) {
        return check_two_col_table(
            TableId::T1,
            {{5, 3, 7, "420", "400", SquareMarker::square_minus},
             {5, 23, 3, "67620", "67600", SquareMarker::square_minus},
             {17, 3, 7, "357", "289", SquareMarker::square_minus},
             {17, 11, 3, "17774724", "17774656", SquareMarker::square_minus},
             {5, 3, 43, "645", "625", SquareMarker::square_minus},
             {5, 47, 3, "2371620", "2371600", SquareMarker::square_minus},
             {5, 7, 23, "7245", "7225", SquareMarker::square_minus}},
            detail);
    });

    run("2p-table values, neither side square", 1.0, [](std::string& detail) {
        return check_two_col_table(
            TableId::T2,
            {{5, 3, 11, "75", "55", SquareMarker::neither},
             {13, 7, 3, "18928", "18876", SquareMarker::neither},
             {5, 3, 19, "95", "75", SquareMarker::neither},
             {13, 11, 3, "1911", "1859", SquareMarker::neither},
             {5, 3, 31, "158720", "158700", SquareMarker::neither},
             {29, 7, 3, "35130368", "35130252", SquareMarker::neither},
             {5, 7, 19, "137200", "137180", SquareMarker::neither},
             {13, 19, 3, "3211", "3159", SquareMarker::neither},
             {73, 3, 7, "37303", "37011", SquareMarker::neither}},
            detail);
    });

    run("2q1-tables with the a-column", 1.0, [](std::string& detail) {
        struct T3Row {
            long p, q1, q2;
            const char* a;
            const char* plus;
            const char* minus;
            SquareMarker marker;
        };
        const std::vector<T3Row> t3 = {
            {5, 11, 3, "4", "165", "121", SquareMarker::square_minus},
            {13, 3, 7, "1574", "4368", "4356", SquareMarker::square_minus},
            {5, 19, 3, "4", "361", "285", SquareMarker::square_plus},
            {5, 11, 7, "6", "2108304", "2108260", SquareMarker::square_plus},
            {13, 3, 11, "12", "441", "429", SquareMarker::square_plus},
            {5, 31, 3, "4", "984064", "983940", SquareMarker::square_plus},
            {29, 7, 3, "28", "8479744", "8479716", SquareMarker::square_plus},
            {5, 19, 7, "6", "521360", "521284", SquareMarker::square_minus},
            {13, 3, 19, "85292", "741", "729", SquareMarker::square_minus},
            {37, 7, 3, "295", "3136", "3108", SquareMarker::square_plus},
            {5, 59, 3, "4", "14160", "13924", SquareMarker::square_minus},
            {13, 3, 23, "415", "3600", "3588", SquareMarker::square_plus},
            {5, 11, 19, "39", "1089", "1045", SquareMarker::square_plus}};
        std::vector<TableRow> rows = compute_table(TableId::T3);
        if (rows.size() != t3.size()) {
            detail = "T3 row count";
            return false;
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& e = t3[i];
            const auto& r = rows[i];
            if (r.triple.p != e.p || r.triple.q1 != e.q1 || r.triple.q2 != e.q2 ||
                r.a != Int(e.a) || r.val_plus != Int(e.plus) ||
                r.val_minus != Int(e.minus) || r.marker != e.marker) {
                detail = "T3 mismatch at d=" + r.triple.d.get_str();
                return false;
            }
        }

        struct T4Row {
            long p, q1, q2;
            const char* a_plus;
            const char* a_minus;
            const char* plus;
            const char* minus;
        };
        const std::vector<T4Row> t4 = {
            {5, 7, 3, "5", "3", "588", "560"},
            {5, 3, 11, "90", "88", "45", "33"},
            {13, 7, 3, "26", "24", "10192", "10164"},
            {5, 3, 19, "40", "38", "57", "45"},
            {5, 3, 23, "1127", "1125", "40572", "40560"},
            {5, 23, 3, "5", "3", "311052", "310960"},
            {5, 7, 11, "90", "88", "1341648", "1341620"},
            {13, 11, 3, "26", "24", "1617", "1573"},
            {5, 3, 31, "250", "248", "95232", "95220"}};
        std::vector<TableRow> rows4 = compute_table(TableId::T4);
        if (rows4.size() != t4.size()) {
            detail = "T4 row count";
            return false;
        }
        for (size_t i = 0; i < rows4.size(); ++i) {
            const auto& e = t4[i];
            const auto& r = rows4[i];
            if (r.triple.p != e.p || r.triple.q1 != e.q1 || r.triple.q2 != e.q2 ||
                r.a_plus_1 != Int(e.a_plus) || r.a_minus_1 != Int(e.a_minus) ||
                r.val_plus != Int(e.plus) || r.val_minus != Int(e.minus) ||
                r.marker != SquareMarker::neither) {
                detail = "T4 mismatch at d=" + r.triple.d.get_str();
                return false;
            }
        }
        return true;
    });

    run("unit oracle equivalence below 2000", 30.0, [](std::string& detail) {
        SweepResult r = sweep_unit_oracle(2000, 5000);
        detail = "checked=" + std::to_string(r.checked);
        return r.ok() && r.checked > 250;
    });

    run("multiplier trichotomy below 1e5", 60.0, [](std::string& detail) {
        SweepResult r = sweep_trichotomy(100000);
        detail = "checked=" + std::to_string(r.checked);
        return r.ok() && r.checked > 9000;
    });

    run("unit-side exclusion sweeps", 60.0, [](std::string& detail) {
        long total = 0;
        for (SweepResult r : {sweep_q3_units(5000), sweep_one_mod4_exclusions(10000),
                              sweep_side_square_p_mod8(100000),
                              sweep_b_type_exclusions(100000)}) {
            if (!r.ok()) {
                detail = r.name + ": " + r.violations.front();
                return false;
            }
            total += r.checked;
        }
        detail = "checked=" + std::to_string(total);
        return true;
    });

    run("kernel order dual route below 1e5", 60.0, [](std::string& detail) {
        SweepResult r = sweep_kernel_dual_route(100000);
        detail = "checked=" + std::to_string(r.checked);
        if (!r.ok()) detail += " " + r.violations.front();
        return r.ok();
    });

    run("kernel case placement of the example tables", 5.0, [](std::string& detail) {
        auto case_of = [](long p, long q1, long q2) {
            return kernel(PrimeTriple::create(p, q1, q2), Extension::K2).case_no;
        };
        if (case_of(17, 79, 3) != 1) {
            detail = "4029 not in case 1";
            return false;
        }
        for (auto [p, q1, q2] :
             {std::array<long, 3>{17, 19, 3}, {73, 3, 7}, {97, 3, 7}, {17, 43, 3}})
            if (case_of(p, q1, q2) != 2) {
                detail = "case-2 row misplaced";
                return false;
            }
        for (const auto& [p, q1, q2] : table_triples(TableId::T3))
            if (case_of(p, q1, q2) != 3) {
                detail = "type-3 row misplaced";
                return false;
            }
        for (const auto& [p, q1, q2] : table_triples(TableId::T4))
            if (case_of(p, q1, q2) != 4) {
                detail = "type-4 row misplaced";
                return false;
            }
        return true;
    });

    run("(2,2,2) kernels consistent, genus kernel full", 60.0, [](std::string& detail) {
        SweepResult r = sweep_222_consistency(100000);
        detail = "checked=" + std::to_string(r.checked);
        if (!r.ok()) detail += " " + r.violations.front();
        return r.ok() && r.checked > 700;
    });

    run("auxiliary primes", 10.0, [](std::string& detail) {
        PrimeTriple base = PrimeTriple::create(5, 3, 7);
        if (aux_prime(base, Extension::K2, 1000) != 41) {
            detail = "expected 41 for (5,3,7)/K2";
            return false;
        }
        std::vector<PrimeTriple> pool = enumerate_triples(100000);
        std::mt19937_64 rng(20250810);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < 100; ++i) {
            const PrimeTriple& t = pool[pick(rng)];
            Int l = aux_prime(t, Extension::K2, 100000);
            if (mpz_fdiv_ui(l.get_mpz_t(), 4) != 1 || !is_prime(l) ||
                jacobi(t.d, l) != 1 || jacobi(t.q1, l) != -1) {
                detail = "condition failure at d=" + t.d.get_str();
                return false;
            }
        }
        return true;
    });

    std::printf("RESULT: %d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
