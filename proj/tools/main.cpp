#include "capkit/report.hpp"
#include "capkit/sweeps.hpp"
#include "capkit/tables.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

using namespace capkit;

int run_analyze(long p, long q1, long q2, bool as_json) {
    AnalysisReport report = analyze(PrimeTriple::create(p, q1, q2));
    if (as_json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return 0;
}

int run_table(const std::string& id_name, const std::string& format) {
    TableId id = table_id_from_string(id_name);
    std::cout << (format == "csv" ? render_table_csv(id) : render_table_text(id));
    return 0;
}

TypeLabel parse_type_label(const std::string& name) {
    for (TypeLabel l : {TypeLabel::Not222, TypeLabel::BI1, TypeLabel::BI2, TypeLabel::BII1,
                        TypeLabel::BII2, TypeLabel::BIII1, TypeLabel::BIII2})
        if (name == to_string(l)) return l;
    throw std::invalid_argument("unknown type label: " + name);
}

int run_search(long max_d, const std::string& type_name, const std::string& format) {
    std::optional<TypeLabel> filter;
    if (!type_name.empty()) filter = parse_type_label(type_name);
    for (const SearchRecord& rec : search_triples(max_d, filter)) {
        if (format == "csv") {
            std::cout << rec.triple.d << "," << rec.triple.factor_str() << ","
                      << to_string(rec.square_case) << "," << to_string(rec.type) << "\n";
        } else if (format == "json") {
            nlohmann::ordered_json j;
            j["d"] = rec.triple.d.get_str();
            j["p"] = rec.triple.p.get_str();
            j["q1"] = rec.triple.q1.get_str();
            j["q2"] = rec.triple.q2.get_str();
            j["square_case"] = to_string(rec.square_case);
            j["type_label"] = to_string(rec.type);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "d=" << rec.triple.d << "  " << rec.triple.factor_str()
                      << "  case=" << to_string(rec.square_case)
                      << "  type=" << to_string(rec.type) << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& suite, long bound) {
    bool all_ok = true;
    for (const SweepResult& r : verify_suite(suite, bound)) {
        std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << r.name
                  << "  checked=" << r.checked << " violations=" << r.failed << "\n";
        for (const auto& v : r.violations) std::cout << "      " << v << "\n";
        all_ok = all_ok && r.ok();
    }
    return all_ok ? 0 : 1;
}

int run_aux_prime(long p, long q1, long q2, const std::string& ext_name, long limit) {
    PrimeTriple t = PrimeTriple::create(p, q1, q2);
    Extension ext = ext_name == "K2" ? Extension::K2 : Extension::K3;
    std::cout << aux_prime(t, ext, limit) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capitulation kernels of Q(sqrt(p*q1*q2), i) and its genus field"};
    app.require_subcommand(1);

    long p = 0, q1 = 0, q2 = 0, max_d = 0, bound = 0, limit = 100000;
    bool as_json = false;
    std::string table_id, format = "text", type_name, suite, ext_name;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one triple");
    analyze_cmd->add_option("p", p, "prime = 1 (mod 4)")->required();
    analyze_cmd->add_option("q1", q1, "prime = 3 (mod 4)")->required();
    analyze_cmd->add_option("q2", q2, "prime = 3 (mod 4)")->required();
    analyze_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    auto* table_cmd = app.add_subcommand("table", "render a built-in example table");
    table_cmd->add_option("id", table_id, "T1..T6")->required();
    table_cmd->add_option("--format", format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    auto* search_cmd = app.add_subcommand("search", "classify all triples with d <= MAXD");
    search_cmd->add_option("max_d", max_d, "upper bound on d (>= 105)")->required();
    search_cmd->add_option("--type", type_name, "keep only this type label");
    search_cmd->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run an invariant sweep suite");
    verify_cmd->add_option("suite", suite, "units, squares, lemmas, kernels or all")
        ->required()
        ->check(CLI::IsMember({"units", "squares", "lemmas", "kernels", "all"}));
    verify_cmd->add_option("bound", bound, "sweep bound")->required();

    auto* aux_cmd = app.add_subcommand("aux-prime", "smallest admissible auxiliary prime");
    aux_cmd->add_option("p", p, "prime = 1 (mod 4)")->required();
    aux_cmd->add_option("q1", q1, "prime = 3 (mod 4)")->required();
    aux_cmd->add_option("q2", q2, "prime = 3 (mod 4)")->required();
    aux_cmd->add_option("--ext", ext_name, "K2 or K3")
        ->required()
        ->check(CLI::IsMember({"K2", "K3"}));
    aux_cmd->add_option("--limit", limit, "sieve limit (default 100000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*analyze_cmd) return run_analyze(p, q1, q2, as_json);
        if (*table_cmd) return run_table(table_id, format);
        if (*search_cmd) return run_search(max_d, type_name, format);
        if (*verify_cmd) return run_verify(suite, bound);
        if (*aux_cmd) return run_aux_prime(p, q1, q2, ext_name, limit);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const capkit::bound_exhausted& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
