#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "tricode/search.hpp"
#include "tricode/tables.hpp"

using namespace tricode;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitTableFail = 3;

std::string join_args(const std::vector<std::string>& parts) {
    std::string s;
    for (auto& p : parts) {
        if (!s.empty()) s += " ";
        s += p;
    }
    return s;
}

void print_matrix(const Matrix& m) {
    for (uint32_t i = 0; i < m.rows(); ++i) {
        for (uint32_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << " ";
            std::cout << format_element(m.at(i, j));
        }
        std::cout << "\n";
    }
}

const char* decision_name(HullDecision d) {
    switch (d) {
        case HullDecision::Lcd: return "lcd";
        case HullDecision::NotLcd: return "not-lcd";
        case HullDecision::OneDimHull: return "one-dim-hull";
        default: return "inconclusive";
    }
}

void print_verdict(const PredicateVerdict& v) {
    std::cout << "spectral verdict: " << decision_name(v.decision)
              << " (hits=" << v.hit_multiplicity << ", path=" << (v.spectral ? "spectrum" : "gram")
              << ")\n";
    if (v.ctx) {
        const UnityContext& ctx = *v.ctx;
        std::cout << "witness set over GF(" << ctx.base->size() << "^" << ctx.ext_power
                  << "), size " << v.witness_set.size() << ": {";
        for (size_t i = 0; i < v.witness_set.size(); ++i)
            std::cout << (i ? ", " : "") << format_element(v.witness_set[i]);
        std::cout << "}\n";
    }
    if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
}

json report_json(const CodeReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["q"] = r.q;
    j["inner"] = r.inner == Inner::Euclidean ? "E" : "H";
    j["hull_dim"] = r.hull_dim;
    j["lcd"] = r.lcd;
    j["fsd"] = r.fsd;
    j["griesmer_defect"] = r.griesmer;
    j["weight_distribution"] = r.weights;
    j["construction"] = r.construction;
    return j;
}

int cmd_build(const std::string& text, uint64_t budget, uint32_t workers, bool show_matrix,
              bool csv, bool as_json) {
    ConstructionSpec spec = parse_construction(text);
    Matrix gen = build_generator(spec);
    LinearCode code = LinearCode::from_generator(gen, spec.inner);
    if (show_matrix) print_matrix(gen);
    PredicateVerdict verdict = spectral_verdict(spec);
    try {
        CodeReport report = analyze(code, format_construction(spec), budget, workers);
        if (as_json) {
            json j = report_json(report);
            j["spectral"] = {{"decision", decision_name(verdict.decision)},
                             {"hits", verdict.hit_multiplicity},
                             {"path", verdict.spectral ? "spectrum" : "gram"},
                             {"note", verdict.note}};
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
        std::cout << format_report_line(report) << "\n";
        if (csv) {
            std::cout << "i,A_i\n";
            for (size_t i = 0; i < report.weights.size(); ++i)
                if (report.weights[i]) std::cout << i << "," << report.weights[i] << "\n";
        }
        print_verdict(verdict);
    } catch (const BudgetError& e) {
        std::cout << "budget exceeded: " << e.what() << "\n";
        std::cout << "partial report: [" << code.length() << "," << code.dimension() << ",?]_"
                  << code.field().size() << " hull=" << hull_dimension(code)
                  << " lcd=" << (is_lcd(code) ? "y" : "n") << "\n";
        print_verdict(verdict);
    }
    return kExitOk;
}

int cmd_eig(const std::string& text) {
    ConstructionSpec spec = parse_construction(text);
    SpectrumMultiset s = eigen_spectrum(spec.tridiag);
    for (auto& piece : s.pieces)
        std::cout << "block n=" << piece.n << ": r=" << piece.r << " m=" << piece.m << "\n";
    std::cout << "extension: GF(" << s.ctx.base->size() << "^" << s.ctx.ext_power << ") = GF("
              << s.ctx.ext->size() << ")\n";
    uint32_t total = 0;
    for (auto& [lam, mult] : s.pairs) {
        std::cout << format_element(lam) << " x" << mult << "\n";
        total += mult;
    }
    std::cout << "total multiplicity " << total << "\n";
    return kExitOk;
}

int cmd_tables(int id, uint64_t budget, uint32_t workers, bool csv, bool as_json) {
    TableRunResult t = run_table(id, budget, workers);
    if (as_json) {
        json rows = json::array();
        for (auto& r : t.rows) {
            json row;
            row["spec"] = r.spec_text;
            row["expected"] = {r.expect_n, r.expect_k, r.expect_d};
            row["status"] = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
            if (!r.skipped) {
                row["got"] = {r.report.n, r.report.k, r.report.d};
                row["lcd"] = r.report.lcd;
                row["fsd"] = r.report.fsd;
            }
            row["annotation"] = r.annotation;
            rows.push_back(row);
        }
        std::cout << json{{"table", t.table_id}, {"all_pass", t.all_pass}, {"rows", rows}}.dump(2)
                  << "\n";
    } else if (csv) {
        std::cout << format_table_csv(t);
    } else {
        std::cout << format_table_markdown(t);
    }
    return t.all_pass ? kExitOk : kExitTableFail;
}

int cmd_check(const std::string& text) {
    ConstructionSpec spec = parse_construction(text);
    PredicateVerdict verdict = spectral_verdict(spec);
    LinearCode code = build_code(spec);
    uint32_t hull = hull_dimension(code);
    print_verdict(verdict);
    std::cout << "gram oracle: hull=" << hull << " lcd=" << (hull == 0 ? "y" : "n") << "\n";
    bool agree = (verdict.decision == HullDecision::Lcd) == (hull == 0) &&
                 (verdict.decision != HullDecision::OneDimHull || hull == 1);
    if (agree) {
        std::cout << "AGREE\n";
        return kExitOk;
    }
    std::cout << "DISAGREE\n";
    std::cout << "spectrum:\n";
    try {
        SpectrumMultiset s = eigen_spectrum(spec.tridiag);
        for (auto& [lam, mult] : s.pairs)
            std::cout << "  " << format_element(lam) << " x" << mult << "\n";
    } catch (const SpectralUnavailableError& e) {
        std::cout << "  unavailable: " << e.what() << "\n";
    }
    std::cout << "gram matrix:\n";
    print_matrix(gram_matrix(code));
    return kExitDisagreement;
}

int cmd_search(const SearchConfig& cfg, bool csv) {
    std::cout << "search space: " << search_space_size(cfg) << " candidates\n";
    SearchResult res = run_search(cfg);
    if (csv) std::cout << "rank,spec,n,k,d,fsd\n";
    for (size_t i = 0; i < res.rows.size(); ++i) {
        const SearchRow& row = res.rows[i];
        if (csv)
            std::cout << i << ",\"" << row.report.construction << "\"," << row.report.n << ","
                      << row.report.k << "," << row.report.d << "," << (row.report.fsd ? "y" : "n")
                      << "\n";
        else
            std::cout << format_report_line(row.report) << "  <- " << row.report.construction
                      << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-field toolkit for double Toeplitz codes: build and analyze codes, "
                 "print closed-form spectra, reproduce the bundled reference tables, and search "
                 "polynomial spaces for high-distance LCD codes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    uint64_t budget = kDefaultBudget;
    uint32_t workers = 1;
    bool csv = false, as_json = false, show_matrix = false;
    app.add_option("--budget", budget, "enumeration budget (messages)");
    app.add_option("--workers", workers, "worker thread count");
    app.add_flag("--csv", csv, "machine-readable CSV output");
    app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--show-matrix", show_matrix, "print the generator matrix");

    std::vector<std::string> spec_parts;
    auto* build = app.add_subcommand("build", "build a code from a construction spec and report");
    build->add_option("spec", spec_parts, "construction spec")->required();

    std::vector<std::string> eig_parts;
    auto* eig = app.add_subcommand("eig", "print the closed-form eigenvalue multiset");
    eig->add_option("spec", eig_parts, "construction spec")->required();

    int table_id = 0;
    auto* tables = app.add_subcommand("tables", "re-derive a bundled reference table (1-6)");
    tables->add_option("id", table_id, "table id")->required();

    std::vector<std::string> check_parts;
    auto* check = app.add_subcommand("check", "compare the spectral predicate with the Gram oracle");
    check->add_option("spec", check_parts, "construction spec")->required();

    std::string s_q, s_kind = "T", s_a, s_b, s_c, s_inner = "E", s_coeffs;
    uint32_t s_n = 0, s_t = 2, s_deg = 3;
    uint64_t s_max_candidates = uint64_t(1) << 20;
    bool s_no_filter = false;
    auto* search = app.add_subcommand("search", "search polynomial tuples for LCD codes");
    search->add_option("--q", s_q, "field size")->required();
    search->add_option("--kind", s_kind, "T or T'");
    search->add_option("--n", s_n, "matrix order")->required();
    search->add_option("--a", s_a, "diagonal entry")->required();
    search->add_option("--b", s_b, "off-diagonal entry")->required();
    search->add_option("--c", s_c, "other off-diagonal entry (defaults by inner product)");
    search->add_option("--inner", s_inner, "E or H");
    search->add_option("--t", s_t, "construction index (t-1 polynomials)");
    search->add_option("--max-degree", s_deg, "polynomial degree bound");
    search->add_option("--coeffs", s_coeffs, "comma-separated coefficient subset")->required();
    search->add_option("--max-candidates", s_max_candidates, "search space cap");
    search->add_flag("--no-filter", s_no_filter, "filter with the Gram oracle instead of spectra");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return cmd_build(join_args(spec_parts), budget, workers, show_matrix, csv, as_json);
        if (*eig) return cmd_eig(join_args(eig_parts));
        if (*tables) return cmd_tables(table_id, budget, workers, csv, as_json);
        if (*check) return cmd_check(join_args(check_parts));
        if (*search) {
            std::string spec_text = "q=" + s_q + " kind=" + s_kind + " n=" + std::to_string(s_n) +
                                    " a=" + s_a + " b=" + s_b + (s_c.empty() ? "" : " c=" + s_c) +
                                    " inner=" + s_inner + " f=0";
            ConstructionSpec shape = parse_construction(spec_text);
            SearchConfig cfg;
            cfg.tridiag = shape.tridiag;
            cfg.inner = shape.inner;
            cfg.t = s_t;
            cfg.max_degree = s_deg;
            cfg.budget = budget;
            cfg.workers = workers;
            cfg.spectral_filter = !s_no_filter;
            cfg.max_candidates = s_max_candidates;
            const Field& F = shape.field();
            size_t i = 0;
            while (i <= s_coeffs.size() && !s_coeffs.empty()) {
                size_t j = s_coeffs.find(',', i);
                if (j == std::string::npos) j = s_coeffs.size();
                cfg.coeff_set.push_back(parse_element(F, s_coeffs.substr(i, j - i)).enc);
                i = j + 1;
            }
            return cmd_search(cfg, csv);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
