// Command-line front end: instance evaluation, coefficient checks,
// series routes, batch Lemma verification and the FKG conjecture search.
//
// Exit codes: 0 = completed with no anomalies, 1 = counterexample
// certificate emitted (search-fkg only), 2 = invalid input,
// 3 = internal consistency failure (formula/oracle or route mismatch).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "corrineq/coefficients.hpp"
#include "corrineq/explorer.hpp"
#include "corrineq/functional.hpp"
#include "corrineq/json_io.hpp"
#include "corrineq/partitions.hpp"
#include "corrineq/series.hpp"

using namespace corrineq;
using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << text;
}

void emit_report(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::string lambda_str(const std::vector<int>& parts) {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

int run_eval(const std::string& in_path) {
    FunctionalInstance inst = instance_from_json(read_json_file(in_path));
    int n = inst.n();

    std::cout << "n = " << n << ", points = " << point_count(inst.space) << "\n\n";
    std::cout << "E_delta per nonempty subset of {1.." << n << "}:\n";
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<int> delta;
        for (int i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) delta.push_back(i + 1);
        std::cout << "  {";
        for (size_t i = 0; i < delta.size(); ++i) std::cout << (i ? "," : "") << delta[i];
        std::cout << "} -> " << e_delta(inst, delta).str() << "\n";
    }
    std::cout << "\nE_lambda per shape:\n";
    for (const auto& lambda : enumerate_integer_partitions(n))
        std::cout << "  " << lambda_str(lambda.parts) << " -> "
                  << e_lambda(inst, lambda).str() << "\n";
    Rational value = e_n(inst);
    std::cout << "\nE_" << n << " = " << value.str() << "\n";
    return 0;
}

int run_partitions(int n, const std::string& csv_path) {
    std::string csv = "lambda,count,c_lambda\n";
    for (const auto& lambda : enumerate_integer_partitions(n))
        csv += "\"" + lambda_str(lambda.parts) + "\"," + count_shapes(lambda).get_str() +
               "," + c_lambda(lambda).str() + "\n";
    csv += "\"total (Bell)\"," + bell_number(n).get_str() + ",\n";
    if (csv_path.empty())
        std::cout << csv;
    else
        write_text_file(csv_path, csv);
    return 0;
}

void for_each_composition(int N, int total_max, const std::function<void(std::vector<int>&)>& f) {
    std::vector<int> m((size_t)N, 0);
    std::function<void(int, int)> rec = [&](int j, int budget) {
        if (j == N) {
            f(m);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            m[(size_t)j] = v;
            rec(j + 1, budget - v);
        }
    };
    rec(0, total_max);
}

int run_coeffs(int N, int n, std::vector<std::string> mu_str, const std::string& mode,
               const std::string& out_path, const std::string& csv_path) {
    std::vector<Rational> mu;
    for (const auto& s : mu_str) mu.push_back(Rational::from_string(s));
    if ((int)mu.size() != N) throw std::invalid_argument("--mu must have N entries");

    json report;
    report["mode"] = mode;
    report["N"] = N;
    report["n"] = n;
    std::string csv;
    bool mismatch = false;

    if (mode == "F-check") {
        csv = "composition,formula,oracle,match,nonnegative\n";
        report["results"] = json::object();
        for_each_composition(N, n, [&](std::vector<int>& m) {
            Composition comp{m};
            Rational formula = f_closed_form(comp, mu);
            Rational oracle = f_partition_sum(comp, mu);
            bool match = formula == oracle;
            if (!match) mismatch = true;
            json entry = {{"formula", formula.str()},
                          {"oracle", oracle.str()},
                          {"match", match},
                          {"nonnegative", formula.sign() >= 0}};
            std::string key = lambda_str(m);
            report["results"][key] = entry;
            csv += "\"" + key + "\"," + formula.str() + "," + oracle.str() + "," +
                   (match ? "yes" : "no") + "," + (formula.sign() >= 0 ? "yes" : "no") + "\n";
        });
    } else if (mode == "B-check") {
        csv = "m_prefix,formula,oracle,match,nonnegative\n";
        report["results"] = json::object();
        for_each_composition(N - 1, n, [&](std::vector<int>& m_prefix) {
            Rational formula = b_formula(m_prefix, n, mu);
            Rational oracle = b_oracle(m_prefix, n, mu);
            bool match = formula == oracle;
            if (!match) mismatch = true;
            std::string key = lambda_str(m_prefix);
            report["results"][key] = {{"formula", formula.str()},
                                      {"oracle", oracle.str()},
                                      {"match", match},
                                      {"nonnegative", formula.sign() >= 0}};
            csv += "\"" + key + "\"," + formula.str() + "," + oracle.str() + "," +
                   (match ? "yes" : "no") + "," + (formula.sign() >= 0 ? "yes" : "no") + "\n";
        });
    } else if (mode == "e200") {
        ChainSpace space(N, mu);
        E200Report r = verify_e200(space, n);
        if (!r.all_match) mismatch = true;
        report["monomials_checked"] = r.monomials_checked;
        report["all_match"] = r.all_match;
        report["all_nonnegative"] = r.all_nonnegative;
        csv = "monomials_checked,all_match,all_nonnegative\n" +
              std::to_string(r.monomials_checked) + "," + (r.all_match ? "yes" : "no") + "," +
              (r.all_nonnegative ? "yes" : "no") + "\n";
    } else {
        throw std::invalid_argument("unknown --mode '" + mode + "'");
    }

    emit_report(report, out_path);
    if (!csv_path.empty()) write_text_file(csv_path, csv);
    return mismatch ? 3 : 0;
}

int run_series(const std::string& in_path, int T_override, const std::string& route,
               const std::string& out_path) {
    json j = read_json_file(in_path);
    Space space = space_from_json(j.at("space"));
    FunctionSeries p = function_series_from_json(space, j);
    if (T_override > 0 && T_override < p.T) {
        p.coeffs.resize((size_t)T_override);
        p.T = T_override;
    }

    json report;
    report["T"] = p.T;
    bool mismatch = false;
    std::optional<ScalarSeries> direct, via_en;
    if (route == "direct" || route == "both") {
        direct = corollary_direct(space, p);
        report["direct"] = rationals_to_json(direct->coeffs);
    }
    if (route == "en" || route == "both") {
        via_en = corollary_via_en(space, p);
        report["en"] = rationals_to_json(via_en->coeffs);
    }
    if (direct && via_en) {
        report["routes_match"] = (*direct == *via_en);
        if (!(*direct == *via_en)) mismatch = true;
    }
    const ScalarSeries& primary = direct ? *direct : *via_en;
    auto nn = check_nonnegativity(primary);
    report["nonnegative"] = nn.ok;
    if (!nn.ok) {
        report["first_negative_index"] = *nn.first_negative_index;
        report["first_negative_value"] = nn.first_negative_value.str();
    }
    emit_report(report, out_path);
    return mismatch ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation of partition-indexed correlation functionals"};
    app.require_subcommand(1);

    std::string in_path, out_path, csv_path, mode = "F-check", route = "both";
    uint64_t seed = 1;
    int count = 100, n = 3, N = 2, T = 0;
    SearchConfig cfg;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate E_delta/E_lambda/E_n on an instance");
    eval_cmd->add_option("--in", in_path, "instance JSON file")->required();

    auto* part_cmd = app.add_subcommand("partitions", "Shape/count/c_lambda diagnostic table");
    part_cmd->add_option("--n", n, "partition size")->required();
    part_cmd->add_option("--csv", csv_path, "CSV output path (default stdout)");

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficient formula checks");
    coeffs_cmd->add_option("--N", N, "chain length")->required();
    std::vector<std::string> mu_str;
    coeffs_cmd->add_option("--n", n, "number of functions")->required();
    coeffs_cmd->add_option("--mu", mu_str, "measure entries as p/q strings")->required();
    coeffs_cmd->add_option("--mode", mode, "F-check | B-check | e200");
    coeffs_cmd->add_option("--out", out_path, "JSON report path");
    coeffs_cmd->add_option("--csv", csv_path, "CSV summary path");

    auto* series_cmd = app.add_subcommand("series", "Corollary series, both routes");
    series_cmd->add_option("--in", in_path, "instance JSON with a 'series' field")->required();
    series_cmd->add_option("--T", T, "truncation override");
    series_cmd->add_option("--route", route, "direct | en | both");
    series_cmd->add_option("--out", out_path, "JSON report path");

    auto add_batch_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--count", count, "instance count");
        cmd->add_option("--max-den", cfg.max_denominator, "generator denominator cap");
        cmd->add_option("--out", out_path, "JSON report path");
    };

    auto* lemma_cmd = app.add_subcommand("verify-lemma", "Randomized Lemma verification on chains");
    add_batch_flags(lemma_cmd);
    lemma_cmd->add_option("--n-min", cfg.n_min);
    lemma_cmd->add_option("--n-max", cfg.n_max);
    lemma_cmd->add_option("--N-min", cfg.N_min);
    lemma_cmd->add_option("--N-max", cfg.N_max);

    auto* fkg_cmd = app.add_subcommand("search-fkg", "Counterexample search on 2^X");
    add_batch_flags(fkg_cmd);
    fkg_cmd->add_option("--n-min", cfg.n_min);
    fkg_cmd->add_option("--n-max", cfg.n_max);
    fkg_cmd->add_option("--ground-min", cfg.ground_min);
    fkg_cmd->add_option("--ground-max", cfg.ground_max);

    auto* cor_cmd = app.add_subcommand("corollary", "Batch corollary route comparison");
    add_batch_flags(cor_cmd);
    cor_cmd->add_option("--T", cfg.series_T, "series truncation");
    cor_cmd->add_option("--N-min", cfg.N_min);
    cor_cmd->add_option("--N-max", cfg.N_max);
    cor_cmd->add_option("--ground-min", cfg.ground_min);
    cor_cmd->add_option("--ground-max", cfg.ground_max);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return run_eval(in_path);
        if (part_cmd->parsed()) return run_partitions(n, csv_path);
        if (coeffs_cmd->parsed()) return run_coeffs(N, n, mu_str, mode, out_path, csv_path);
        if (series_cmd->parsed()) return run_series(in_path, T, route, out_path);

        cfg.master_seed = seed;
        cfg.instance_count = count;
        if (lemma_cmd->parsed()) {
            cfg.n_min = std::max(cfg.n_min, 2);
            LemmaBatchReport r = verify_lemma_batch(cfg);
            emit_report(r.to_json(), out_path);
            return r.violations > 0 ? 3 : 0;
        }
        if (fkg_cmd->parsed()) {
            cfg.n_min = std::max(cfg.n_min, 2);
            FkgSearchReport r = search_fkg(cfg);
            emit_report(r.to_json(), out_path);
            return r.violation_found ? 1 : 0;
        }
        if (cor_cmd->parsed()) {
            CorollaryBatchReport r = corollary_batch(cfg);
            emit_report(r.to_json(), out_path);
            return (r.route_mismatches > 0 || r.chain_negatives > 0) ? 3 : 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
