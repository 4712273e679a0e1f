#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwscp/core.hpp"
#include "mwscp/dp.hpp"
#include "mwscp/instances.hpp"
#include "mwscp/lp.hpp"
#include "mwscp/oracle.hpp"
#include "mwscp/report.hpp"
#include "mwscp/rng.hpp"
#include "mwscp/rounding.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace mwscp;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Shortest round-trip decimal form, e.g. "7.0" not "7.000000".
std::string num_str(double x) { return nlohmann::json(x).dump(); }

// Empty path means stdout.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot write file: " + out_path);
    f << text;
}

int count_velocity_classes(const ProblemInstance& inst) {
    std::vector<double> v(inst.velocities);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return static_cast<int>(v.size());
}

struct SolveOptions {
    std::string algorithm;
    int alpha = 2;
    std::uint64_t seed = 0;
    int trials = 0;
    std::uint64_t budget = kDefaultOracleBudget;
};

SolveReport run_algorithm(const ProblemInstance& inst, const SolveOptions& opt) {
    SolveReport rep;
    rep.algorithm = opt.algorithm;
    rep.instance_digest = instance_digest(inst);
    Timer timer;

    if (opt.algorithm == "uniform-dp") {
        const DpSolution s = solve_uniform(inst);
        rep.covered_weight = s.weight;
        rep.deployment = s.deployment;
    } else if (opt.algorithm == "kvel-dp") {
        const DpSolution s = solve_k_velocities(inst, opt.budget);
        rep.covered_weight = s.weight;
        rep.deployment = s.deployment;
    } else if (opt.algorithm == "rounding") {
        const DpSolution s = solve_rounded(inst, opt.alpha, opt.budget);
        rep.covered_weight = s.weight;
        rep.deployment = s.deployment;
        rep.alpha = opt.alpha;
    } else if (opt.algorithm == "lp-rand") {
        const LpSolution lp = solve_lp(build_lp(inst));
        const RandomChoiceTrace trace = randomized_round(inst, lp, opt.seed);
        rep.covered_weight = trace.weight;
        rep.deployment = trace.deployment();
        rep.seed = opt.seed;
        rep.rng = kRngId;
        rep.lp_objective = lp.objective;
        if (opt.trials > 0) {
            double sd = 0.0;
            rep.mean_weight = mean_randomized_weight(inst, lp, opt.seed, opt.trials, &sd);
            rep.stddev_weight = sd;
            rep.trials = opt.trials;
        }
    } else if (opt.algorithm == "lp-derand") {
        const LpSolution lp = solve_lp(build_lp(inst));
        const DerandomizedSolution s = derandomize(inst, lp);
        rep.covered_weight = s.weight;
        rep.deployment = s.deployment;
        rep.lp_objective = lp.objective;
    } else if (opt.algorithm == "oracle") {
        const OracleResult s = brute_force_separated(inst, opt.budget);
        rep.covered_weight = s.weight;
        rep.deployment = s.deployment;
        rep.oracle_weight = s.weight;
    } else {
        throw ValidationError("unknown algorithm \"" + opt.algorithm +
                              "\"; expected uniform-dp, kvel-dp, rounding, "
                              "lp-rand, lp-derand or oracle");
    }

    rep.full_cover = covered_weight(inst, rep.deployment).full_cover;
    rep.duration_ms = timer.ms();
    return rep;
}

int cmd_solve(const std::string& instance_path, const SolveOptions& opt,
              const std::string& out_path) {
    const ProblemInstance inst = load_instance_file(instance_path);
    const SolveReport rep = run_algorithm(inst, opt);
    const std::string text = report_to_json(rep);
    std::cout << text;
    if (!out_path.empty()) emit(text, out_path);
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& deployment_path,
               bool require_full) {
    const ProblemInstance inst = load_instance_file(instance_path);

    std::ifstream in(deployment_path, std::ios::binary);
    if (!in) throw ValidationError("cannot open deployment file: " + deployment_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("deployment: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("deployment") ||
        !doc["deployment"].is_array())
        throw ValidationError("deployment file needs a \"deployment\" array");
    std::vector<int> entries;
    for (const auto& e : doc["deployment"]) {
        if (!e.is_number_integer())
            throw ValidationError("deployment entries must be integers");
        entries.push_back(e.get<int>());
    }
    const Deployment d = deployment_from_external(entries, inst.num_pois());
    if (static_cast<int>(d.start.size()) != inst.num_sensors())
        throw ValidationError("deployment length " + std::to_string(d.start.size()) +
                              " does not match sensor count " +
                              std::to_string(inst.num_sensors()));

    const CoverageResult res = covered_weight(inst, d);
    nlohmann::ordered_json out;
    out["instance_digest"] = instance_digest(inst);
    out["covered_weight"] = res.covered_weight;
    out["full_cover"] = res.full_cover;
    out["deployment"] = deployment_to_external(d);
    std::cout << out.dump(2) << "\n";
    if (require_full && !res.full_cover) {
        std::cerr << "verify: deployment does not cover every PoI\n";
        return 4;
    }
    return 0;
}

struct CompareRow {
    std::string algorithm;
    bool ran = false;
    std::string skip_reason;
    double weight = 0.0;
    double millis = 0.0;
};

int cmd_compare(const std::string& instance_path, std::vector<std::string> algs,
                const SolveOptions& base_opt, bool as_json) {
    const ProblemInstance inst = load_instance_file(instance_path);
    if (algs.empty()) {
        algs = {"oracle", "uniform-dp", "kvel-dp", "rounding", "lp-derand", "lp-rand"};
    }

    std::optional<double> lp_bound;
    {
        Timer t;
        lp_bound = solve_lp(build_lp(inst)).objective;
        std::cerr << "compare: lp bound " << num_str(*lp_bound) << " ("
                  << t.ms() << " ms)\n";
    }

    std::optional<double> oracle;
    std::vector<CompareRow> rows;
    for (const std::string& alg : algs) {
        CompareRow row;
        row.algorithm = alg;
        SolveOptions opt = base_opt;
        opt.algorithm = alg;
        try {
            const SolveReport rep = run_algorithm(inst, opt);
            row.ran = true;
            row.weight = rep.covered_weight;
            row.millis = rep.duration_ms;
            if (alg == "oracle") oracle = rep.covered_weight;
        } catch (const ValidationError& e) {
            row.skip_reason = e.what();
        } catch (const ResourceLimitError& e) {
            row.skip_reason = e.what();
        }
        rows.push_back(row);
    }

    if (as_json) {
        nlohmann::ordered_json out;
        out["instance_digest"] = instance_digest(inst);
        out["lp_objective"] = *lp_bound;
        if (oracle) out["oracle_weight"] = *oracle;
        out["rows"] = nlohmann::ordered_json::array();
        for (const CompareRow& row : rows) {
            nlohmann::ordered_json r;
            r["algorithm"] = row.algorithm;
            if (row.ran) {
                r["weight"] = row.weight;
                if (oracle && *oracle > 0.0) r["ratio_vs_oracle"] = row.weight / *oracle;
                if (*lp_bound > 0.0) r["ratio_vs_lp"] = row.weight / *lp_bound;
                r["millis"] = row.millis;
            } else {
                r["skipped"] = row.skip_reason;
            }
            out["rows"].push_back(r);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::printf("%-12s %14s %14s %14s %10s\n", "algorithm", "weight", "vs_oracle",
                "vs_lp", "millis");
    for (const CompareRow& row : rows) {
        if (!row.ran) {
            std::printf("%-12s skipped: %s\n", row.algorithm.c_str(),
                        row.skip_reason.c_str());
            continue;
        }
        const std::string vs_oracle =
            oracle && *oracle > 0.0 ? num_str(row.weight / *oracle) : "-";
        const std::string vs_lp =
            *lp_bound > 0.0 ? num_str(row.weight / *lp_bound) : "-";
        std::printf("%-12s %14s %14s %14s %10.3f\n", row.algorithm.c_str(),
                    num_str(row.weight).c_str(), vs_oracle.c_str(), vs_lp.c_str(),
                    row.millis);
    }
    std::printf("lp_bound     %14s\n", num_str(*lp_bound).c_str());
    return 0;
}

struct BenchCell {
    int n = 0, m = 0;
    std::uint64_t seed = 0;
};

int cmd_bench(std::vector<int> n_list, std::vector<int> m_list, int seeds,
              std::uint64_t seed0, int alpha, std::uint64_t budget,
              const std::string& out_path) {
    if (n_list.empty()) n_list = {6, 8};
    if (m_list.empty()) m_list = {2, 3};
    if (seeds < 1) throw ValidationError("bench: --seeds must be >= 1");

    std::vector<BenchCell> cells;
    for (int n : n_list)
        for (int m : m_list)
            for (int s = 0; s < seeds; ++s)
                cells.push_back({n, m, seed0 + static_cast<std::uint64_t>(s)});

    const std::vector<std::string> algs = {"oracle", "kvel-dp", "rounding",
                                           "lp-derand", "lp-rand"};
    std::vector<std::string> blocks(cells.size());

    // Cells are independent; rows are assembled per cell and concatenated in
    // cell order, so the CSV is identical no matter how the loop is scheduled.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const BenchCell& cell = cells[c];
        const ProblemInstance inst = gen_random(cell.n, cell.m, cell.seed);
        const int k = count_velocity_classes(inst);
        const double lp_bound = solve_lp(build_lp(inst)).objective;
        std::optional<double> oracle;
        try {
            oracle = brute_force_separated(inst, budget).weight;
        } catch (const ResourceLimitError&) {
        }

        std::ostringstream rows;
        for (const std::string& alg : algs) {
            SolveOptions opt;
            opt.algorithm = alg;
            opt.alpha = alpha;
            opt.seed = cell.seed;
            opt.budget = budget;
            try {
                const SolveReport rep = run_algorithm(inst, opt);
                const double ref = oracle ? *oracle : lp_bound;
                rows << alg << ',' << cell.n << ',' << cell.m << ',' << k << ','
                     << num_str(rep.covered_weight) << ',' << num_str(lp_bound) << ','
                     << (oracle ? num_str(*oracle) : std::string()) << ','
                     << (ref > 0.0 ? num_str(rep.covered_weight / ref)
                                   : std::string("1.0"))
                     << ',';
                char ms[32];
                std::snprintf(ms, sizeof ms, "%.3f", rep.duration_ms);
                rows << ms << '\n';
            } catch (const ResourceLimitError&) {
                // row omitted: the method does not fit the budget
            }
        }
        blocks[c] = rows.str();
    }

    std::ostringstream csv;
    csv << "algorithm,N,M,K,weight,lp_bound,oracle,ratio,millis\n";
    for (const std::string& b : blocks) csv << b;
    emit(csv.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solvers for maximum-weight periodic sweep coverage on a line"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);

    auto* gen_rand = gen->add_subcommand("random", "seeded random instance");
    int gr_n = 8, gr_m = 3;
    std::uint64_t gr_seed = 1;
    RandomInstanceParams gr_params;
    std::string gr_out;
    gen_rand->add_option("--n", gr_n, "number of PoIs")->required();
    gen_rand->add_option("--m", gr_m, "number of sensors")->required();
    gen_rand->add_option("--seed", gr_seed, "generator seed");
    gen_rand->add_option("--x-span", gr_params.x_span, "coordinate span");
    gen_rand->add_option("--w-min", gr_params.w_min, "minimum integer weight");
    gen_rand->add_option("--w-max", gr_params.w_max, "maximum integer weight");
    gen_rand->add_option("--v-max", gr_params.v_max, "maximum velocity");
    gen_rand->add_option("--p-zero", gr_params.p_zero_velocity,
                         "probability of a static sensor");
    gen_rand->add_option("--p-dup", gr_params.p_duplicate,
                         "probability of a duplicate coordinate");
    gen_rand->add_option("--period", gr_params.period, "sweep period");
    gen_rand->add_option("--out", gr_out, "output file (default stdout)");

    auto* gen_tp = gen->add_subcommand("three-partition",
                                       "hard unit-weight reduction family");
    int tp_m = 1;
    long long tp_b = 7;
    std::vector<long long> tp_sizes;
    double tp_period = 1.0;
    std::string tp_out;
    gen_tp->add_option("--m", tp_m, "number of blocks/triples")->required();
    gen_tp->add_option("--B", tp_b, "target triple sum B")->required();
    gen_tp->add_option("--sizes", tp_sizes, "3*m sizes, comma separated")
        ->required()
        ->delimiter(',');
    gen_tp->add_option("--period", tp_period, "sweep period");
    gen_tp->add_option("--out", tp_out, "output file (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "run one algorithm, print a report");
    std::string sv_instance, sv_out;
    SolveOptions sv_opt;
    solve->add_option("--alg", sv_opt.algorithm,
                      "uniform-dp | kvel-dp | rounding | lp-rand | lp-derand | oracle")
        ->required();
    solve->add_option("-i,--instance", sv_instance, "instance file")->required();
    solve->add_option("--alpha", sv_opt.alpha, "rounding tradeoff factor (>= 2)");
    solve->add_option("--seed", sv_opt.seed, "seed for lp-rand");
    solve->add_option("--trials", sv_opt.trials, "extra sampled trials for lp-rand");
    solve->add_option("--budget", sv_opt.budget,
                      "oracle assignment budget / DP cell budget");
    solve->add_option("--out", sv_out, "also write the report to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a deployment");
    std::string vf_instance, vf_deployment;
    bool vf_require_full = false;
    verify->add_option("-i,--instance", vf_instance, "instance file")->required();
    verify
        ->add_option("--deployment", vf_deployment,
                     "JSON file with a \"deployment\" array (a report works)")
        ->required();
    verify->add_flag("--require-full", vf_require_full,
                     "exit 4 unless every PoI is covered");

    // compare
    auto* compare = app.add_subcommand("compare", "run several algorithms on one instance");
    std::string cp_instance;
    std::vector<std::string> cp_algs;
    bool cp_json = false;
    SolveOptions cp_opt;
    compare->add_option("-i,--instance", cp_instance, "instance file")->required();
    compare->add_option("--algs", cp_algs, "subset of algorithms")->delimiter(',');
    compare->add_option("--alpha", cp_opt.alpha, "rounding tradeoff factor");
    compare->add_option("--seed", cp_opt.seed, "seed for lp-rand");
    compare->add_option("--budget", cp_opt.budget, "oracle/DP budget");
    compare->add_flag("--json", cp_json, "machine-readable output");

    // bench
    auto* bench = app.add_subcommand("bench", "sweep generated families, emit CSV");
    std::vector<int> bn_n, bn_m;
    int bn_seeds = 3, bn_alpha = 2;
    std::uint64_t bn_seed0 = 1, bn_budget = kDefaultOracleBudget;
    std::string bn_out;
    bench->add_option("--n", bn_n, "PoI counts")->delimiter(',');
    bench->add_option("--m", bn_m, "sensor counts")->delimiter(',');
    bench->add_option("--seeds", bn_seeds, "instances per (N, M)");
    bench->add_option("--seed0", bn_seed0, "first seed");
    bench->add_option("--alpha", bn_alpha, "rounding tradeoff factor");
    bench->add_option("--budget", bn_budget, "oracle/DP budget");
    bench->add_option("--out", bn_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_rand->parsed()) {
            const ProblemInstance inst = gen_random(gr_n, gr_m, gr_seed, gr_params);
            emit(serialize_instance(inst), gr_out);
            if (!gr_out.empty()) std::cerr << "wrote " << gr_out << "\n";
            return 0;
        }
        if (gen_tp->parsed()) {
            ThreePartitionSpec spec;
            spec.m = tp_m;
            spec.bound = tp_b;
            spec.sizes = tp_sizes;
            const ProblemInstance inst = gen_three_partition(spec, tp_period);
            emit(serialize_instance(inst), tp_out);
            if (!tp_out.empty()) std::cerr << "wrote " << tp_out << "\n";
            return 0;
        }
        if (solve->parsed()) return cmd_solve(sv_instance, sv_opt, sv_out);
        if (verify->parsed()) return cmd_verify(vf_instance, vf_deployment, vf_require_full);
        if (compare->parsed()) return cmd_compare(cp_instance, cp_algs, cp_opt, cp_json);
        if (bench->parsed())
            return cmd_bench(bn_n, bn_m, bn_seeds, bn_seed0, bn_alpha, bn_budget, bn_out);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
