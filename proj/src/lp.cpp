#include "mwscp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mwscp/rng.hpp"
#include "mwscp/simplex.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mwscp {

namespace {

constexpr double kMassTol = 1e-9;

// Total start mass per sensor; throws if any exceeds 1 beyond tolerance.
std::vector<double> sensor_mass(const LpSolution& sol) {
    std::vector<double> mass(sol.num_sensors, 0.0);
    for (int i = 0; i < sol.num_sensors; ++i) {
        for (int j = 0; j < sol.num_pois; ++j) mass[i] += sol.x_at(i, j);
        if (mass[i] > 1.0 + kMassTol)
            throw ValidationError("sensor " + std::to_string(i) +
                                  ": start probabilities sum to " +
                                  std::to_string(mass[i]) + " > 1");
    }
    return mass;
}

// q[i][l] = probability that sensor i covers PoI l, clamped to [0,1].
std::vector<double> cover_probabilities(const LpModel& model, const LpSolution& sol) {
    const int m = model.num_sensors;
    const int n = model.num_pois;
    std::vector<double> q(static_cast<std::size_t>(m) * n, 0.0);
    for (int i = 0; i < m; ++i) {
        // Range-add via difference array, one pass per sensor.
        std::vector<double> diff(n + 1, 0.0);
        for (int j = 0; j < n; ++j) {
            const double xij = sol.x_at(i, j);
            if (xij <= 0.0) continue;
            const IndexRange& cov = model.cover_set(i, j);
            diff[cov.lo] += xij;
            diff[cov.hi + 1] -= xij;
        }
        double acc = 0.0;
        for (int l = 0; l < n; ++l) {
            acc += diff[l];
            q[static_cast<std::size_t>(i) * n + l] = std::clamp(acc, 0.0, 1.0);
        }
    }
    return q;
}

}  // namespace

LpModel build_lp(const ProblemInstance& inst) {
    validate_instance(inst);
    LpModel model;
    model.num_sensors = inst.num_sensors();
    model.num_pois = inst.num_pois();
    model.weights = inst.poi_w;
    model.cover.resize(static_cast<std::size_t>(model.num_sensors) * model.num_pois);
    for (int i = 0; i < model.num_sensors; ++i)
        for (int j = 0; j < model.num_pois; ++j)
            model.cover[static_cast<std::size_t>(i) * model.num_pois + j] =
                coverage_set(inst, i, j);
    return model;
}

LpSolution solve_lp(const LpModel& model, long max_pivots) {
    const int m = model.num_sensors;
    const int n = model.num_pois;
    const int nx = m * n;
    const int nvars = nx + n;  // x variables then z variables

    simplex::Problem p;
    p.num_vars = nvars;
    p.objective.assign(nvars, 0.0);
    for (int l = 0; l < n; ++l) p.objective[nx + l] = model.weights[l];

    // Coverage rows: z_l - sum of covering x <= 0.
    for (int l = 0; l < n; ++l) {
        std::vector<double> row(nvars, 0.0);
        row[nx + l] = 1.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (model.cover_set(i, j).contains(l)) row[i * n + j] = -1.0;
        p.rows.push_back(std::move(row));
        p.rhs.push_back(0.0);
    }
    // Budget rows: sum_j x_ij <= 1 (these also imply x_ij <= 1).
    for (int i = 0; i < m; ++i) {
        std::vector<double> row(nvars, 0.0);
        for (int j = 0; j < n; ++j) row[i * n + j] = 1.0;
        p.rows.push_back(std::move(row));
        p.rhs.push_back(1.0);
    }
    // Caps z_l <= 1.
    for (int l = 0; l < n; ++l) {
        std::vector<double> row(nvars, 0.0);
        row[nx + l] = 1.0;
        p.rows.push_back(std::move(row));
        p.rhs.push_back(1.0);
    }

    const simplex::Result r = simplex::maximize(p, max_pivots);
    if (r.status != simplex::Status::optimal)
        throw ResourceLimitError("solve_lp: simplex reported unbounded (solver bug)");

    LpSolution sol;
    sol.num_sensors = m;
    sol.num_pois = n;
    sol.pivots = r.pivots;
    sol.status = LpStatus::optimal;
    sol.x.resize(nx);
    sol.z.resize(n);
    for (int k = 0; k < nx; ++k) sol.x[k] = std::clamp(r.solution[k], 0.0, 1.0);
    for (int l = 0; l < n; ++l) sol.z[l] = std::clamp(r.solution[nx + l], 0.0, 1.0);
    sol.objective = 0.0;
    for (int l = 0; l < n; ++l) sol.objective += model.weights[l] * sol.z[l];
    return sol;
}

RandomChoiceTrace randomized_round(const ProblemInstance& inst,
                                   const LpSolution& sol, std::uint64_t seed) {
    validate_instance(inst);
    if (sol.num_sensors != inst.num_sensors() || sol.num_pois != inst.num_pois())
        throw ValidationError("randomized_round: solution shape mismatch");
    sensor_mass(sol);

    RandomChoiceTrace trace;
    trace.seed = seed;
    trace.choice.assign(sol.num_sensors, kIdle);
    SplitMix64 rng(seed);
    for (int i = 0; i < sol.num_sensors; ++i) {
        const double u = rng.next_double();
        double cum = 0.0;
        for (int j = 0; j < sol.num_pois; ++j) {
            cum += sol.x_at(i, j);
            if (u < cum) {
                trace.choice[i] = j;
                break;
            }
        }
        // u past the total mass leaves the sensor idle.
    }
    trace.weight = covered_weight(inst, trace.deployment()).covered_weight;
    return trace;
}

double conditional_expectation(const ProblemInstance& inst, const LpSolution& sol,
                               const std::vector<int>& fixed) {
    validate_instance(inst);
    if (sol.num_sensors != inst.num_sensors() || sol.num_pois != inst.num_pois())
        throw ValidationError("conditional_expectation: solution shape mismatch");
    const int m = sol.num_sensors;
    const int n = sol.num_pois;
    if (static_cast<int>(fixed.size()) > m)
        throw ValidationError("conditional_expectation: more fixed choices than sensors");
    sensor_mass(sol);

    std::vector<char> covered(n, 0);
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (fixed[i] == kIdle) continue;
        const IndexRange cov = coverage_set(inst, static_cast<int>(i), fixed[i]);
        for (int l = cov.lo; l <= cov.hi; ++l) covered[l] = 1;
    }

    const LpModel model = build_lp(inst);
    const std::vector<double> q = cover_probabilities(model, sol);
    double expect = 0.0;
    for (int l = 0; l < n; ++l) {
        if (covered[l]) {
            expect += inst.poi_w[l];
            continue;
        }
        double miss = 1.0;
        for (int i = static_cast<int>(fixed.size()); i < m; ++i)
            miss *= 1.0 - q[static_cast<std::size_t>(i) * n + l];
        expect += inst.poi_w[l] * (1.0 - miss);
    }
    return expect;
}

DerandomizedSolution derandomize(const ProblemInstance& inst, const LpSolution& sol) {
    validate_instance(inst);
    if (sol.num_sensors != inst.num_sensors() || sol.num_pois != inst.num_pois())
        throw ValidationError("derandomize: solution shape mismatch");
    const int m = sol.num_sensors;
    const int n = sol.num_pois;
    sensor_mass(sol);

    const LpModel model = build_lp(inst);
    const std::vector<double> q = cover_probabilities(model, sol);

    DerandomizedSolution out;
    out.deployment.start.assign(m, kIdle);
    out.expectation_path.reserve(m + 1);

    std::vector<char> covered(n, 0);
    std::vector<double> miss_tail(n);   // prod over sensors > i of (1 - q)
    std::vector<double> gain_pref(n + 1);

    // Root expectation: nothing fixed yet.
    {
        double expect = 0.0;
        for (int l = 0; l < n; ++l) {
            double miss = 1.0;
            for (int i = 0; i < m; ++i)
                miss *= 1.0 - q[static_cast<std::size_t>(i) * n + l];
            expect += inst.poi_w[l] * (1.0 - miss);
        }
        out.expectation_path.push_back(expect);
    }

    for (int i = 0; i < m; ++i) {
        for (int l = 0; l < n; ++l) {
            double miss = 1.0;
            for (int k = i + 1; k < m; ++k)
                miss *= 1.0 - q[static_cast<std::size_t>(k) * n + l];
            miss_tail[l] = miss;
        }
        // Base: expectation with sensor i idle; placing it at j adds back
        // the miss mass of the still-uncovered PoIs in cover(i, j).
        double base = 0.0;
        gain_pref[0] = 0.0;
        for (int l = 0; l < n; ++l) {
            const double gain = covered[l] ? 0.0 : inst.poi_w[l] * miss_tail[l];
            base += covered[l] ? inst.poi_w[l]
                               : inst.poi_w[l] * (1.0 - miss_tail[l]);
            gain_pref[l + 1] = gain_pref[l] + gain;
        }

        int best_j = kIdle;
        double best = base;  // idle loses ties to any start
        for (int j = 0; j < n; ++j) {
            const IndexRange& cov = model.cover_set(i, j);
            const double e = base + (gain_pref[cov.hi + 1] - gain_pref[cov.lo]);
            if (e > best || (best_j == kIdle && e == best)) {
                best = e;
                best_j = j;
            }
        }

        out.deployment.start[i] = best_j;
        out.expectation_path.push_back(best);
        if (best_j != kIdle) {
            const IndexRange& cov = model.cover_set(i, best_j);
            for (int l = cov.lo; l <= cov.hi; ++l) covered[l] = 1;
        }
    }

    out.weight = covered_weight(inst, out.deployment).covered_weight;
    return out;
}

double mean_randomized_weight(const ProblemInstance& inst, const LpSolution& sol,
                              std::uint64_t base_seed, int trials,
                              double* stddev_out) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    std::vector<double> w(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < trials; ++t)
        w[t] = randomized_round(inst, sol, base_seed + static_cast<std::uint64_t>(t))
                   .weight;

    double sum = 0.0;
    for (double x : w) sum += x;  // fixed order keeps the mean deterministic
    const double mean = sum / trials;
    if (stddev_out) {
        double ss = 0.0;
        for (double x : w) ss += (x - mean) * (x - mean);
        *stddev_out = trials > 1 ? std::sqrt(ss / (trials - 1)) : 0.0;
    }
    return mean;
}

}  // namespace mwscp
