#pragma once

#include <cstdint>
#include <vector>

#include "mwscp/core.hpp"

namespace mwscp {

/// Fractional relaxation of start-point selection: x[i][j] is the weight
/// with which sensor i patrols from PoI j, z[l] the coverage level of PoI l.
///   maximize  sum_l w[l] * z[l]
///   s.t.      sum over (i,j) with l in cover(i,j) of x[i][j] >= z[l]
///             sum_j x[i][j] <= 1 per sensor
///             0 <= x <= 1, 0 <= z <= 1
struct LpModel {
    int num_sensors = 0;
    int num_pois = 0;
    std::vector<double> weights;
    std::vector<IndexRange> cover;  // row-major [sensor * num_pois + start]

    const IndexRange& cover_set(int i, int j) const {
        return cover[static_cast<std::size_t>(i) * num_pois + j];
    }
};

enum class LpStatus { optimal, infeasible_guard };

struct LpSolution {
    int num_sensors = 0;
    int num_pois = 0;
    std::vector<double> x;  // row-major M x N, clamped to [0,1]
    std::vector<double> z;  // length N, clamped to [0,1]
    double objective = 0.0;
    LpStatus status = LpStatus::optimal;
    long pivots = 0;

    double x_at(int i, int j) const {
        return x[static_cast<std::size_t>(i) * num_pois + j];
    }
};

LpModel build_lp(const ProblemInstance& inst);

/// Solves the relaxation with the built-in simplex. The model is always
/// feasible (all zeros) and bounded (objective <= sum of weights), so the
/// result is optimal; the x <= 1 bounds are implied by the per-sensor rows
/// and are not materialized as tableau rows.
LpSolution solve_lp(const LpModel& model, long max_pivots = 1'000'000);

/// One sampled deployment: sensor i starts at j with probability x*[i][j]
/// and idles with the leftover mass 1 - sum_j x*[i][j].
struct RandomChoiceTrace {
    std::uint64_t seed = 0;
    std::vector<int> choice;  // per sensor: kIdle or a start index
    double weight = 0.0;

    Deployment deployment() const { return Deployment{choice}; }
};

RandomChoiceTrace randomized_round(const ProblemInstance& inst,
                                   const LpSolution& sol, std::uint64_t seed);

/// Expected covered weight of the sampling process given that sensors
/// 0..fixed.size()-1 have already been pinned to the listed choices
/// (kIdle allowed). Pr[l covered] = 1 if a pinned sensor covers l, else
/// 1 - prod over free sensors i of (1 - sum_{j: l in cover(i,j)} x*[i][j]).
double conditional_expectation(const ProblemInstance& inst, const LpSolution& sol,
                               const std::vector<int>& fixed);

struct DerandomizedSolution {
    double weight = 0.0;
    Deployment deployment;
    // expectation_path[i] = conditional expectation after fixing i sensors;
    // non-decreasing, starts at E[W], ends at the realized weight.
    std::vector<double> expectation_path;
};

/// Fixes sensors one by one to the choice maximizing the conditional
/// expectation (idle is a candidate but loses ties; among starts the
/// smallest index wins). Guarantees weight >= (1 - 1/e) * LP objective.
DerandomizedSolution derandomize(const ProblemInstance& inst, const LpSolution& sol);

/// Mean (and optionally sample standard deviation) of the realized weight
/// over `trials` seeds base_seed, base_seed+1, ... Trials are independent
/// and may run in parallel; the reduction order is fixed, so the result is
/// deterministic.
double mean_randomized_weight(const ProblemInstance& inst, const LpSolution& sol,
                              std::uint64_t base_seed, int trials,
                              double* stddev_out = nullptr);

}  // namespace mwscp
