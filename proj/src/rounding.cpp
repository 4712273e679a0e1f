#include "mwscp/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mwscp {

namespace {

void check_alpha(int alpha) {
    if (alpha < 2) throw ValidationError("alpha must be an integer >= 2");
}

}  // namespace

double compute_threshold(const ProblemInstance& inst, int alpha) {
    validate_instance(inst);
    check_alpha(alpha);
    const int n = inst.num_pois();

    double v_low = std::numeric_limits<double>::infinity();
    for (double v : inst.velocities)
        if (v > 0.0) v_low = std::min(v_low, v);

    double span = std::numeric_limits<double>::infinity();
    for (int j = 0; j + alpha < n; ++j)
        span = std::min(span, inst.poi_x[j + alpha] - inst.poi_x[j]);

    const bool have_vl = std::isfinite(v_low);
    const bool have_span = std::isfinite(span);
    const double v_span = have_span ? 2.0 * span / inst.period : 0.0;

    if (have_vl && have_span) return std::max(v_low, v_span);
    if (have_vl) return v_low;
    if (have_span) return v_span;
    return 0.0;  // all sensors static and too few PoIs to matter
}

RoundingPlan round_velocities(const ProblemInstance& inst, int alpha) {
    check_alpha(alpha);
    RoundingPlan plan;
    plan.alpha = alpha;
    plan.threshold = compute_threshold(inst, alpha);

    const int m = inst.num_sensors();
    plan.rounded.resize(m);
    for (int i = 0; i < m; ++i) {
        const double v = inst.velocities[i];
        if (v <= 0.0 || v < plan.threshold) {
            plan.rounded[i] = 0.0;
            continue;
        }
        // Largest threshold * alpha^k <= v, found by exact multiplication
        // rather than floating-point logarithms (floor(log) misrounds at
        // exact powers).
        double p = plan.threshold;
        while (p * alpha <= v) p *= alpha;
        plan.rounded[i] = p;
    }

    std::vector<double> distinct(plan.rounded);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    plan.class_count = static_cast<int>(distinct.size());
    plan.sensor_class.resize(m);
    for (int i = 0; i < m; ++i)
        plan.sensor_class[i] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), plan.rounded[i]) -
            distinct.begin());
    return plan;
}

DpSolution solve_rounded(const ProblemInstance& inst, int alpha,
                         std::uint64_t cell_budget) {
    const RoundingPlan plan = round_velocities(inst, alpha);

    ProblemInstance rounded = inst;
    rounded.velocities = plan.rounded;
    const DpSolution inner = solve_k_velocities(rounded, cell_budget);

    // Within each rounded class, faster originals take the leftmost
    // segments; every original velocity dominates its class value, so each
    // segment keeps (at least) the PoIs the DP counted for it.
    const int m = inst.num_sensors();
    DpSolution sol;
    sol.deployment.start.assign(m, kIdle);
    for (int c = 0; c < plan.class_count; ++c) {
        std::vector<int> members;
        std::vector<int> starts;
        for (int i = 0; i < m; ++i) {
            if (plan.sensor_class[i] != c) continue;
            members.push_back(i);
            if (inner.deployment.start[i] != kIdle)
                starts.push_back(inner.deployment.start[i]);
        }
        std::sort(starts.begin(), starts.end());
        std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
            return inst.velocities[a] > inst.velocities[b];
        });
        for (std::size_t idx = 0; idx < starts.size(); ++idx)
            sol.deployment.start[members[idx]] = starts[idx];
    }

    sol.weight = covered_weight(inst, sol.deployment).covered_weight;
    sol.table_cells_evaluated = inner.table_cells_evaluated;
    return sol;
}

}  // namespace mwscp
