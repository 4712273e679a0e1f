#pragma once

#include <vector>

#include "mwscp/core.hpp"
#include "mwscp/dp.hpp"

namespace mwscp {

/// Velocity rounding into geometric classes. Sensors at or above the
/// threshold keep the largest value threshold * alpha^k not exceeding their
/// speed; slower sensors become static. Guarantees v' <= v <= alpha * v'
/// for every demoted-but-nonzero sensor, and at most
/// ceil(log_alpha(v_max / threshold)) + 1 distinct nonzero classes.
struct RoundingPlan {
    int alpha = 2;
    double threshold = 0.0;              // v_d
    std::vector<double> rounded;         // per-sensor rounded velocity
    int class_count = 0;                 // distinct rounded values present
    std::vector<int> sensor_class;       // index into ascending distinct values
};

/// Threshold v_d = max(v_l, 2 * d_min / T) where v_l is the smallest nonzero
/// velocity and d_min the smallest span of alpha+1 consecutive PoIs. The
/// span term is converted to speed units so that a patrol segment shorter
/// than the matching range can never contain more than alpha PoIs. A term
/// that is undefined (no nonzero velocity, or N <= alpha) is dropped; if
/// both are undefined the threshold is 0 and every sensor stays static.
double compute_threshold(const ProblemInstance& inst, int alpha);

RoundingPlan round_velocities(const ProblemInstance& inst, int alpha);

/// Rounds velocities, solves the rounded instance exactly with
/// solve_k_velocities, then hands each placed patrol segment back to an
/// original sensor of the same class (fastest original takes the leftmost
/// segment). The returned weight is evaluated with the original velocities,
/// which can only enlarge segments. Achieves at least 1/alpha of the
/// exact non-overlapping optimum.
DpSolution solve_rounded(const ProblemInstance& inst, int alpha,
                         std::uint64_t cell_budget = kDefaultCellBudget);

}  // namespace mwscp
