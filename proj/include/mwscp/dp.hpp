#pragma once

#include <cstdint>

#include "mwscp/core.hpp"

namespace mwscp {

inline constexpr std::uint64_t kDefaultCellBudget = 100'000'000;

/// Result of an exact DP solve over non-overlapping patrol deployments.
/// `weight` is the deployment re-evaluated through covered_weight, so it
/// matches the verifier bit for bit.
struct DpSolution {
    double weight = 0.0;
    Deployment deployment;
    std::uint64_t table_cells_evaluated = 0;
};

/// Exact optimum for instances where every sensor has the same speed.
/// Suffix DP over (sensors used, first undecided PoI); O(M*N) time and
/// O(N) value memory plus one decision bit per cell, so M=1000, N=100000
/// stays comfortably in memory. Throws ValidationError on mixed speeds.
DpSolution solve_uniform(const ProblemInstance& inst);

/// Exact optimum over non-overlapping patrol deployments for any speed mix.
/// Groups sensors into K classes by exact velocity equality and fills a
/// (K+1)-dimensional table of N * prod(m_h + 1) cells, then walks the table
/// values back to recover per-class start lists. Throws ResourceLimitError
/// when the table would exceed `cell_budget` cells.
DpSolution solve_k_velocities(const ProblemInstance& inst,
                              std::uint64_t cell_budget = kDefaultCellBudget);

}  // namespace mwscp
