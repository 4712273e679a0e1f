#pragma once

#include <cstdint>

#include "mwscp/core.hpp"
#include "mwscp/dp.hpp"

namespace mwscp {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

struct OracleResult {
    double weight = 0.0;
    Deployment deployment;
    std::uint64_t assignments_enumerated = 0;
};

/// Ground truth at desk scale: enumerates all (N+1)^M assignments of each
/// sensor to idle-or-start and keeps the best, ties broken by the
/// lexicographically smallest assignment vector (idle sorts first).
/// Throws ResourceLimitError when (N+1)^M exceeds `budget`.
///
/// The default entry point splits the enumeration over the first sensor's
/// choice and runs the slices in parallel; the serial twin enumerates one
/// flat counter and is kept as the reference the parallel kernel is tested
/// and benchmarked against. Both return identical results.
OracleResult brute_force_separated(const ProblemInstance& inst,
                                   std::uint64_t budget = kDefaultOracleBudget);
OracleResult brute_force_separated_serial(const ProblemInstance& inst,
                                          std::uint64_t budget = kDefaultOracleBudget);

/// Can the sensors keep every PoI visited within the period? Uniform-speed
/// instances use a greedy left-to-right argument in O(N); mixed speeds fall
/// back to the exact DP within `cell_budget`, then to brute force within
/// `oracle_budget`.
bool decide_pscp(const ProblemInstance& inst,
                 std::uint64_t oracle_budget = kDefaultOracleBudget,
                 std::uint64_t cell_budget = kDefaultCellBudget);

}  // namespace mwscp
