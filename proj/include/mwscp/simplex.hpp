#pragma once

#include <vector>

#include "mwscp/core.hpp"

namespace mwscp::simplex {

/// maximize c.y  subject to  A y <= b, y >= 0, with every b_r >= 0 so the
/// slack basis is feasible from the start. Rows are dense.
struct Problem {
    int num_vars = 0;
    std::vector<std::vector<double>> rows;  // each of length num_vars
    std::vector<double> rhs;
    std::vector<double> objective;          // length num_vars
};

enum class Status { optimal, unbounded };

struct Result {
    Status status = Status::optimal;
    double objective = 0.0;
    std::vector<double> solution;
    long pivots = 0;
};

/// Dense-tableau primal simplex with Bland's entering/leaving rule, which
/// cannot cycle on the degenerate vertices these models start from.
/// Throws ResourceLimitError past `max_pivots` (that means a solver bug,
/// not an infeasible model).
Result maximize(const Problem& p, long max_pivots = 1'000'000, double tol = 1e-9);

}  // namespace mwscp::simplex
