#include "mwscp/simplex.hpp"

#include <string>

namespace mwscp::simplex {

Result maximize(const Problem& p, long max_pivots, double tol) {
    const int n = p.num_vars;
    const int r = static_cast<int>(p.rows.size());
    if (static_cast<int>(p.rhs.size()) != r ||
        static_cast<int>(p.objective.size()) != n)
        throw ValidationError("simplex: inconsistent problem dimensions");
    for (double b : p.rhs)
        if (b < 0.0)
            throw ValidationError("simplex: rhs must be non-negative");

    const int cols = n + r;  // structural vars then one slack per row
    const int width = cols + 1;
    std::vector<double> tab(static_cast<std::size_t>(r) * width, 0.0);
    auto cell = [&](int row, int col) -> double& {
        return tab[static_cast<std::size_t>(row) * width + col];
    };
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) cell(i, j) = p.rows[i][j];
        cell(i, n + i) = 1.0;
        cell(i, cols) = p.rhs[i];
    }
    std::vector<double> reduced(cols + 1, 0.0);  // reduced costs, then -objective
    for (int j = 0; j < n; ++j) reduced[j] = p.objective[j];
    std::vector<int> basis(r);
    for (int i = 0; i < r; ++i) basis[i] = n + i;

    Result res;
    for (;;) {
        // Bland: entering column = lowest index with positive reduced cost.
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
            if (reduced[j] > tol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;  // optimal

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < r; ++i) {
            const double a = cell(i, enter);
            if (a <= tol) continue;
            const double ratio = cell(i, cols) / a;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            res.status = Status::unbounded;
            return res;
        }

        if (++res.pivots > max_pivots)
            throw ResourceLimitError("simplex: pivot cap of " +
                                     std::to_string(max_pivots) +
                                     " exceeded (solver bug?)");

        const double piv = cell(leave, enter);
        for (int j = 0; j <= cols; ++j) cell(leave, j) /= piv;
        cell(leave, enter) = 1.0;
        for (int i = 0; i < r; ++i) {
            if (i == leave) continue;
            const double f = cell(i, enter);
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) cell(i, j) -= f * cell(leave, j);
            cell(i, enter) = 0.0;
        }
        const double f = reduced[enter];
        if (f != 0.0) {
            for (int j = 0; j <= cols; ++j) reduced[j] -= f * cell(leave, j);
            reduced[enter] = 0.0;
        }
        basis[leave] = enter;
    }

    res.solution.assign(n, 0.0);
    for (int i = 0; i < r; ++i)
        if (basis[i] < n) res.solution[basis[i]] = cell(i, cols);
    res.objective = 0.0;
    for (int j = 0; j < n; ++j) res.objective += p.objective[j] * res.solution[j];
    res.status = Status::optimal;
    return res;
}

}  // namespace mwscp::simplex
