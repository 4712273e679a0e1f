#include "mwscp/dp.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace mwscp {

namespace {

Deployment assign_in_order(const std::vector<int>& sensors,
                           const std::vector<int>& starts, int num_sensors) {
    // sensors[k] gets starts[k]; everything else idles.
    Deployment d;
    d.start.assign(num_sensors, kIdle);
    for (std::size_t k = 0; k < starts.size(); ++k) d.start[sensors[k]] = starts[k];
    return d;
}

}  // namespace

DpSolution solve_uniform(const ProblemInstance& inst) {
    validate_instance(inst);
    const int n = inst.num_pois();
    const int m = inst.num_sensors();
    const double v = inst.velocities[0];
    for (double vi : inst.velocities)
        if (vi != v)
            throw ValidationError(
                "solve_uniform requires all sensor velocities to be equal; "
                "use solve_k_velocities for mixed speeds");

    const CoverageTables t = coverage_tables(inst, v);

    // Two value rows; decisions packed one bit per (sensor count, PoI) cell.
    std::vector<double> prev(n + 1, 0.0), cur(n + 1, 0.0);
    const std::size_t cells = static_cast<std::size_t>(m) * n;
    std::vector<std::uint64_t> place((cells + 63) / 64, 0);
    const auto bit_set = [&](std::size_t c) { place[c >> 6] |= 1ULL << (c & 63); };
    const auto bit_get = [&](std::size_t c) {
        return (place[c >> 6] >> (c & 63)) & 1ULL;
    };

    for (int i = 0; i < m; ++i) {
        const std::size_t row = static_cast<std::size_t>(i) * n;
        for (int j = n - 1; j >= 0; --j) {
            const double skip = cur[j + 1];
            const double placed = prev[j + t.n[j]] + t.wsum[j];
            if (placed > skip) {  // ties prefer skipping: no extra sensor used
                cur[j] = placed;
                bit_set(row + j);
            } else {
                cur[j] = skip;
            }
        }
        std::swap(prev, cur);
    }

    std::vector<int> starts;
    int left = m, j = 0;
    while (left > 0 && j < n) {
        if (bit_get(static_cast<std::size_t>(left - 1) * n + j)) {
            starts.push_back(j);
            j += t.n[j];
            --left;
        } else {
            ++j;
        }
    }

    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    DpSolution sol;
    sol.deployment = assign_in_order(order, starts, m);
    sol.weight = covered_weight(inst, sol.deployment).covered_weight;
    sol.table_cells_evaluated = cells;
    return sol;
}

DpSolution solve_k_velocities(const ProblemInstance& inst, std::uint64_t cell_budget) {
    validate_instance(inst);
    const int n = inst.num_pois();
    const int m = inst.num_sensors();

    // Velocity classes by exact equality, slowest first.
    std::vector<double> classes(inst.velocities);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    const int k = static_cast<int>(classes.size());

    std::vector<std::vector<int>> class_sensors(k);  // sensor indices, ascending
    for (int i = 0; i < m; ++i) {
        const int h = static_cast<int>(
            std::lower_bound(classes.begin(), classes.end(), inst.velocities[i]) -
            classes.begin());
        class_sensors[h].push_back(i);
    }

    // Mixed-radix state over per-class remaining counts.
    std::vector<std::uint64_t> stride(k);
    std::uint64_t num_states = 1;
    const std::uint64_t state_cap = cell_budget / static_cast<std::uint64_t>(n + 1);
    for (int h = 0; h < k; ++h) {
        stride[h] = num_states;
        const std::uint64_t digits = class_sensors[h].size() + 1;
        if (state_cap == 0 || num_states > state_cap / digits)
            throw ResourceLimitError(
                "solve_k_velocities: DP table exceeds the cell budget of " +
                std::to_string(cell_budget) +
                " cells; raise --budget or reduce the velocity mix");
        num_states *= digits;
    }
    const std::uint64_t cells = num_states * static_cast<std::uint64_t>(n + 1);

    std::vector<CoverageTables> tables(k);
    for (int h = 0; h < k; ++h) tables[h] = coverage_tables(inst, classes[h]);

    // val[j * S + s]: best weight over PoIs j..N-1 with the class counts
    // encoded by s still available. Layer j = n is the all-zero boundary.
    const std::size_t S = static_cast<std::size_t>(num_states);
    std::vector<double> val(static_cast<std::size_t>(n + 1) * S, 0.0);
    std::vector<int> digit(k, 0);

    for (int j = n - 1; j >= 0; --j) {
        const std::size_t layer = static_cast<std::size_t>(j) * S;
        const std::size_t next_layer = layer + S;
        std::fill(digit.begin(), digit.end(), 0);
        for (std::size_t s = 0; s < S; ++s) {
            double best = val[next_layer + s];
            for (int h = 0; h < k; ++h) {
                if (digit[h] == 0) continue;
                const std::size_t jump =
                    static_cast<std::size_t>(j + tables[h].n[j]) * S;
                const double cand = val[jump + s - stride[h]] + tables[h].wsum[j];
                if (cand > best) best = cand;
            }
            val[layer + s] = best;
            for (int h = 0; h < k; ++h) {  // odometer increment
                if (++digit[h] <= static_cast<int>(class_sensors[h].size())) break;
                digit[h] = 0;
            }
        }
    }

    // Value-based traceback; skipping wins ties, slower classes win ties.
    std::vector<std::vector<int>> class_starts(k);
    std::size_t s = S - 1;
    for (int h = 0; h < k; ++h) digit[h] = static_cast<int>(class_sensors[h].size());
    int j = 0;
    while (j < n && s > 0) {
        const std::size_t layer = static_cast<std::size_t>(j) * S;
        if (val[layer + s] == val[layer + S + s]) {
            ++j;
            continue;
        }
        bool placed = false;
        for (int h = 0; h < k && !placed; ++h) {
            if (digit[h] == 0) continue;
            const std::size_t jump = static_cast<std::size_t>(j + tables[h].n[j]) * S;
            if (val[layer + s] == val[jump + s - stride[h]] + tables[h].wsum[j]) {
                class_starts[h].push_back(j);
                s -= stride[h];
                --digit[h];
                j += tables[h].n[j];
                placed = true;
            }
        }
        assert(placed && "DP table value matched no transition");
        if (!placed) break;
    }

    DpSolution sol;
    sol.deployment.start.assign(m, kIdle);
    for (int h = 0; h < k; ++h) {
        // Class sensors in index order take the class starts left to right.
        for (std::size_t idx = 0; idx < class_starts[h].size(); ++idx)
            sol.deployment.start[class_sensors[h][idx]] = class_starts[h][idx];
    }
    sol.weight = covered_weight(inst, sol.deployment).covered_weight;
    sol.table_cells_evaluated = cells;
    return sol;
}

}  // namespace mwscp
