#include "mwscp/oracle.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mwscp {

namespace {

std::uint64_t assignment_count(int n, int m, std::uint64_t budget) {
    const std::uint64_t base = static_cast<std::uint64_t>(n) + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > budget / base)
            throw ResourceLimitError(
                "brute force: (N+1)^M exceeds the budget of " +
                std::to_string(budget) + " assignments; use the DP solvers");
        total *= base;
    }
    return total;
}

// Union weight of one assignment; `stamp`/`epoch` avoid clearing the mask.
struct Evaluator {
    const ProblemInstance* inst;
    std::vector<IndexRange> cover;  // [sensor * n + start]
    std::vector<std::uint64_t> stamp;
    std::uint64_t epoch = 0;

    explicit Evaluator(const ProblemInstance& instance) : inst(&instance) {
        const int n = inst->num_pois();
        const int m = inst->num_sensors();
        cover.resize(static_cast<std::size_t>(m) * n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                cover[static_cast<std::size_t>(i) * n + j] = coverage_set(*inst, i, j);
        stamp.assign(n, 0);
    }

    // digits[i] == 0 means idle, d >= 1 means start at PoI d-1.
    double eval(const std::vector<int>& digits) {
        ++epoch;
        const int n = inst->num_pois();
        double w = 0.0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] == 0) continue;
            const IndexRange& cov = cover[i * n + (digits[i] - 1)];
            for (int l = cov.lo; l <= cov.hi; ++l) {
                if (stamp[l] != epoch) {
                    stamp[l] = epoch;
                    w += inst->poi_w[l];
                }
            }
        }
        return w;
    }
};

Deployment to_deployment(const std::vector<int>& digits) {
    Deployment d;
    d.start.resize(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i)
        d.start[i] = digits[i] == 0 ? kIdle : digits[i] - 1;
    return d;
}

struct Best {
    double weight = -1.0;
    std::vector<int> digits;
};

// Enumerates all digit vectors with digits[0] fixed, in lexicographic order;
// keeps the first maximum, i.e. the lexicographically smallest argmax.
Best enumerate_slice(Evaluator& ev, int n, int m, int first_digit) {
    std::vector<int> digits(m, 0);
    digits[0] = first_digit;
    Best best;
    for (;;) {
        const double w = ev.eval(digits);
        if (w > best.weight) {
            best.weight = w;
            best.digits = digits;
        }
        int pos = m - 1;  // rightmost digit runs fastest
        while (pos >= 1 && digits[pos] == n) digits[pos--] = 0;
        if (pos < 1) break;
        ++digits[pos];
    }
    return best;
}

}  // namespace

OracleResult brute_force_separated_serial(const ProblemInstance& inst,
                                          std::uint64_t budget) {
    validate_instance(inst);
    const int n = inst.num_pois();
    const int m = inst.num_sensors();
    const std::uint64_t total = assignment_count(n, m, budget);

    Evaluator ev(inst);
    std::vector<int> digits(m, 0);
    Best best;
    for (std::uint64_t it = 0; it < total; ++it) {
        const double w = ev.eval(digits);
        if (w > best.weight) {
            best.weight = w;
            best.digits = digits;
        }
        int pos = m - 1;
        while (pos >= 0 && digits[pos] == n) digits[pos--] = 0;
        if (pos >= 0) ++digits[pos];
    }

    OracleResult res;
    res.weight = best.weight;
    res.deployment = to_deployment(best.digits);
    res.assignments_enumerated = total;
    return res;
}

OracleResult brute_force_separated(const ProblemInstance& inst,
                                   std::uint64_t budget) {
    validate_instance(inst);
    const int n = inst.num_pois();
    const int m = inst.num_sensors();
    const std::uint64_t total = assignment_count(n, m, budget);

    // One slice per choice of the first sensor; slices are independent and
    // merged in slice order, so the result does not depend on scheduling.
    std::vector<Best> slice(n + 1);
#ifdef _OPENMP
#pragma omp parallel
    {
        Evaluator ev(inst);
#pragma omp for schedule(dynamic)
        for (int c = 0; c <= n; ++c) slice[c] = enumerate_slice(ev, n, m, c);
    }
#else
    Evaluator ev(inst);
    for (int c = 0; c <= n; ++c) slice[c] = enumerate_slice(ev, n, m, c);
#endif

    Best best;
    for (int c = 0; c <= n; ++c) {
        if (slice[c].weight > best.weight) best = slice[c];
    }

    OracleResult res;
    res.weight = best.weight;
    res.deployment = to_deployment(best.digits);
    res.assignments_enumerated = total;
    return res;
}

bool decide_pscp(const ProblemInstance& inst, std::uint64_t oracle_budget,
                 std::uint64_t cell_budget) {
    validate_instance(inst);
    const int n = inst.num_pois();
    const int m = inst.num_sensors();

    const bool uniform = std::all_of(
        inst.velocities.begin(), inst.velocities.end(),
        [&](double v) { return v == inst.velocities[0]; });
    if (uniform) {
        // Greedy: patrol from the leftmost unvisited PoI, repeat.
        const CoverageTables t = coverage_tables(inst, inst.velocities[0]);
        int j = 0, used = 0;
        while (j < n) {
            if (++used > m) return false;
            j += t.n[j];
        }
        return true;
    }

    ProblemInstance unit = inst;
    unit.poi_w.assign(n, 1.0);
    try {
        return solve_k_velocities(unit, cell_budget).weight == static_cast<double>(n);
    } catch (const ResourceLimitError&) {
        return brute_force_separated(unit, oracle_budget).weight ==
               static_cast<double>(n);
    }
}

}  // namespace mwscp
