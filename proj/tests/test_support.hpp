#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mwscp/core.hpp"
#include "mwscp/instances.hpp"
#include "mwscp/simplex.hpp"

namespace mwscp::test {

inline ProblemInstance make_instance(std::vector<double> x, std::vector<double> w,
                                     std::vector<double> v, double period) {
    ProblemInstance inst;
    inst.poi_x = std::move(x);
    inst.poi_w = std::move(w);
    inst.velocities = std::move(v);
    inst.period = period;
    validate_instance(inst);
    return inst;
}

// --- exhaustive 3-partition checker (independent of the solvers) ---------

using Triple = std::array<int, 3>;

inline bool find_partition(const std::vector<long long>& sizes, long long target,
                           std::vector<char>& used, std::vector<Triple>& out) {
    int first = -1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (!used[i]) {
            first = static_cast<int>(i);
            break;
        }
    }
    if (first < 0) return true;
    used[first] = 1;
    for (std::size_t j = first + 1; j < sizes.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        for (std::size_t k = j + 1; k < sizes.size(); ++k) {
            if (used[k]) continue;
            if (sizes[first] + sizes[j] + sizes[k] != target) continue;
            used[k] = 1;
            out.push_back({first, static_cast<int>(j), static_cast<int>(k)});
            if (find_partition(sizes, target, used, out)) return true;
            out.pop_back();
            used[k] = 0;
        }
        used[j] = 0;
    }
    used[first] = 0;
    return false;
}

// The triples partitioning the sizes into sums of B, or nullopt.
inline std::optional<std::vector<Triple>> three_partition_solution(
    const ThreePartitionSpec& spec) {
    std::vector<char> used(spec.sizes.size(), 0);
    std::vector<Triple> out;
    if (find_partition(spec.sizes, spec.bound, used, out)) return out;
    return std::nullopt;
}

inline bool three_partition_satisfiable(const ThreePartitionSpec& spec) {
    return three_partition_solution(spec).has_value();
}

// Every spec with the given m whose integer sizes obey B/4 < s < B/2 and
// sum to m*B, as non-decreasing size multisets.
inline std::vector<ThreePartitionSpec> valid_specs(int m, long long bound) {
    std::vector<long long> allowed;
    for (long long s = bound / 4 + 1; 2 * s < bound; ++s)
        if (4 * s > bound) allowed.push_back(s);

    std::vector<ThreePartitionSpec> specs;
    std::vector<long long> cur;
    const int count = 3 * m;
    const long long target = static_cast<long long>(m) * bound;
    auto rec = [&](auto&& self, std::size_t from, long long sum) -> void {
        if (static_cast<int>(cur.size()) == count) {
            if (sum == target) {
                ThreePartitionSpec spec;
                spec.m = m;
                spec.bound = bound;
                spec.sizes = cur;
                specs.push_back(spec);
            }
            return;
        }
        for (std::size_t a = from; a < allowed.size(); ++a) {
            if (sum + allowed[a] > target) break;
            cur.push_back(allowed[a]);
            self(self, a, sum + allowed[a]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return specs;
}

// Block-by-block greedy deployment for a satisfied spec: inside each block,
// a sensor of size s always covers exactly 2s+1 PoIs, so the triple covers
// the whole block no matter the order.
inline Deployment blockwise_deployment(const ThreePartitionSpec& spec,
                                       const std::vector<Triple>& triples) {
    Deployment d;
    d.start.assign(spec.sizes.size(), kIdle);
    const int per_block = static_cast<int>(2 * spec.bound + 2);
    for (std::size_t b = 0; b < triples.size(); ++b) {
        int next = static_cast<int>(b) * per_block;
        for (int sensor : triples[b]) {
            d.start[sensor] = next;
            next += static_cast<int>(2 * spec.sizes[sensor] + 1);
        }
    }
    return d;
}

// --- brute-force LP oracle: enumerate basic vertices ----------------------

inline bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                         std::vector<double>& x) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-9) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

// Maximum of the objective over all vertices of {A y <= b, y >= 0}.
// Exponential; only for num_vars <= ~6.
inline double vertex_enum_max(const simplex::Problem& p) {
    const int n = p.num_vars;
    std::vector<std::vector<double>> rows = p.rows;
    std::vector<double> rhs = p.rhs;
    for (int k = 0; k < n; ++k) {  // y_k >= 0 as -y_k <= 0
        std::vector<double> row(n, 0.0);
        row[k] = -1.0;
        rows.push_back(row);
        rhs.push_back(0.0);
    }
    const int total = static_cast<int>(rows.size());
    double best = -std::numeric_limits<double>::infinity();

    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == n) {
            std::vector<std::vector<double>> a(n);
            std::vector<double> b(n);
            for (int i = 0; i < n; ++i) {
                a[i] = rows[pick[i]];
                b[i] = rhs[pick[i]];
            }
            std::vector<double> y;
            if (!solve_square(std::move(a), std::move(b), y)) return;
            for (int r = 0; r < total; ++r) {
                double lhs = 0.0;
                for (int c = 0; c < n; ++c) lhs += rows[r][c] * y[c];
                if (lhs > rhs[r] + 1e-7) return;
            }
            double obj = 0.0;
            for (int c = 0; c < n; ++c) obj += p.objective[c] * y[c];
            best = std::max(best, obj);
            return;
        }
        for (int r = from; r < total; ++r) {
            pick.push_back(r);
            self(self, r + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

// Removes every line containing `needle`; used to compare reports while
// ignoring timing fields.
inline std::string strip_lines(const std::string& text, const std::string& needle) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(pos, end - pos);
        if (line.find(needle) == std::string::npos) {
            out += line;
            out += '\n';
        }
        pos = end + 1;
    }
    return out;
}

}  // namespace mwscp::test
