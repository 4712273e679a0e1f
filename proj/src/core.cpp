#include "mwscp/core.hpp"

#include <algorithm>
#include <cmath>

namespace mwscp {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void validate_instance(const ProblemInstance& inst) {
    const int n = inst.num_pois();
    const int m = inst.num_sensors();
    if (n < 1) throw ValidationError("instance needs at least one PoI");
    if (m < 1) throw ValidationError("instance needs at least one sensor");
    if (inst.poi_w.size() != inst.poi_x.size())
        throw ValidationError("poi_x and poi_w must have equal length");
    if (!finite(inst.period) || inst.period <= 0.0)
        throw ValidationError("period must be a positive finite number");
    for (int j = 0; j < n; ++j) {
        if (!finite(inst.poi_x[j]))
            throw ValidationError("pois[" + std::to_string(j) + "].x: must be finite");
        if (!finite(inst.poi_w[j]) || inst.poi_w[j] < 0.0)
            throw ValidationError("pois[" + std::to_string(j) +
                                  "].w: must be a non-negative finite number");
        if (j > 0 && inst.poi_x[j] < inst.poi_x[j - 1])
            throw ValidationError("poi_x must be sorted non-decreasing");
    }
    for (int i = 0; i < m; ++i) {
        if (!finite(inst.velocities[i]) || inst.velocities[i] < 0.0)
            throw ValidationError("sensors[" + std::to_string(i) +
                                  "]: velocity must be a non-negative finite number");
    }
}

double covering_range(double v, double period) {
    if (!finite(v) || v < 0.0)
        throw ValidationError("covering_range: velocity must be non-negative and finite");
    if (!finite(period) || period <= 0.0)
        throw ValidationError("covering_range: period must be positive and finite");
    return v * period / 2.0;
}

IndexRange coverage_interval(const ProblemInstance& inst, double v, int start) {
    const int n = inst.num_pois();
    if (start < 0 || start >= n)
        throw ValidationError("coverage: start index out of range");
    const double lo_x = inst.poi_x[start];
    const double hi_x = lo_x + covering_range(v, inst.period);
    const auto first = std::lower_bound(inst.poi_x.begin(), inst.poi_x.end(), lo_x);
    const auto last = std::upper_bound(inst.poi_x.begin(), inst.poi_x.end(), hi_x);
    IndexRange r;
    r.lo = static_cast<int>(first - inst.poi_x.begin());
    r.hi = static_cast<int>(last - inst.poi_x.begin()) - 1;
    return r;
}

IndexRange coverage_set(const ProblemInstance& inst, int sensor, int start) {
    if (sensor < 0 || sensor >= inst.num_sensors())
        throw ValidationError("coverage_set: sensor index out of range");
    return coverage_interval(inst, inst.velocities[sensor], start);
}

CoverageTables coverage_tables(const ProblemInstance& inst, double v) {
    const int n = inst.num_pois();
    const double r = covering_range(v, inst.period);

    // Prefix sums of weights; differences are exact for the integer-valued
    // weights the generators emit.
    std::vector<double> pref(n + 1, 0.0);
    for (int j = 0; j < n; ++j) pref[j + 1] = pref[j] + inst.poi_w[j];

    CoverageTables t;
    t.n.resize(n);
    t.wsum.resize(n);
    int e = 0;  // rightmost covered index for the current start
    for (int j = 0; j < n; ++j) {
        if (e < j) e = j;
        const double end_x = inst.poi_x[j] + r;
        while (e + 1 < n && inst.poi_x[e + 1] <= end_x) ++e;
        t.n[j] = e - j + 1;
        t.wsum[j] = pref[e + 1] - pref[j];
    }
    return t;
}

CoverageResult covered_weight(const ProblemInstance& inst, const Deployment& d) {
    const int n = inst.num_pois();
    const int m = inst.num_sensors();
    if (static_cast<int>(d.start.size()) != m)
        throw ValidationError("deployment must assign every sensor exactly once");

    CoverageResult res;
    res.covered_mask.assign(n, 0);
    for (int i = 0; i < m; ++i) {
        const int s = d.start[i];
        if (s == kIdle) continue;
        if (s < 0 || s >= n)
            throw ValidationError("deployment: sensor " + std::to_string(i) +
                                  " start index out of range");
        const IndexRange cov = coverage_set(inst, i, s);
        for (int l = cov.lo; l <= cov.hi; ++l) res.covered_mask[l] = 1;
    }
    res.full_cover = true;
    for (int l = 0; l < n; ++l) {
        if (res.covered_mask[l])
            res.covered_weight += inst.poi_w[l];
        else
            res.full_cover = false;
    }
    return res;
}

bool is_full_cover(const ProblemInstance& inst, const Deployment& d) {
    return covered_weight(inst, d).full_cover;
}

}  // namespace mwscp
