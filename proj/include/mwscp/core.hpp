#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwscp {

// Invalid or inconsistent input. The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance too large for the requested method (enumeration or DP table
// budget, simplex pivot cap). The CLI maps this to exit code 3.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A weighted point-coverage instance on a line: points of interest with
/// non-negative weights, patrolling sensors with individual top speeds, and
/// a common revisit period. A sensor moving back and forth at speed v can
/// single-handedly patrol a segment of length v*period/2.
struct ProblemInstance {
    std::vector<double> poi_x;       // sorted non-decreasing; duplicates allowed
    std::vector<double> poi_w;       // same length as poi_x, all >= 0
    std::vector<double> velocities;  // >= 0; 0 means a static sensor
    double period = 1.0;             // > 0

    int num_pois() const { return static_cast<int>(poi_x.size()); }
    int num_sensors() const { return static_cast<int>(velocities.size()); }
};

// Throws ValidationError unless all invariants hold.
void validate_instance(const ProblemInstance& inst);

inline constexpr int kIdle = -1;

/// Per-sensor assignment: kIdle, or the 0-based index of the leftmost PoI of
/// the sensor's patrol segment. Sensor i placed at PoI j patrols
/// [poi_x[j], poi_x[j] + covering_range(velocities[i], period)].
struct Deployment {
    std::vector<int> start;
};

// Closed, inclusive range of PoI indices. lo > hi encodes the empty range.
struct IndexRange {
    int lo = 0;
    int hi = -1;

    int count() const { return hi - lo + 1; }
    bool contains(int l) const { return l >= lo && l <= hi; }
};

/// Per-start tables used by the DP solvers for one fixed speed:
/// n[j] = number of PoIs at index >= j inside [poi_x[j], poi_x[j] + r],
/// wsum[j] = total weight of those PoIs. n[j] >= 1 always.
struct CoverageTables {
    std::vector<int> n;
    std::vector<double> wsum;
};

struct CoverageResult {
    double covered_weight = 0.0;
    std::vector<char> covered_mask;  // one entry per PoI
    bool full_cover = false;
};

/// Length of the segment one sensor patrols alone: v * period / 2.
double covering_range(double v, double period);

/// PoI indices inside the closed segment [poi_x[start], poi_x[start] + r]
/// for speed v. Includes every index whose coordinate falls in the segment,
/// so PoIs sharing the start coordinate are covered even if their index is
/// below `start`. Always contains `start`.
IndexRange coverage_interval(const ProblemInstance& inst, double v, int start);

/// coverage_interval for a concrete sensor.
IndexRange coverage_set(const ProblemInstance& inst, int sensor, int start);

/// Builds CoverageTables for speed v with a single two-pointer sweep, O(N).
CoverageTables coverage_tables(const ProblemInstance& inst, double v);

/// Evaluates a deployment: the union of all patrol segments, each PoI
/// counted once no matter how many segments contain it.
CoverageResult covered_weight(const ProblemInstance& inst, const Deployment& d);

bool is_full_cover(const ProblemInstance& inst, const Deployment& d);

}  // namespace mwscp
