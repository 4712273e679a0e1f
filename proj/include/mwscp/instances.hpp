#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mwscp/core.hpp"

namespace mwscp {

/// 3m positive integer sizes, each strictly between bound/4 and bound/2,
/// summing to m * bound.
struct ThreePartitionSpec {
    int m = 1;
    long long bound = 0;  // B
    std::vector<long long> sizes;

    void validate() const;  // throws ValidationError
};

/// Hard unit-weight family: m blocks of 2B+2 PoIs. Inside a block the
/// 2B+1 gaps are B/(2B+1) each (block span exactly B); consecutive blocks
/// are separated by a gap of B. The 3m sensors get velocities 2*size/period
/// so each covering range equals its size. The instance is fully coverable
/// iff the sizes split into m triples each summing to B.
ProblemInstance gen_three_partition(const ThreePartitionSpec& spec, double period);

/// Knobs for gen_random. Defaults keep every number exactly representable
/// (half-integer grid, integer weights, period 2 so range == velocity) so
/// solver comparisons in tests are exact.
struct RandomInstanceParams {
    double x_span = 20.0;        // coordinates on a 0.5 grid in [0, x_span]
    long long w_min = 0;
    long long w_max = 9;         // integer weights
    double v_max = 4.0;          // speeds on a 0.5 grid in (0, v_max]
    double p_zero_velocity = 0.2;
    double p_duplicate = 0.1;    // chance a PoI repeats the previous coordinate
    double period = 2.0;
};

ProblemInstance gen_random(int n, int m, std::uint64_t seed,
                           const RandomInstanceParams& params = {});

/// Instance file format (JSON, UTF-8, field order irrelevant, unknown
/// fields rejected):
///   {"version": 1, "period": 2.0,
///    "pois": [{"x": 0.0, "w": 1.0}, ...],
///    "sensors": [2.0, 0.0, ...]}
/// PoIs may arrive unsorted; they are stably sorted by x, so ties keep
/// their file order. parse(serialize(inst)) reproduces inst exactly.
ProblemInstance parse_instance(std::string_view text);
std::string serialize_instance(const ProblemInstance& inst);

ProblemInstance load_instance_file(const std::string& path);
void write_instance_file(const ProblemInstance& inst, const std::string& path);

}  // namespace mwscp
