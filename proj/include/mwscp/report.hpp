#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mwscp/core.hpp"

namespace mwscp {

/// Machine-readable outcome of one solver run. Serialized as JSON with a
/// fixed key order; duration_ms is emitted last and is the only field two
/// identical runs may disagree on.
struct SolveReport {
    std::string algorithm;
    std::string instance_digest;  // "sha256:..." of the canonical instance
    double covered_weight = 0.0;
    bool full_cover = false;
    Deployment deployment;

    std::optional<int> alpha;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> rng;
    std::optional<double> lp_objective;
    std::optional<double> oracle_weight;
    std::optional<double> ratio_vs_oracle;
    std::optional<int> trials;
    std::optional<double> mean_weight;
    std::optional<double> stddev_weight;

    double duration_ms = 0.0;
};

std::string report_to_json(const SolveReport& report);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Digest of the canonical serialized instance, prefixed "sha256:".
std::string instance_digest(const ProblemInstance& inst);

/// Deployment <-> JSON array: 0 = idle, otherwise 1-based start PoI index.
std::vector<int> deployment_to_external(const Deployment& d);
Deployment deployment_from_external(const std::vector<int>& entries, int num_pois);

}  // namespace mwscp
