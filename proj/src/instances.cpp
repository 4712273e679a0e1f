#include "mwscp/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "mwscp/rng.hpp"

namespace mwscp {

void ThreePartitionSpec::validate() const {
    if (m < 1) throw ValidationError("three-partition: m must be >= 1");
    if (bound < 1) throw ValidationError("three-partition: B must be >= 1");
    if (static_cast<int>(sizes.size()) != 3 * m)
        throw ValidationError("three-partition: expected exactly 3*m sizes, got " +
                              std::to_string(sizes.size()));
    long long sum = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const long long s = sizes[i];
        // strict bounds: 4s > B and 2s < B avoids rational arithmetic
        if (s < 1 || !(4 * s > bound) || !(2 * s < bound))
            throw ValidationError("three-partition: sizes[" + std::to_string(i) +
                                  "] = " + std::to_string(s) +
                                  " violates B/4 < s < B/2");
        sum += s;
    }
    if (sum != static_cast<long long>(m) * bound)
        throw ValidationError("three-partition: sizes sum to " + std::to_string(sum) +
                              ", expected m*B = " + std::to_string(m * bound));
}

ProblemInstance gen_three_partition(const ThreePartitionSpec& spec, double period) {
    spec.validate();
    if (!std::isfinite(period) || period <= 0.0)
        throw ValidationError("three-partition: period must be positive");

    const long long b = spec.bound;
    const long long per_block = 2 * b + 2;
    ProblemInstance inst;
    inst.period = period;
    inst.poi_x.reserve(static_cast<std::size_t>(per_block) * spec.m);
    for (long long block = 0; block < spec.m; ++block) {
        // Block k starts at 2*B*k: span B plus an inter-block gap of B.
        const double offset = static_cast<double>(2 * b * block);
        for (long long t = 0; t < per_block; ++t)
            inst.poi_x.push_back(offset + static_cast<double>(t * b) /
                                              static_cast<double>(2 * b + 1));
    }
    inst.poi_w.assign(inst.poi_x.size(), 1.0);
    inst.velocities.reserve(spec.sizes.size());
    for (long long s : spec.sizes)
        inst.velocities.push_back(2.0 * static_cast<double>(s) / period);
    validate_instance(inst);
    return inst;
}

ProblemInstance gen_random(int n, int m, std::uint64_t seed,
                           const RandomInstanceParams& params) {
    if (n < 1 || m < 1) throw ValidationError("gen_random: n and m must be >= 1");
    if (!(params.x_span > 0.0) || !std::isfinite(params.x_span))
        throw ValidationError("gen_random: x_span must be positive");
    if (params.w_min < 0 || params.w_max < params.w_min)
        throw ValidationError("gen_random: need 0 <= w_min <= w_max");
    if (!(params.v_max > 0.0) || !std::isfinite(params.v_max))
        throw ValidationError("gen_random: v_max must be positive");
    if (params.p_zero_velocity < 0.0 || params.p_zero_velocity > 1.0 ||
        params.p_duplicate < 0.0 || params.p_duplicate > 1.0)
        throw ValidationError("gen_random: probabilities must be in [0,1]");
    if (!(params.period > 0.0) || !std::isfinite(params.period))
        throw ValidationError("gen_random: period must be positive");

    SplitMix64 rng(seed);
    const std::int64_t x_units = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(params.x_span * 2.0));
    const std::int64_t v_units = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(params.v_max * 2.0));

    std::vector<std::pair<double, double>> pois(n);  // (x, w), sorted later
    double prev_x = 0.0;
    for (int j = 0; j < n; ++j) {
        double x;
        if (j > 0 && rng.next_bool(params.p_duplicate)) {
            x = prev_x;
        } else {
            x = 0.5 * static_cast<double>(rng.next_int(0, x_units));
        }
        prev_x = x;
        const double w = static_cast<double>(rng.next_int(params.w_min, params.w_max));
        pois[j] = {x, w};
    }
    std::stable_sort(pois.begin(), pois.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    ProblemInstance inst;
    inst.period = params.period;
    for (const auto& [x, w] : pois) {
        inst.poi_x.push_back(x);
        inst.poi_w.push_back(w);
    }
    for (int i = 0; i < m; ++i) {
        if (rng.next_bool(params.p_zero_velocity))
            inst.velocities.push_back(0.0);
        else
            inst.velocities.push_back(0.5 * static_cast<double>(rng.next_int(1, v_units)));
    }
    validate_instance(inst);
    return inst;
}

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& where) {
    if (!j.is_number())
        throw ValidationError(where + ": must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ValidationError(where + ": must be finite");
    return v;
}

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> known,
                           const std::string& where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || item.key() == k;
        if (!ok)
            throw ValidationError(where + ": unknown field \"" + item.key() + "\"");
    }
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("instance: top level must be an object");
    reject_unknown_fields(doc, {"version", "period", "pois", "sensors"}, "instance");
    for (const char* field : {"version", "period", "pois", "sensors"})
        if (!doc.contains(field))
            throw ValidationError(std::string("instance: missing field \"") + field +
                                  "\"");
    if (!doc["version"].is_number_integer() || doc["version"].get<long long>() != 1)
        throw ValidationError("version: expected 1");

    ProblemInstance inst;
    inst.period = require_number(doc["period"], "period");
    if (inst.period <= 0.0) throw ValidationError("period: must be > 0");

    const json& pois = doc["pois"];
    if (!pois.is_array() || pois.empty())
        throw ValidationError("pois: must be a non-empty array");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(pois.size());
    for (std::size_t j = 0; j < pois.size(); ++j) {
        const std::string where = "pois[" + std::to_string(j) + "]";
        const json& p = pois[j];
        if (!p.is_object()) throw ValidationError(where + ": must be an object");
        reject_unknown_fields(p, {"x", "w"}, where);
        if (!p.contains("x") || !p.contains("w"))
            throw ValidationError(where + ": needs fields x and w");
        const double x = require_number(p["x"], where + ".x");
        const double w = require_number(p["w"], where + ".w");
        if (w < 0.0) throw ValidationError(where + ".w: negative weight");
        pts.emplace_back(x, w);
    }
    // Stable sort: PoIs sharing a coordinate keep their file order.
    std::stable_sort(pts.begin(), pts.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [x, w] : pts) {
        inst.poi_x.push_back(x);
        inst.poi_w.push_back(w);
    }

    const json& sensors = doc["sensors"];
    if (!sensors.is_array() || sensors.empty())
        throw ValidationError("sensors: must be a non-empty array");
    for (std::size_t i = 0; i < sensors.size(); ++i) {
        const std::string where = "sensors[" + std::to_string(i) + "]";
        const double v = require_number(sensors[i], where);
        if (v < 0.0) throw ValidationError(where + ": negative velocity");
        inst.velocities.push_back(v);
    }

    validate_instance(inst);
    return inst;
}

std::string serialize_instance(const ProblemInstance& inst) {
    validate_instance(inst);
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["period"] = inst.period;
    doc["pois"] = nlohmann::ordered_json::array();
    for (int j = 0; j < inst.num_pois(); ++j)
        doc["pois"].push_back({{"x", inst.poi_x[j]}, {"w", inst.poi_w[j]}});
    doc["sensors"] = inst.velocities;
    return doc.dump(2) + "\n";
}

ProblemInstance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const ProblemInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write instance file: " + path);
    out << serialize_instance(inst);
}

}  // namespace mwscp
