#include "mwscp/report.hpp"

#include <openssl/evp.h>

#include <json.hpp>

#include "mwscp/instances.hpp"

namespace mwscp {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("sha256 failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string instance_digest(const ProblemInstance& inst) {
    return "sha256:" + sha256_hex(serialize_instance(inst));
}

std::vector<int> deployment_to_external(const Deployment& d) {
    std::vector<int> out(d.start.size());
    for (std::size_t i = 0; i < d.start.size(); ++i)
        out[i] = d.start[i] == kIdle ? 0 : d.start[i] + 1;
    return out;
}

Deployment deployment_from_external(const std::vector<int>& entries, int num_pois) {
    Deployment d;
    d.start.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const int e = entries[i];
        if (e < 0 || e > num_pois)
            throw ValidationError("deployment[" + std::to_string(i) +
                                  "]: expected 0 (idle) or a start in 1.." +
                                  std::to_string(num_pois));
        d.start[i] = e == 0 ? kIdle : e - 1;
    }
    return d;
}

std::string report_to_json(const SolveReport& report) {
    nlohmann::ordered_json doc;
    doc["algorithm"] = report.algorithm;
    doc["instance_digest"] = report.instance_digest;
    doc["covered_weight"] = report.covered_weight;
    doc["full_cover"] = report.full_cover;
    doc["deployment"] = deployment_to_external(report.deployment);
    if (report.alpha) doc["alpha"] = *report.alpha;
    if (report.seed) doc["seed"] = *report.seed;
    if (report.rng) doc["rng"] = *report.rng;
    if (report.lp_objective) doc["lp_objective"] = *report.lp_objective;
    if (report.oracle_weight) doc["oracle_weight"] = *report.oracle_weight;
    if (report.ratio_vs_oracle) doc["ratio_vs_oracle"] = *report.ratio_vs_oracle;
    if (report.trials) doc["trials"] = *report.trials;
    if (report.mean_weight) doc["mean_weight"] = *report.mean_weight;
    if (report.stddev_weight) doc["stddev_weight"] = *report.stddev_weight;
    doc["duration_ms"] = report.duration_ms;
    return doc.dump(2) + "\n";
}

}  // namespace mwscp
