#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpt/bitset.hpp"
#include "lpt/oracle.hpp"
#include "lpt/version.hpp"

namespace lpt {

// Ordered key/value report. The text rendering is the replayable record: same
// inputs must give byte-identical output.
class Report {
public:
    explicit Report(const std::string& command) {
        add("lpt-report", "1");
        add("command", command);
        add("version", kVersion);
    }

    void add(const std::string& key, const std::string& value) { kv_.emplace_back(key, value); }
    void add(const std::string& key, const char* value) { kv_.emplace_back(key, value); }
    void add(const std::string& key, long long value) { kv_.emplace_back(key, std::to_string(value)); }
    void add(const std::string& key, int value) { kv_.emplace_back(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { kv_.emplace_back(key, value ? "true" : "false"); }
    void add(const std::string& key, const VertexSet& s) { kv_.emplace_back(key, s.to_string()); }

    void add_certificate(const TransversalCertificate& cert) {
        add("certificate", cert.transversal);
        add("certificate-size", cert.transversal.size());
        if (cert.bound_claimed) add("bound", *cert.bound_claimed);
        else add("bound", "none");
        add("method", method_name(cert.method));
        add("verified", cert.verified);
        if (cert.assumed_input) add("assumed-input", true);
    }

    std::string text() const {
        std::string out;
        for (const auto& [k, v] : kv_) out += k + ": " + v + "\n";
        return out;
    }

    nlohmann::json json() const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : kv_) j[k] = v;
        return j;
    }

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

} // namespace lpt
