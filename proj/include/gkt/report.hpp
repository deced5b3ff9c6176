#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "gkt/intmatrix.hpp"

namespace gkt {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "0.1.0";

inline json json_int(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

inline json json_group(const FinAbGroup& g) {
    json j;
    j["rank"] = g.rank;
    json f = json::array();
    for (auto& d : g.torsion) f.push_back(json_int(d));
    j["invariant_factors"] = f;
    return j;
}

inline json json_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// Stable report envelope; identical configs must serialize byte-identically,
// so no timestamps or timings belong here.
inline json report_envelope(const std::string& command, const json& config) {
    json j;
    j["tool"] = "gkt";
    j["version"] = tool_version;
    j["command"] = command;
    j["config"] = config;
    j["results"] = json::array();
    return j;
}

inline void finalize_summary(json& report) {
    int cases = 0, failures = 0;
    for (auto& r : report["results"]) {
        ++cases;
        if (r.contains("pass") && r["pass"].is_boolean() && !r["pass"].get<bool>()) ++failures;
    }
    report["summary"] = json{{"cases", cases}, {"failures", failures}, {"pass", failures == 0}};
}

inline std::string torsion_text(const FinAbGroup& g) {
    if (g.torsion.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) s += "+";
        s += "Z/" + g.torsion[i].get_str();
    }
    return s;
}

// Markdown rendering: the same data as the JSON report, as tables.
inline std::string render_markdown(const json& report) {
    std::ostringstream os;
    os << "# gkt " << report["command"].get<std::string>() << " report\n\n";
    os << "version: " << report["version"].get<std::string>() << "\n\n";
    const auto& results = report["results"];
    std::string cmd = report["command"].get<std::string>();
    if (cmd == "kgroups") {
        os << "| n | k | rank K0 | torsion | rank K1 | r | engines agree |\n";
        os << "|---|---|---------|---------|---------|---|---------------|\n";
        for (auto& r : results) {
            if (r.contains("skipped")) continue;
            std::string tor;
            for (auto& d : r["K0"]["invariant_factors"]) {
                if (!tor.empty()) tor += "+";
                tor += "Z/" + (d.is_string() ? d.get<std::string>() : std::to_string(d.get<long>()));
            }
            if (tor.empty()) tor = "-";
            os << "| " << r["n"] << " | " << r["k"] << " | " << r["K0"]["rank"] << " | " << tor
               << " | " << r["K1"]["rank"] << " | " << r["hopf_order_exponent"] << " | "
               << (r["engines_agree"].get<bool>() ? "yes" : "no") << " |\n";
        }
    } else {
        os << "| case | params | pass |\n|------|--------|------|\n";
        for (auto& r : results) {
            std::string name = r.contains("case") ? r["case"].get<std::string>() : cmd;
            os << "| " << name << " | " << (r.contains("params") ? r["params"].dump() : "{}")
               << " | " << ((r.contains("pass") && !r["pass"].get<bool>()) ? "FAIL" : "pass")
               << " |\n";
        }
    }
    if (report.contains("summary"))
        os << "\nsummary: " << (report["summary"]["pass"].get<bool>() ? "all pass" : "FAILURES")
           << " (" << report["summary"]["cases"].get<int>() << " cases, "
           << report["summary"]["failures"].get<int>() << " failures)\n";
    return os.str();
}

inline std::string render_csv(const json& report) {
    std::ostringstream os;
    std::string cmd = report["command"].get<std::string>();
    if (cmd == "kgroups") {
        os << "n,k,rank_k0,torsion,rank_k1,hopf_r,engines_agree\n";
        for (auto& r : report["results"]) {
            if (r.contains("skipped")) continue;
            std::string tor;
            for (auto& d : r["K0"]["invariant_factors"]) {
                if (!tor.empty()) tor += "+";
                tor += (d.is_string() ? d.get<std::string>() : std::to_string(d.get<long>()));
            }
            os << r["n"] << "," << r["k"] << "," << r["K0"]["rank"] << "," << tor << ","
               << r["K1"]["rank"] << "," << r["hopf_order_exponent"] << ","
               << (r["engines_agree"].get<bool>() ? 1 : 0) << "\n";
        }
    } else {
        os << "case,params,pass\n";
        for (auto& r : report["results"]) {
            std::string name = r.contains("case") ? r["case"].get<std::string>() : cmd;
            std::string params = r.contains("params") ? r["params"].dump() : "{}";
            for (auto& ch : params)
                if (ch == ',') ch = ';';
            os << name << "," << params << ","
               << ((r.contains("pass") && !r["pass"].get<bool>()) ? 0 : 1) << "\n";
        }
    }
    return os.str();
}

}  // namespace gkt
