#include "schatten/report.hpp"

#include <cmath>
#include <cstdio>

namespace schatten::cli {

uint64_t fnv1a(std::string_view data) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

json to_json(const CMatrix& m) {
    json data = json::array();
    for (const cplx& z : m.entries()) {
        data.push_back(z.real());
        data.push_back(z.imag());
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix cmatrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const json& data = j.at("data");
    if (int(data.size()) != 2 * rows * cols)
        throw IoFailure("matrix json: data length mismatch");
    std::vector<cplx> entries(std::size_t(rows) * cols);
    for (std::size_t t = 0; t < entries.size(); ++t)
        entries[t] = cplx{data[2 * t].get<double>(), data[2 * t + 1].get<double>()};
    return CMatrix(rows, cols, std::move(entries));
}

json to_json(const WeightedFamily& f) {
    json members = json::array();
    for (const CMatrix& m : f.members()) members.push_back(to_json(m));
    return json{{"members", std::move(members)},
                {"primary_weights", f.primary_weights()},
                {"secondary_weights", f.secondary_weights()}};
}

json params_to_json(const std::map<std::string, double>& params) {
    json j = json::object();
    for (const auto& [k, v] : params) {
        if (std::isinf(v))
            j[k] = v > 0 ? "inf" : "-inf";
        else
            j[k] = v;
    }
    return j;
}

std::map<std::string, double> params_from_json(const json& j) {
    std::map<std::string, double> params;
    for (const auto& [k, v] : j.items()) {
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            params[k] = (s == "-inf") ? -INFINITY : INFINITY;
        } else {
            params[k] = v.get<double>();
        }
    }
    return params;
}

json record_to_json(const verify::InequalityReport& rep, double wall_ms,
                    uint64_t digest, const json* instance) {
    json j{{"checker", rep.checker_id},
           {"seed", rep.seed},
           {"params", params_to_json(rep.params)},
           {"lhs", rep.lhs},
           {"rhs", rep.rhs},
           {"gap", rep.gap},
           {"relative_margin", rep.relative_margin},
           {"pass", rep.pass},
           {"notes", rep.notes},
           {"digest", hex64(digest)},
           {"wall_ms", wall_ms}};
    if (instance != nullptr) j["instance"] = *instance;
    return j;
}

verify::InequalityReport report_from_record(const json& record) {
    verify::InequalityReport rep;
    rep.checker_id = record.at("checker").get<std::string>();
    rep.seed = record.at("seed").get<uint64_t>();
    rep.params = params_from_json(record.at("params"));
    rep.lhs = record.at("lhs").get<double>();
    rep.rhs = record.at("rhs").get<double>();
    rep.gap = record.at("gap").get<double>();
    rep.relative_margin = record.at("relative_margin").get<double>();
    rep.pass = record.at("pass").get<bool>();
    rep.notes = record.at("notes").get<std::string>();
    return rep;
}

}  // namespace schatten::cli
