#include <cstdio>

#include <json.hpp>

#include "ellip/audit.hpp"

namespace ellip::audit {

using nlohmann::json;

namespace {

json opt(const std::optional<real>& v) { return v ? json(*v) : json(nullptr); }

std::optional<real> opt_real(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<real>();
}

json result_json(const AuditResult& r) {
    json vs = json::array();
    for (const auto& v : r.variants)
        vs.push_back({{"label", v.label},
                      {"flags", v.flags},
                      {"max_rel_residual", opt(v.max_rel_residual)},
                      {"median_rel_residual", opt(v.median_rel_residual)},
                      {"n_valid", v.n_valid}});
    json c = r.fitted_constant ? json{{"re", r.fitted_constant->real()}, {"im", r.fitted_constant->imag()}}
                               : json(nullptr);
    return {{"id", r.id},
            {"anchor", r.anchor},
            {"expressions", r.expressions},
            {"status", to_string(r.status)},
            {"variant", r.variant},
            {"max_rel_residual", opt(r.max_rel_residual)},
            {"median_rel_residual", opt(r.median_rel_residual)},
            {"fitted_constant", c},
            {"constant_dispersion", opt(r.constant_dispersion)},
            {"tolerance", r.tolerance},
            {"n_samples", r.n_samples},
            {"seed", r.seed},
            {"variants", vs}};
}

AuditResult result_from(const json& j) {
    AuditResult r;
    r.id = j.at("id").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    r.expressions = j.at("expressions").get<std::vector<std::string>>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.variant = j.at("variant").get<std::string>();
    r.max_rel_residual = opt_real(j, "max_rel_residual");
    r.median_rel_residual = opt_real(j, "median_rel_residual");
    if (j.contains("fitted_constant") && !j.at("fitted_constant").is_null())
        r.fitted_constant = cplx{j["fitted_constant"].at("re").get<real>(), j["fitted_constant"].at("im").get<real>()};
    r.constant_dispersion = opt_real(j, "constant_dispersion");
    r.tolerance = j.at("tolerance").get<real>();
    r.n_samples = j.at("n_samples").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& v : j.at("variants")) {
        VariantStats s;
        s.label = v.at("label").get<std::string>();
        s.flags = v.at("flags").get<std::vector<std::string>>();
        s.max_rel_residual = opt_real(v, "max_rel_residual");
        s.median_rel_residual = opt_real(v, "median_rel_residual");
        s.n_valid = v.at("n_valid").get<int>();
        r.variants.push_back(std::move(s));
    }
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(const std::optional<real>& v) {
    if (!v) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    return buf;
}

}  // namespace

std::string to_json(const ReportMeta& meta, const std::vector<AuditResult>& results) {
    json rs = json::array();
    for (const auto& r : results) rs.push_back(result_json(r));
    json doc = {{"schema", "ellip-audit/1"},
                {"seed", meta.seed},
                {"n_samples", meta.n_samples},
                {"eps", meta.eps},
                {"orders", meta.orders},
                {"results", rs}};
    return doc.dump(2) + "\n";
}

std::vector<AuditResult> results_from_json(const std::string& text, ReportMeta* meta) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::io, std::string("audit report: ") + e.what());
    }
    try {
        if (meta) {
            meta->seed = doc.at("seed").get<std::uint64_t>();
            meta->n_samples = doc.at("n_samples").get<int>();
            meta->eps = doc.at("eps").get<real>();
            meta->orders = doc.at("orders").get<std::vector<int>>();
        }
        std::vector<AuditResult> out;
        for (const auto& r : doc.at("results")) out.push_back(result_from(r));
        return out;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::io, std::string("audit report: ") + e.what());
    }
}

std::string to_csv(const std::vector<AuditResult>& results) {
    std::string out =
        "id,anchor,variant,max_rel_residual,median_rel_residual,fitted_constant_re,fitted_constant_im,status,"
        "n_samples,seed\n";
    for (const auto& r : results) {
        std::optional<real> cre, cim;
        if (r.fitted_constant) {
            cre = r.fitted_constant->real();
            cim = r.fitted_constant->imag();
        }
        out += csv_field(r.id) + ',' + csv_field(r.anchor) + ',' + csv_field(r.variant) + ',' +
               num(r.max_rel_residual) + ',' + num(r.median_rel_residual) + ',' + num(cre) + ',' + num(cim) + ',' +
               to_string(r.status) + ',' + std::to_string(r.n_samples) + ',' + std::to_string(r.seed) + '\n';
    }
    return out;
}

}  // namespace ellip::audit
