#include "report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hopcum::cli {

using json = nlohmann::ordered_json;

namespace {

json series_json(const CumulantSeries& s) {
    json orders = json::array();
    for (const LinearMap& k : s.kappa) {
        json row = json::array();
        for (const Scalar& x : k.dense_row(0)) {
            row.push_back(x.str());
        }
        orders.push_back(row);
    }
    return orders;
}

}  // namespace

std::string report_summary(const CumulantReport& report) {
    if (report.graded) {
        return report.verified() ? "graded: morphism check passed" : "graded: morphism check FAILED";
    }
    return report.verified() ? "ungraded: recursive, inversion and ainfty cumulants agree through order " +
                                   std::to_string(report.max_order)
                             : "ungraded: cumulant routes DISAGREE";
}

std::string report_to_json(const CumulantReport& report, const std::string& space_name) {
    json out = json::object();
    out["space"] = space_name;
    out["max_order"] = report.max_order;
    out["graded"] = report.graded;
    json methods = json::object();
    if (report.recursive) {
        methods["recursive"] = series_json(*report.recursive);
    }
    if (report.inversion) {
        methods["inversion"] = series_json(*report.inversion);
    }
    methods["ainfty"] = series_json(report.ainfty);
    out["methods"] = methods;
    json verdicts = json::array();
    for (const OrderVerdict& v : report.verdicts) {
        verdicts.push_back({{"order", v.order},
                            {"recursive_inversion", v.recursive_inversion},
                            {"recursive_ainfty", v.recursive_ainfty},
                            {"inversion_ainfty", v.inversion_ainfty}});
    }
    out["verdicts"] = verdicts;
    out["triple"] = {{"source_squares_to_zero", report.triple.source_squares_to_zero},
                     {"target_squares_to_zero", report.triple.target_squares_to_zero},
                     {"target_is_zero", report.triple.target_is_zero},
                     {"source_is_zero", report.triple.source_is_zero},
                     {"morphism", report.triple.morphism}};
    out["verified"] = report.verified();
    out["summary"] = report_summary(report);
    return out.dump(2) + "\n";
}

ParsedReport parse_report(const std::string& text) {
    ParsedReport r;
    try {
        const json doc = json::parse(text);
        r.space = doc.at("space").get<std::string>();
        r.max_order = doc.at("max_order").get<std::size_t>();
        r.graded = doc.at("graded").get<bool>();
        for (const auto& [name, orders] : doc.at("methods").items()) {
            auto& rows = r.methods[name];
            for (const auto& row : orders) {
                rows.push_back(row.get<std::vector<std::string>>());
            }
        }
        for (const auto& v : doc.at("verdicts")) {
            r.verdicts.push_back({v.at("order").get<std::size_t>(), v.at("recursive_inversion").get<bool>(),
                                  v.at("recursive_ainfty").get<bool>(), v.at("inversion_ainfty").get<bool>()});
        }
        const json& t = doc.at("triple");
        r.triple.source_squares_to_zero = t.at("source_squares_to_zero").get<bool>();
        r.triple.target_squares_to_zero = t.at("target_squares_to_zero").get<bool>();
        r.triple.target_is_zero = t.at("target_is_zero").get<bool>();
        r.triple.source_is_zero = t.at("source_is_zero").get<bool>();
        r.triple.morphism = t.at("morphism").get<bool>();
        r.verified = doc.at("verified").get<bool>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return r;
}

std::vector<OrderVerdict> recompute_verdicts(const ParsedReport& report) {
    std::vector<OrderVerdict> out;
    const auto rec = report.methods.find("recursive");
    const auto inv = report.methods.find("inversion");
    const auto ainf = report.methods.find("ainfty");
    if (rec == report.methods.end() || inv == report.methods.end() || ainf == report.methods.end()) {
        return out;
    }
    // Canonical rational strings compare equal iff the rationals are equal.
    for (std::size_t n = 1; n <= report.max_order; ++n) {
        const auto& r = rec->second.at(n - 1);
        const auto& i = inv->second.at(n - 1);
        const auto& e = ainf->second.at(n - 1);
        out.push_back({n, r == i, r == e, i == e});
    }
    return out;
}

}  // namespace hopcum::cli
