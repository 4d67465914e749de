#ifndef HOPCUM_TOOLS_REPORT_HPP
#define HOPCUM_TOOLS_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <hopcum/probability.hpp>

namespace hopcum::cli {

/// One-line human verdict, e.g. "graded: morphism check passed".
std::string report_summary(const CumulantReport& report);

/// Machine-readable verification report. Every cumulant is written as the
/// full 1 × dim(V)^n matrix in lexicographic word order.
std::string report_to_json(const CumulantReport& report, const std::string& space_name);

/// A verification report read back from JSON.
struct ParsedReport {
    std::string space;
    std::size_t max_order = 0;
    bool graded = false;
    /// method name -> per-order rows of rational strings
    std::map<std::string, std::vector<std::vector<std::string>>> methods;
    std::vector<OrderVerdict> verdicts;
    TripleChecks triple;
    bool verified = false;
};

/// Throws std::invalid_argument on malformed reports.
ParsedReport parse_report(const std::string& text);

/// Verdicts recomputed from the stored series of a parsed report.
std::vector<OrderVerdict> recompute_verdicts(const ParsedReport& report);

}  // namespace hopcum::cli

#endif  // HOPCUM_TOOLS_REPORT_HPP
