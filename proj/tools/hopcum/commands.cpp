#include "commands.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <hopcum/probability.hpp>
#include <hopcum/spaces.hpp>

#include "report.hpp"
#include "space_document.hpp"

namespace hopcum::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NamedSpace load_input(const Input& input) {
    if (input.file.empty() == input.recipe.empty()) {
        throw UsageError("give exactly one of a space document file or --space <recipe>");
    }
    if (!input.recipe.empty()) {
        try {
            return space_from_recipe(input.recipe);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return load_space_document(input.file);
}

void require_max_order(std::size_t n) {
    if (n < 1) {
        throw UsageError("--max-order must be >= 1");
    }
}

std::string row(const std::vector<Scalar>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? " " : "") + xs[i].str();
    }
    return s + "]";
}

std::string list(const std::vector<Scalar>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? ", " : "") + xs[i].str();
    }
    return s + "]";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Validation failure: list every violation on err.
bool report_invalid(const NamedSpace& ns, std::ostream& err) {
    const ValidationReport r = validate_space(ns.space);
    if (r.valid()) {
        return false;
    }
    err << "invalid space " << ns.name << ":\n" << r.summary() << "\n";
    return true;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DocumentError& e) {
        err << "parse error at " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int cmd_validate(const Input& input, Format format, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const NamedSpace ns = load_input(input);
        const ValidationReport r = validate_space(ns.space);
        if (format == Format::json) {
            json doc = json::object();
            doc["space"] = ns.name;
            doc["valid"] = r.valid();
            json items = json::array();
            for (const Violation& v : r.violations) {
                items.push_back(v.message);
            }
            doc["violations"] = items;
            out << doc.dump(2) << "\n";
        } else if (r.valid()) {
            out << ns.name << ": valid\n";
        } else {
            out << ns.name << ": invalid (" << r.violations.size() << " violation"
                << (r.violations.size() == 1 ? "" : "s") << ")\n";
            for (const Violation& v : r.violations) {
                out << "  " << v.message << "\n";
            }
        }
        return r.valid() ? kExitOk : kExitFailure;
    });
}

int cmd_cumulants(const CumulantsOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_max_order(options.max_order);
        const std::string& method = options.method;
        if (method != "recursive" && method != "inversion" && method != "ainfty" && method != "all") {
            throw UsageError("unknown --method '" + method + "'");
        }
        const NamedSpace ns = load_input(options.input);
        const GradedSpace& v = ns.space.space();

        std::vector<std::string> names = options.vars;
        if (names.empty()) {
            if (ns.variables.empty()) {
                throw UsageError("no --vars given and the document defines no variables");
            }
            names.push_back(ns.variables.front().first);
        }
        std::vector<Vector> values;
        for (const std::string& name : names) {
            std::optional<Vector> found;
            for (const auto& [key, value] : ns.variables) {
                if (key == name) {
                    found = value;
                    break;
                }
            }
            if (!found) {
                if (const auto idx = v.index_of(name)) {
                    found = Vector(v.dim());
                    (*found)[*idx] = Scalar(1);
                }
            }
            if (!found) {
                throw UsageError("unknown variable '" + name + "'");
            }
            values.push_back(std::move(*found));
        }

        if (report_invalid(ns, err)) {
            return kExitFailure;
        }

        const bool graded = ns.space.is_graded();
        if (graded && (method == "recursive" || method == "inversion")) {
            throw UsageError("the " + method + " route is defined for ungraded spaces only; use --method ainfty");
        }

        std::vector<CumulantSeries> series;
        if (!graded && (method == "recursive" || method == "all")) {
            series.push_back(cumulants_recursive(ns.space, options.max_order));
        }
        if (!graded && (method == "inversion" || method == "all")) {
            series.push_back(cumulants_inversion(ns.space, options.max_order));
        }
        if (method == "ainfty" || method == "all") {
            series.push_back(ainfty_cumulants(ns.space, options.max_order).series);
        }

        // Order n evaluates κ_n on the first n variables, cycling the list.
        std::vector<std::vector<Scalar>> evaluated;
        for (const CumulantSeries& s : series) {
            std::vector<Scalar> vals;
            for (std::size_t n = 1; n <= options.max_order; ++n) {
                std::vector<Vector> xs;
                for (std::size_t i = 0; i < n; ++i) {
                    xs.push_back(values[i % values.size()]);
                }
                vals.push_back(s.evaluate(xs));
            }
            evaluated.push_back(std::move(vals));
        }

        const bool compare = series.size() == 3;
        std::vector<OrderVerdict> verdicts;
        bool all_equal = true;
        if (compare) {
            for (std::size_t n = 1; n <= options.max_order; ++n) {
                const OrderVerdict ov{n, series[0].order(n) == series[1].order(n),
                                      series[0].order(n) == series[2].order(n),
                                      series[1].order(n) == series[2].order(n)};
                all_equal = all_equal && ov.all();
                verdicts.push_back(ov);
            }
        }

        if (options.format == Format::json) {
            json doc = json::object();
            doc["space"] = ns.name;
            doc["max_order"] = options.max_order;
            doc["variables"] = names;
            json vals = json::object();
            for (std::size_t i = 0; i < series.size(); ++i) {
                json arr = json::array();
                for (const Scalar& x : evaluated[i]) {
                    arr.push_back(x.str());
                }
                vals[method_name(series[i].method)] = arr;
            }
            doc["cumulants"] = vals;
            if (compare) {
                json vs = json::array();
                for (const OrderVerdict& ov : verdicts) {
                    vs.push_back({{"order", ov.order},
                                  {"recursive_inversion", ov.recursive_inversion},
                                  {"recursive_ainfty", ov.recursive_ainfty},
                                  {"inversion_ainfty", ov.inversion_ainfty}});
                }
                doc["verdicts"] = vs;
                doc["all_equal"] = all_equal;
            }
            out << doc.dump(2) << "\n";
        } else {
            out << "space: " << ns.name << "\n";
            out << "variables:";
            for (const std::string& n : names) {
                out << " " << n;
            }
            out << "\n";
            if (graded && method == "all") {
                out << "graded space: only the ainfty route applies\n";
            }
            for (std::size_t i = 0; i < series.size(); ++i) {
                out << method_name(series[i].method) << ": " << list(evaluated[i]) << "\n";
            }
            if (compare) {
                for (const OrderVerdict& ov : verdicts) {
                    out << "order " << ov.order << ": recursive=inversion " << yes_no(ov.recursive_inversion)
                        << ", recursive=ainfty " << yes_no(ov.recursive_ainfty) << ", inversion=ainfty "
                        << yes_no(ov.inversion_ainfty) << "\n";
                }
                out << "verdict: " << (all_equal ? "all-equal" : "MISMATCH") << "\n";
            }
        }
        return all_equal ? kExitOk : kExitFailure;
    });
}

int cmd_verify(const Input& input, std::size_t max_order, Format format, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_max_order(max_order);
        const NamedSpace ns = load_input(input);
        if (report_invalid(ns, err)) {
            return kExitFailure;
        }
        const CumulantReport report = verify_main_proposition(ns.space, max_order);
        if (format == Format::json) {
            out << report_to_json(report, ns.name);
        } else {
            out << "space: " << ns.name << "\n";
            out << "max order: " << max_order << "\n";
            if (!report.graded) {
                for (const OrderVerdict& ov : report.verdicts) {
                    out << "order " << ov.order << ": " << (ov.all() ? "all three routes agree" : "MISMATCH")
                        << "\n";
                }
            }
            out << "(D^a)^2 = 0: " << yes_no(report.triple.source_squares_to_zero) << "\n";
            out << "D'^a' = 0: " << yes_no(report.triple.target_is_zero) << "\n";
            out << "F D^a = D'^a' F: " << yes_no(report.triple.morphism) << "\n";
            out << report_summary(report) << "\n";
        }
        return report.verified() ? kExitOk : kExitFailure;
    });
}

int cmd_show_morphism(const Input& input, std::size_t max_order, Format format, std::ostream& out,
                      std::ostream& err) {
    return guarded(err, [&] {
        require_max_order(max_order);
        const NamedSpace ns = load_input(input);
        if (report_invalid(ns, err)) {
            return kExitFailure;
        }
        const AInfinityCumulants t = ainfty_cumulants(ns.space, max_order);
        const std::size_t dim = ns.space.space().dim();
        const MultilinearSeries structure = extract_components(t.source_structure);

        if (format == Format::json) {
            json doc = json::object();
            doc["space"] = ns.name;
            doc["max_order"] = max_order;
            json comps = json::array();
            for (const LinearMap& e : t.series.kappa) {
                json r = json::array();
                for (const Scalar& x : e.dense_row(0)) {
                    r.push_back(x.str());
                }
                comps.push_back(r);
            }
            doc["components"] = comps;
            json d = json::object();
            for (std::size_t n = 1; n <= max_order; ++n) {
                const LinearMap& c = structure.component(n);
                if (c.is_zero()) {
                    continue;
                }
                json rows = json::array();
                for (std::size_t r = 0; r < c.rows(); ++r) {
                    json rr = json::array();
                    for (const Scalar& x : c.dense_row(r)) {
                        rr.push_back(x.str());
                    }
                    rows.push_back(rr);
                }
                d[std::to_string(n)] = rows;
            }
            doc["source_structure"] = d;
            doc["source_structure_is_zero"] = t.source_structure.is_zero();
            out << doc.dump(2) << "\n";
            return kExitOk;
        }

        out << "space: " << ns.name << "\n";
        for (std::size_t n = 1; n <= max_order; ++n) {
            const LinearMap& e = t.series.order(n);
            out << "e_" << n << " (1 x " << e.cols() << "):\n  " << row(e.dense_row(0)) << "\n";
        }
        if (t.source_structure.is_zero()) {
            out << "D^a: identically zero\n";
        } else {
            for (std::size_t n = 1; n <= max_order; ++n) {
                const LinearMap& c = structure.component(n);
                if (c.is_zero()) {
                    continue;
                }
                out << "D^a component " << n << " (" << dim << " x " << c.cols() << "):\n";
                for (std::size_t r = 0; r < c.rows(); ++r) {
                    out << "  " << row(c.dense_row(r)) << "\n";
                }
            }
        }
        return kExitOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact A-infinity transport and Boolean cumulants"};
    app.require_subcommand(1);

    Input input;
    std::size_t max_order = 4;
    std::string format_name;
    CumulantsOptions cum;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", input.file, "Space document (JSON)");
        sub->add_option("--space", input.recipe, "Built-in recipe: finite:w1,w2,...  matrix:2|3  two-term");
    };
    CLI::App* validate = app.add_subcommand("validate", "Check the space axioms and list every violation");
    add_input(validate);
    validate->add_option("--format", format_name, "Output format (text|json)")->check(CLI::IsMember({"text", "json"}));

    CLI::App* cumulants = app.add_subcommand("cumulants", "Evaluate cumulants on named variables");
    add_input(cumulants);
    cumulants->add_option("--max-order", max_order, "Highest cumulant order")->capture_default_str();
    cumulants->add_option("--method", cum.method, "recursive | inversion | ainfty | all")
        ->check(CLI::IsMember({"recursive", "inversion", "ainfty", "all"}))
        ->capture_default_str();
    cumulants->add_option("--vars", cum.vars, "Variables X1,X2,... (cycled to fill each order)")->delimiter(',');
    cumulants->add_option("--format", format_name, "Output format (text|json)")->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "Compare all cumulant routes and check the A-infinity triple");
    add_input(verify);
    verify->add_option("--max-order", max_order, "Truncation order")->capture_default_str();
    verify->add_option("--format", format_name, "Output format (json|text), default json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* show = app.add_subcommand("show-morphism", "Print the transported morphism components e_n");
    add_input(show);
    show->add_option("--max-order", max_order, "Truncation order")->capture_default_str();
    show->add_option("--format", format_name, "Output format (text|json)")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto format_of = [&](Format fallback) {
        if (format_name.empty()) {
            return fallback;
        }
        return format_name == "json" ? Format::json : Format::text;
    };

    if (validate->parsed()) {
        return cmd_validate(input, format_of(Format::text), out, err);
    }
    if (cumulants->parsed()) {
        cum.input = input;
        cum.max_order = max_order;
        cum.format = format_of(Format::text);
        return cmd_cumulants(cum, out, err);
    }
    if (verify->parsed()) {
        return cmd_verify(input, max_order, format_of(Format::json), out, err);
    }
    if (show->parsed()) {
        return cmd_show_morphism(input, max_order, format_of(Format::text), out, err);
    }
    return kExitUsage;
}

}  // namespace hopcum::cli
