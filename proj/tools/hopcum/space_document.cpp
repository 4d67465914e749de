#include "space_document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hopcum::cli {

using json = nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }

Scalar coefficient(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw DocumentError(path, e.what());
        }
    }
    if (j.is_number_integer()) {
        return Scalar(j.get<long>());
    }
    throw DocumentError(path, "expected a rational string \"p/q\" or an integer");
}

const json& require_array(const json& j, const std::string& path, std::size_t size) {
    if (!j.is_array()) {
        throw DocumentError(path, "expected an array");
    }
    if (j.size() != size) {
        throw DocumentError(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
    }
    return j;
}

Vector coefficient_vector(const json& j, const std::string& path, std::size_t dim) {
    require_array(j, path, dim);
    Vector v;
    v.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v.push_back(coefficient(j[i], child(path, i)));
    }
    return v;
}

json render(const Vector& v) {
    json out = json::array();
    for (const Scalar& x : v) {
        out.push_back(x.str());
    }
    return out;
}

}  // namespace

NamedSpace parse_space_document(std::string_view text, std::string name) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw DocumentError(line_column(text, e.byte), "JSON syntax error");
    }
    if (!doc.is_object()) {
        throw DocumentError("/", "document must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "basis" && key != "degrees" && key != "product" && key != "expectation" &&
            key != "differential" && key != "variables") {
            throw DocumentError("/" + key, "unknown key");
        }
    }
    for (const char* key : {"basis", "product", "expectation"}) {
        if (!doc.contains(key)) {
            throw DocumentError("/", std::string("missing required key \"") + key + "\"");
        }
    }

    const json& basis = doc["basis"];
    if (!basis.is_array() || basis.empty()) {
        throw DocumentError("/basis", "expected a nonempty array of names");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_string()) {
            throw DocumentError(child("/basis", i), "basis names must be strings");
        }
        labels.push_back(basis[i].get<std::string>());
    }
    const std::size_t dim = labels.size();

    std::vector<int> degrees(dim, 0);
    if (doc.contains("degrees")) {
        require_array(doc["degrees"], "/degrees", dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!doc["degrees"][i].is_number_integer()) {
                throw DocumentError(child("/degrees", i), "degrees must be integers");
            }
            degrees[i] = doc["degrees"][i].get<int>();
        }
    }

    std::optional<GradedSpace> space;
    try {
        space.emplace(labels, degrees);
    } catch (const std::invalid_argument& e) {
        throw DocumentError("/basis", e.what());
    }
    const GradedSpace& v = *space;

    LinearMap product({v, 2}, {v, 1}, 0);
    require_array(doc["product"], "/product", dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string row_path = child("/product", i);
        require_array(doc["product"][i], row_path, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const Vector img = coefficient_vector(doc["product"][i][j], child(row_path, j), dim);
            for (std::size_t r = 0; r < dim; ++r) {
                product.set(r, i * dim + j, img[r]);
            }
        }
    }

    LinearMap expectation({v, 1}, {GradedSpace::ground(), 1}, 0);
    const Vector ev = coefficient_vector(doc["expectation"], "/expectation", dim);
    for (std::size_t i = 0; i < dim; ++i) {
        expectation.set(0, i, ev[i]);
    }

    std::optional<LinearMap> differential;
    if (doc.contains("differential")) {
        LinearMap d({v, 1}, {v, 1}, 1);
        require_array(doc["differential"], "/differential", dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const Vector img = coefficient_vector(doc["differential"][i], child("/differential", i), dim);
            for (std::size_t r = 0; r < dim; ++r) {
                d.set(r, i, img[r]);
            }
        }
        differential = std::move(d);
    }

    std::vector<std::pair<std::string, Vector>> variables;
    if (doc.contains("variables")) {
        const json& vars = doc["variables"];
        if (!vars.is_object()) {
            throw DocumentError("/variables", "expected an object of named coefficient arrays");
        }
        for (const auto& [key, value] : vars.items()) {
            variables.emplace_back(key, coefficient_vector(value, child("/variables", key), dim));
        }
    }

    return NamedSpace{std::move(name), ProbabilitySpace(v, product, expectation, differential), std::move(variables)};
}

NamedSpace load_space_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DocumentError(path, "cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_space_document(buf.str(), path);
}

std::string write_space_document(const NamedSpace& named) {
    const ProbabilitySpace& p = named.space;
    const GradedSpace& v = p.space();
    const std::size_t dim = v.dim();
    json doc = json::object();
    doc["basis"] = v.labels();
    doc["degrees"] = v.degrees();
    json product = json::array();
    for (std::size_t i = 0; i < dim; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < dim; ++j) {
            Vector img(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                img[r] = p.product().at(r, i * dim + j);
            }
            row.push_back(render(img));
        }
        product.push_back(row);
    }
    doc["product"] = product;
    doc["expectation"] = render(p.expectation().dense_row(0));
    if (p.differential()) {
        json d = json::array();
        for (std::size_t i = 0; i < dim; ++i) {
            Vector img(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                img[r] = p.differential()->at(r, i);
            }
            d.push_back(render(img));
        }
        doc["differential"] = d;
    }
    if (!named.variables.empty()) {
        json vars = json::object();
        for (const auto& [key, value] : named.variables) {
            vars[key] = render(value);
        }
        doc["variables"] = vars;
    }
    return doc.dump(2) + "\n";
}

}  // namespace hopcum::cli
