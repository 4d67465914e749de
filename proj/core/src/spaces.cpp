#include "hopcum/spaces.hpp"

#include <stdexcept>

namespace hopcum {

namespace {

Vector unit_vector(std::size_t dim, std::size_t i) {
    Vector e(dim);
    e.at(i) = Scalar(1);
    return e;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

}  // namespace

ProbabilitySpace finite_measure_space(const std::vector<Scalar>& weights) {
    if (weights.empty()) {
        throw std::invalid_argument("finite measure space needs at least one point");
    }
    Scalar total;
    for (const Scalar& w : weights) {
        if (w.sign() < 0) {
            throw std::invalid_argument("finite measure space: negative weight " + w.str());
        }
        total += w;
    }
    if (total != Scalar(1)) {
        throw std::invalid_argument("finite measure space: weights sum to " + total.str() + ", not 1");
    }
    const std::size_t m = weights.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back("e" + std::to_string(i + 1));
    }
    GradedSpace v(labels);
    LinearMap product({v, 2}, {v, 1}, 0);
    for (std::size_t i = 0; i < m; ++i) {
        product.set(i, i * m + i, Scalar(1));
    }
    LinearMap expectation({v, 1}, {GradedSpace::ground(), 1}, 0);
    for (std::size_t i = 0; i < m; ++i) {
        expectation.set(0, i, weights[i]);
    }
    return ProbabilitySpace(v, product, expectation);
}

ProbabilitySpace matrix_trace_space(int k) {
    if (k < 2 || k > 3) {
        throw std::invalid_argument("matrix trace space: size " + std::to_string(k) + " outside {2, 3}");
    }
    const auto n = static_cast<std::size_t>(k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    }
    GradedSpace v(labels);
    const std::size_t dim = v.dim();
    LinearMap product({v, 2}, {v, 1}, 0);
    // E_ij E_jl = E_il
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t lhs = i * n + j;
                const std::size_t rhs = j * n + l;
                product.set(i * n + l, lhs * dim + rhs, Scalar(1));
            }
        }
    }
    LinearMap expectation({v, 1}, {GradedSpace::ground(), 1}, 0);
    for (std::size_t i = 0; i < n; ++i) {
        expectation.set(0, i * n + i, Scalar(1, k));
    }
    return ProbabilitySpace(v, product, expectation);
}

ProbabilitySpace two_term_complex_space() {
    GradedSpace v({"1", "u", "v"}, {0, 0, -1});
    constexpr std::size_t one = 0;
    constexpr std::size_t u = 1;
    constexpr std::size_t w = 2;
    LinearMap product({v, 2}, {v, 1}, 0);
    for (std::size_t x : {one, u, w}) {
        product.set(x, one * 3 + x, Scalar(1));
        product.set(x, x * 3 + one, Scalar(1));
    }
    LinearMap expectation({v, 1}, {GradedSpace::ground(), 1}, 0);
    expectation.set(0, one, Scalar(1));
    LinearMap d({v, 1}, {v, 1}, 1);
    d.set(u, w, Scalar(1));
    return ProbabilitySpace(v, product, expectation, d);
}

NamedSpace finite_measure_recipe(const std::vector<Scalar>& weights) {
    ProbabilitySpace p = finite_measure_space(weights);
    std::string name = "finite:";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        name += (i ? "," : "") + weights[i].str();
    }
    const std::size_t m = weights.size();
    return NamedSpace{name, p, {{"X", unit_vector(m, 0)}, {"one", Vector(m, Scalar(1))}}};
}

NamedSpace matrix_trace_recipe(int k) {
    ProbabilitySpace p = matrix_trace_space(k);
    const auto n = static_cast<std::size_t>(k);
    Vector x(n * n);
    Vector one(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        one[i * n + i] = Scalar(1);
    }
    // Rademacher-type observable diag(1, -1, ...) with alternating signs.
    for (std::size_t i = 0; i < n; ++i) {
        x[i * n + i] = Scalar(i % 2 == 0 ? 1 : -1);
    }
    return NamedSpace{"matrix:" + std::to_string(k), p, {{"X", x}, {"one", one}}};
}

NamedSpace two_term_complex_recipe() {
    return NamedSpace{"two-term", two_term_complex_space(), {{"one", unit_vector(3, 0)}}};
}

NamedSpace space_from_recipe(std::string_view recipe) {
    if (recipe == "two-term") {
        return two_term_complex_recipe();
    }
    const auto colon = recipe.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("unknown space recipe '" + std::string(recipe) + "'");
    }
    const std::string_view kind = recipe.substr(0, colon);
    const std::string_view args = recipe.substr(colon + 1);
    if (kind == "finite") {
        std::vector<Scalar> weights;
        for (const std::string& w : split(args, ',')) {
            weights.push_back(Scalar::parse(w));
        }
        return finite_measure_recipe(weights);
    }
    if (kind == "matrix") {
        if (args != "2" && args != "3") {
            throw std::invalid_argument("matrix recipe size must be 2 or 3, got '" + std::string(args) + "'");
        }
        return matrix_trace_recipe(args == "2" ? 2 : 3);
    }
    throw std::invalid_argument("unknown space recipe '" + std::string(recipe) + "'");
}

std::vector<std::pair<std::string, std::size_t>> bundled_recipes() {
    return {
        {"finite:1/2,1/2", 6}, {"finite:1/3,2/3", 6}, {"finite:1", 6},
        {"matrix:2", 5},       {"matrix:3", 4},       {"two-term", 5},
    };
}

}  // namespace hopcum
