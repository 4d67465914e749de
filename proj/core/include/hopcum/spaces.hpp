#ifndef HOPCUM_SPACES_HPP
#define HOPCUM_SPACES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopcum/probability.hpp"

namespace hopcum {

/// A probability space together with named random variables.
struct NamedSpace {
    std::string name;
    ProbabilitySpace space;
    std::vector<std::pair<std::string, Vector>> variables;
};

/// Functions on m points with pointwise product and E = weighted sum.
/// Basis e1..em are the point indicators. Weights must be >= 0 and sum to 1.
ProbabilitySpace finite_measure_space(const std::vector<Scalar>& weights);

/// k×k rational matrices, E = trace/k, basis E11, E12, ... (k ∈ {2, 3}).
ProbabilitySpace matrix_trace_space(int k);

/// span{1, u} in degree 0, span{v} in degree -1 (homological degree 1);
/// d(v) = u raises degree by one. Unital product with all other products of
/// u, v zero; E(1) = 1, E(u) = E(v) = 0.
ProbabilitySpace two_term_complex_space();

NamedSpace finite_measure_recipe(const std::vector<Scalar>& weights);
NamedSpace matrix_trace_recipe(int k);
NamedSpace two_term_complex_recipe();

/// Parses "finite:w1,w2,...", "matrix:k" or "two-term".
/// Throws std::invalid_argument for anything else.
NamedSpace space_from_recipe(std::string_view recipe);

/// Recipes shipped with the tool, each paired with the truncation order it
/// is exercised at.
std::vector<std::pair<std::string, std::size_t>> bundled_recipes();

}  // namespace hopcum

#endif  // HOPCUM_SPACES_HPP
