#ifndef HOPCUM_TESTS_ORACLE_HPP
#define HOPCUM_TESTS_ORACLE_HPP

// Brute-force reference implementations. Nothing here calls into the
// library's composition, tensor or lifting code; only the value types and
// LinearMap accessors are shared.

#include <cstddef>
#include <vector>

#include <hopcum/hopcum.hpp>

namespace oracle {

using hopcum::GradedSpace;
using hopcum::LinearMap;
using hopcum::MultilinearSeries;
using hopcum::ProbabilitySpace;
using hopcum::Scalar;
using hopcum::Vector;

struct Dense {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> a;

    Dense() = default;
    Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    friend bool operator==(const Dense&, const Dense&) = default;
};

Dense to_dense(const LinearMap& f);
Dense identity(std::size_t n);
Dense multiply(const Dense& x, const Dense& y);
Dense plus(const Dense& x, const Dense& y);
Dense times(const Scalar& s, const Dense& x);
std::size_t ipow(std::size_t base, std::size_t exp);

/// Letters of word `index` of order n, most significant first.
std::vector<std::size_t> letters(std::size_t dim, std::size_t n, std::size_t index);
int letters_degree(const GradedSpace& v, const std::vector<std::size_t>& w);

/// (f⊗g) with the sign (-1)^{|g|·|x|} computed entry by entry.
/// f : V^{⊗p} -> V^{⊗q}, g : V^{⊗r} -> V^{⊗s}; degg is the degree of g.
Dense koszul_kron(const GradedSpace& v, const Dense& f, std::size_t p, const Dense& g, int degg);

/// Compositions of n, generated by recursion on the first part.
std::vector<std::vector<std::size_t>> compositions(std::size_t n);

/// Coderivation block V^{⊗n} -> V^{⊗m}, expanded word by word.
Dense coderivation_block(const MultilinearSeries& s, std::size_t n, std::size_t m);
/// Coalgebra block V^{⊗n} -> W^{⊗k} via Kronecker products over compositions.
Dense coalgebra_block(const MultilinearSeries& s, std::size_t n, std::size_t k);
/// Component n of G∘F for coalgebra maps given by their series.
Dense composite_component(const MultilinearSeries& g, const MultilinearSeries& f, std::size_t n);

/// Product of basis vectors evaluated straight from structure constants.
Vector multiply_vectors(const ProbabilitySpace& p, const Vector& x, const Vector& y);
/// E(x_1 ⋯ x_n), left to right.
Scalar moment(const ProbabilitySpace& p, const std::vector<Vector>& xs);
/// Row vector of κ_n over all words via the signed composition sum of
/// scalar moments.
std::vector<Scalar> boolean_cumulant_row(const ProbabilitySpace& p, std::size_t n);

/// Gauss-Jordan inverse; returns false when singular.
bool invert(const Dense& m, Dense& out);

Vector basis_vector(std::size_t dim, std::size_t i);

}  // namespace oracle

#endif  // HOPCUM_TESTS_ORACLE_HPP
