#ifndef HOPCUM_TESTS_RANDOM_HPP
#define HOPCUM_TESTS_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include <hopcum/hopcum.hpp>

namespace gen {

using namespace hopcum;

/// Deterministic generator of small random algebraic data.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n);
    bool coin(double p = 0.5);
    /// Numerator in [-3, 3], denominator in [1, 4].
    Scalar scalar();
    Scalar nonzero_scalar();

    /// dim in [1, max_dim]; degrees drawn from {0, 1} when graded.
    GradedSpace space(std::size_t max_dim, bool graded);
    /// Random map of the given degree; entries off-degree stay zero.
    LinearMap map(const TensorPower& dom, const TensorPower& cod, int degree, double density = 0.6);
    /// Degree-0 invertible V -> V.
    LinearMap invertible(const GradedSpace& v);
    /// Series with component 1 equal to id (when `unit`) or zero.
    MultilinearSeries series(const GradedSpace& v, const GradedSpace& w, std::size_t n, int degree, bool unit);
    /// exp of a random degree-0 coderivation without linear part, or a
    /// random coalgebra lift with first component id.
    GaugeElement gauge(const GradedSpace& v, std::size_t n);
    /// A degree-0 coderivation without linear part.
    BlockMap nilpotent_coderivation(const GradedSpace& v, std::size_t n);
    /// A∞ structure: a degree-1 differential (d² = 0 because degrees lie in
    /// {0, 1}) conjugated by a random gauge element.
    BlockMap structure(const GradedSpace& v, std::size_t n);

    /// One of several associative algebras presented in a random basis,
    /// with a random expectation.
    NamedSpace associative_space();
    /// A graded homotopy probability space presented in a random
    /// degree-preserving basis.
    NamedSpace graded_space();

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// P^{-1}∘a∘(P⊗P), E∘P, P^{-1}∘d∘P for an invertible degree-0 P.
ProbabilitySpace change_basis(const ProbabilitySpace& p, const LinearMap& basis);

/// Three-dimensional graded space {1, x, y}, |y| = -1, d(y) = x, x·x = x,
/// x·y = y, y·x = 0. Its differential is not a derivation.
ProbabilitySpace triangular_complex(const Scalar& e1);

}  // namespace gen

#endif  // HOPCUM_TESTS_RANDOM_HPP
