#ifndef HOPCUM_PROBABILITY_HPP
#define HOPCUM_PROBABILITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopcum/coalgebra.hpp"
#include "hopcum/graded_space.hpp"
#include "hopcum/linear_map.hpp"

namespace hopcum {

/// (V, E, a) with an optional differential d.
///
/// The constructor only checks shapes: product V⊗V -> V of degree 0,
/// expectation V -> ground field of degree 0, differential V -> V of
/// degree 1. The algebraic conditions (associativity, d² = 0, E∘d = 0) are
/// the business of validate_space.
class ProbabilitySpace {
public:
    ProbabilitySpace(GradedSpace space, LinearMap product, LinearMap expectation,
                     std::optional<LinearMap> differential = std::nullopt);

    [[nodiscard]] const GradedSpace& space() const { return space_; }
    [[nodiscard]] const LinearMap& product() const { return product_; }
    [[nodiscard]] const LinearMap& expectation() const { return expectation_; }
    [[nodiscard]] const std::optional<LinearMap>& differential() const { return differential_; }

    /// True when V has a nonzero degree or d is present and nonzero.
    [[nodiscard]] bool is_graded() const;

private:
    GradedSpace space_;
    LinearMap product_;
    LinearMap expectation_;
    std::optional<LinearMap> differential_;
};

enum class ViolationKind { homogeneity, associativity, differential_square, chain_map };

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool valid() const { return violations.empty(); }
    [[nodiscard]] std::string summary() const;
};

/// Checks every condition and reports all violations, not just the first.
ValidationReport validate_space(const ProbabilitySpace& p);

/// α_n : V^{⊗n} -> V, left-to-right iterated product; α_1 = id.
LinearMap iterated_product(const ProbabilitySpace& p, std::size_t n);

/// E(X_1 ⋯ X_n).
Scalar joint_moment(const ProbabilitySpace& p, std::span<const Vector> xs);

/// The moment maps E∘α_n for n = 1..N.
std::vector<LinearMap> moment_maps(const ProbabilitySpace& p, std::size_t max_order);

/// α'_k : ground^{⊗k} -> ground, multiplication of scalars.
LinearMap scalar_multiplication(std::size_t k);

enum class CumulantMethod { recursive, inversion, ainfty };

const char* method_name(CumulantMethod m);

struct CumulantSeries {
    CumulantMethod method = CumulantMethod::recursive;
    /// kappa[n-1] : V^{⊗n} -> ground.
    std::vector<LinearMap> kappa;

    [[nodiscard]] std::size_t max_order() const { return kappa.size(); }
    [[nodiscard]] const LinearMap& order(std::size_t n) const { return kappa.at(n - 1); }

    /// κ_n(X_1⊗...⊗X_n) with n = xs.size().
    [[nodiscard]] Scalar evaluate(std::span<const Vector> xs) const;
};

/// Solves E∘α_n = Σ_k α'_k∘(Σ_P ⊗_j κ_{n_j}) for κ_n order by order.
CumulantSeries cumulants_recursive(const ProbabilitySpace& p, std::size_t max_order);

/// κ_n = Σ_k (-1)^{k-1} α'_k∘(Σ_P ⊗_j E∘α_{n_j}).
CumulantSeries cumulants_inversion(const ProbabilitySpace& p, std::size_t max_order);

/// Everything the transport construction produces.
struct AInfinityCumulants {
    CumulantSeries series;        ///< e_n, the components of F
    BlockMap expectation_lift;    ///< E
    BlockMap source_structure;    ///< D^a
    BlockMap target_structure;    ///< (D')^{a'}
    BlockMap morphism;            ///< F = E^{a,a'}
    bool morphism_check = false;  ///< F∘D^a = (D')^{a'}∘F
};

/// Builds a = exp(lift of a), a' = exp(lift of a'), E = lift of E and
/// D = lift of d, then F = a'^{-1} E a and D^a = a^{-1} D a.
/// Throws std::invalid_argument if the space fails validation.
AInfinityCumulants ainfty_cumulants(const ProbabilitySpace& p, std::size_t max_order);

struct OrderVerdict {
    std::size_t order;
    bool recursive_inversion;
    bool recursive_ainfty;
    bool inversion_ainfty;

    [[nodiscard]] bool all() const { return recursive_inversion && recursive_ainfty && inversion_ainfty; }
    friend bool operator==(const OrderVerdict&, const OrderVerdict&) = default;
};

struct TripleChecks {
    bool source_squares_to_zero = false;  ///< (D^a)² = 0, degree 1
    bool target_squares_to_zero = false;
    bool target_is_zero = false;          ///< (D')^{a'} = 0
    bool source_is_zero = false;          ///< D^a = 0 (expected when ungraded)
    bool morphism = false;                ///< F∘D^a = (D')^{a'}∘F
    friend bool operator==(const TripleChecks&, const TripleChecks&) = default;
};

struct CumulantReport {
    std::size_t max_order = 0;
    bool graded = false;
    std::optional<CumulantSeries> recursive;  ///< absent for graded spaces
    std::optional<CumulantSeries> inversion;  ///< absent for graded spaces
    CumulantSeries ainfty;
    std::vector<OrderVerdict> verdicts;       ///< empty for graded spaces
    TripleChecks triple;

    [[nodiscard]] bool verified() const;
};

/// Pairwise comparison of the stored series, order by order.
std::vector<OrderVerdict> recompute_verdicts(const CumulantReport& report);

/// Runs all routes and compares them exactly (ungraded), or runs the
/// transport and checks the A∞ triple (graded).
CumulantReport verify_main_proposition(const ProbabilitySpace& p, std::size_t max_order);

}  // namespace hopcum

#endif  // HOPCUM_PROBABILITY_HPP
