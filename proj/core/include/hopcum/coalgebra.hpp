#ifndef HOPCUM_COALGEBRA_HPP
#define HOPCUM_COALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hopcum/graded_space.hpp"
#include "hopcum/linear_map.hpp"

namespace hopcum {

/// A sequence {g_n : V^{⊗n} -> W}, n = 1..N, all of one degree.
///
/// With W = V this presents a coderivation of the tensor coalgebra; with
/// degree 0 it presents a coalgebra map TV -> TW. Unset components are
/// zero.
class MultilinearSeries {
public:
    MultilinearSeries(GradedSpace domain, GradedSpace codomain, std::size_t max_order, int degree);

    [[nodiscard]] const GradedSpace& domain() const { return domain_; }
    [[nodiscard]] const GradedSpace& codomain() const { return codomain_; }
    [[nodiscard]] std::size_t max_order() const { return components_.size(); }
    [[nodiscard]] int degree() const { return degree_; }

    /// Component of order n (1-based).
    [[nodiscard]] const LinearMap& component(std::size_t n) const;

    /// Installs g_n. Throws for n = 0, n > N, a shape mismatch or a
    /// component whose degree differs from the series degree.
    MultilinearSeries& set_component(std::size_t n, LinearMap map);

    friend bool operator==(const MultilinearSeries&, const MultilinearSeries&) = default;

private:
    GradedSpace domain_;
    GradedSpace codomain_;
    int degree_;
    std::vector<LinearMap> components_;
};

enum class BlockTag { untagged, coderivation, coalgebra_morphism };

/// A linear map T≤N(V) -> T≤N(W) stored as blocks V^{⊗n} -> W^{⊗m}.
class BlockMap {
public:
    /// The zero map.
    BlockMap(GradedSpace domain, GradedSpace codomain, std::size_t max_order, int degree,
             BlockTag tag = BlockTag::untagged);

    static BlockMap identity(const GradedSpace& space, std::size_t max_order);

    [[nodiscard]] const GradedSpace& domain() const { return domain_; }
    [[nodiscard]] const GradedSpace& codomain() const { return codomain_; }
    [[nodiscard]] std::size_t max_order() const { return max_order_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] BlockTag tag() const { return tag_; }

    /// Block V^{⊗n} -> W^{⊗m}, 1 <= n, m <= N.
    [[nodiscard]] const LinearMap& block(std::size_t n, std::size_t m) const;
    void set_block(std::size_t n, std::size_t m, LinearMap map);

    [[nodiscard]] bool is_zero() const;
    void retag(BlockTag tag) { tag_ = tag; }

    /// Blocks and shape equal; tags are ignored.
    friend bool operator==(const BlockMap& a, const BlockMap& b);

private:
    [[nodiscard]] std::size_t slot(std::size_t n, std::size_t m) const;

    GradedSpace domain_;
    GradedSpace codomain_;
    std::size_t max_order_;
    int degree_;
    BlockTag tag_;
    std::vector<LinearMap> blocks_;
};

BlockMap add(const BlockMap& f, const BlockMap& g);
BlockMap scale(const Scalar& s, const BlockMap& f);

/// Coderivation with the given corestriction:
/// block(n -> n-k+1) = Σ_i id^{⊗i} ⊗ d_k ⊗ id^{⊗(n-i-k)}, Koszul-signed.
BlockMap lift_coderivation(const MultilinearSeries& series);

/// Coalgebra map of a degree-0 series:
/// block(n -> k) = Σ over compositions (n_1..n_k) of n of f_{n_1}⊗...⊗f_{n_k}.
BlockMap lift_coalgebra(const MultilinearSeries& series);

/// The corestriction {block(n -> 1)}.
MultilinearSeries extract_components(const BlockMap& f);

/// True iff f equals the lift of its own components for the given tag.
bool satisfies_tag(const BlockMap& f, BlockTag tag);

/// g∘f. The result keeps the coalgebra-morphism tag when both inputs carry
/// it; the tag is re-verified and std::logic_error is thrown on failure.
BlockMap compose_blockmaps(const BlockMap& g, const BlockMap& f);

/// Degree-0 coalgebra automorphism of T≤N(V) with first component id.
class GaugeElement {
public:
    /// Validates the map; throws std::invalid_argument unless it is a
    /// degree-0 coalgebra endomorphism whose first component is id.
    explicit GaugeElement(BlockMap map);

    [[nodiscard]] const BlockMap& map() const { return map_; }
    [[nodiscard]] const GradedSpace& space() const { return map_.domain(); }
    [[nodiscard]] std::size_t max_order() const { return map_.max_order(); }

    /// The coderivation A with this element = exp(A), when known.
    [[nodiscard]] const std::optional<BlockMap>& generator() const { return generator_; }

    static GaugeElement identity(const GradedSpace& space, std::size_t max_order);

    friend bool operator==(const GaugeElement& a, const GaugeElement& b) { return a.map_ == b.map_; }

private:
    friend GaugeElement exp_coderivation(const BlockMap& a);

    GaugeElement(BlockMap map, BlockMap generator);

    BlockMap map_;
    std::optional<BlockMap> generator_;
};

/// Σ_{j<N} A^j / j! for a degree-0 coderivation A without an order-1 part.
/// Throws std::invalid_argument if A has a nonzero linear component.
GaugeElement exp_coderivation(const BlockMap& a);

/// Two-sided inverse: exp(-A) when the generator is known, otherwise
/// order-by-order back-substitution.
GaugeElement inverse_gauge(const GaugeElement& g);

/// Back-substitution inverse, ignoring any known generator.
GaugeElement inverse_gauge_by_substitution(const GaugeElement& g);

/// g∘h as a gauge element.
GaugeElement compose_gauge(const GaugeElement& g, const GaugeElement& h);

/// D^G := G^{-1} D G, tagged (and verified) as a coderivation.
BlockMap conjugate_structure(const BlockMap& d, const GaugeElement& g);

/// F^{G,H} := H^{-1} F G.
BlockMap transport_morphism(const BlockMap& f, const GaugeElement& source, const GaugeElement& target);

/// Degree one and D∘D = 0 on the truncation.
bool check_ainfty_structure(const BlockMap& d);

/// F∘D = D'∘F on the truncation.
bool check_ainfty_morphism(const BlockMap& d, const BlockMap& f, const BlockMap& d_prime);

/// A degree-one coderivation squaring to zero; validated on construction.
class AInfinityStructure {
public:
    explicit AInfinityStructure(BlockMap d);
    [[nodiscard]] const BlockMap& map() const { return map_; }

private:
    BlockMap map_;
};

/// A degree-zero coalgebra map intertwining two A∞ structures.
class AInfinityMorphism {
public:
    AInfinityMorphism(AInfinityStructure source, BlockMap f, AInfinityStructure target);

    [[nodiscard]] const AInfinityStructure& source() const { return source_; }
    [[nodiscard]] const AInfinityStructure& target() const { return target_; }
    [[nodiscard]] const BlockMap& map() const { return map_; }

    /// (D^G, F^{G,H}, D'^H).
    [[nodiscard]] AInfinityMorphism transported(const GaugeElement& g, const GaugeElement& h) const;

private:
    AInfinityStructure source_;
    BlockMap map_;
    AInfinityStructure target_;
};

}  // namespace hopcum

#endif  // HOPCUM_COALGEBRA_HPP
