#include "hopcum/coalgebra.hpp"

#include <stdexcept>
#include <string>

namespace hopcum {

// ---------------------------------------------------------------------------
// MultilinearSeries

MultilinearSeries::MultilinearSeries(GradedSpace domain, GradedSpace codomain, std::size_t max_order, int degree)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(degree) {
    if (max_order == 0) {
        throw std::invalid_argument("multilinear series needs max order >= 1");
    }
    components_.reserve(max_order);
    for (std::size_t n = 1; n <= max_order; ++n) {
        components_.emplace_back(TensorPower{domain_, n}, TensorPower{codomain_, 1}, degree_);
    }
}

const LinearMap& MultilinearSeries::component(std::size_t n) const {
    if (n == 0 || n > components_.size()) {
        throw std::out_of_range("series component order " + std::to_string(n) + " out of range");
    }
    return components_[n - 1];
}

MultilinearSeries& MultilinearSeries::set_component(std::size_t n, LinearMap map) {
    if (n == 0) {
        throw std::invalid_argument("series component of order 0 supplied");
    }
    if (n > components_.size()) {
        throw std::invalid_argument("series component of order " + std::to_string(n) + " exceeds truncation " +
                                    std::to_string(components_.size()));
    }
    const TensorPower want_dom{domain_, n};
    const TensorPower want_cod{codomain_, 1};
    if (!(map.domain() == want_dom) || !(map.codomain() == want_cod)) {
        throw std::invalid_argument("series component " + std::to_string(n) + " has shape " +
                                    describe(map.domain()) + "->" + describe(map.codomain()) + ", expected " +
                                    describe(want_dom) + "->" + describe(want_cod));
    }
    if (map.degree() != degree_) {
        throw std::invalid_argument("series component " + std::to_string(n) + " has degree " +
                                    std::to_string(map.degree()) + ", series degree is " + std::to_string(degree_));
    }
    require_homogeneous(map, "series component " + std::to_string(n));
    components_[n - 1] = std::move(map);
    return *this;
}

// ---------------------------------------------------------------------------
// BlockMap

BlockMap::BlockMap(GradedSpace domain, GradedSpace codomain, std::size_t max_order, int degree, BlockTag tag)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), max_order_(max_order), degree_(degree), tag_(tag) {
    if (max_order_ == 0) {
        throw std::invalid_argument("block map needs truncation order >= 1");
    }
    blocks_.reserve(max_order_ * max_order_);
    for (std::size_t n = 1; n <= max_order_; ++n) {
        for (std::size_t m = 1; m <= max_order_; ++m) {
            blocks_.emplace_back(TensorPower{domain_, n}, TensorPower{codomain_, m}, degree_);
        }
    }
}

BlockMap BlockMap::identity(const GradedSpace& space, std::size_t max_order) {
    BlockMap id(space, space, max_order, 0, BlockTag::coalgebra_morphism);
    for (std::size_t n = 1; n <= max_order; ++n) {
        id.set_block(n, n, LinearMap::identity(space, n));
    }
    return id;
}

std::size_t BlockMap::slot(std::size_t n, std::size_t m) const {
    if (n == 0 || m == 0 || n > max_order_ || m > max_order_) {
        throw std::out_of_range("block (" + std::to_string(n) + "->" + std::to_string(m) + ") outside truncation " +
                                std::to_string(max_order_));
    }
    return (n - 1) * max_order_ + (m - 1);
}

const LinearMap& BlockMap::block(std::size_t n, std::size_t m) const { return blocks_[slot(n, m)]; }

void BlockMap::set_block(std::size_t n, std::size_t m, LinearMap map) {
    const std::size_t s = slot(n, m);
    const LinearMap& current = blocks_[s];
    if (!(map.domain() == current.domain()) || !(map.codomain() == current.codomain())) {
        throw std::invalid_argument("set_block: shape mismatch in block (" + std::to_string(n) + "->" +
                                    std::to_string(m) + ")");
    }
    if (map.degree() != degree_) {
        throw std::invalid_argument("set_block: block degree " + std::to_string(map.degree()) +
                                    " differs from map degree " + std::to_string(degree_));
    }
    blocks_[s] = std::move(map);
}

bool BlockMap::is_zero() const {
    for (const auto& b : blocks_) {
        if (!b.is_zero()) {
            return false;
        }
    }
    return true;
}

bool operator==(const BlockMap& a, const BlockMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.max_order_ == b.max_order_ &&
           a.blocks_ == b.blocks_;
}

namespace {

void require_same_shape(const BlockMap& f, const BlockMap& g, const char* op) {
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()) || f.max_order() != g.max_order()) {
        throw std::invalid_argument(std::string(op) + ": block maps of different shape");
    }
}

}  // namespace

BlockMap add(const BlockMap& f, const BlockMap& g) {
    require_same_shape(f, g, "add");
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("add: block maps of different degree");
    }
    const BlockTag tag =
        (f.tag() == BlockTag::coderivation && g.tag() == BlockTag::coderivation) ? BlockTag::coderivation
                                                                                   : BlockTag::untagged;
    BlockMap out(f.domain(), f.codomain(), f.max_order(), f.degree(), tag);
    for (std::size_t n = 1; n <= f.max_order(); ++n) {
        for (std::size_t m = 1; m <= f.max_order(); ++m) {
            const LinearMap& x = f.block(n, m);
            const LinearMap& y = g.block(n, m);
            if (x.is_zero()) {
                out.set_block(n, m, y);
            } else if (y.is_zero()) {
                out.set_block(n, m, x);
            } else {
                out.set_block(n, m, add(x, y));
            }
        }
    }
    return out;
}

BlockMap scale(const Scalar& s, const BlockMap& f) {
    const BlockTag tag = f.tag() == BlockTag::coderivation ? BlockTag::coderivation : BlockTag::untagged;
    BlockMap out(f.domain(), f.codomain(), f.max_order(), f.degree(), tag);
    for (std::size_t n = 1; n <= f.max_order(); ++n) {
        for (std::size_t m = 1; m <= f.max_order(); ++m) {
            if (!f.block(n, m).is_zero()) {
                out.set_block(n, m, scale(s, f.block(n, m)));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lifts

BlockMap lift_coderivation(const MultilinearSeries& series) {
    if (!(series.domain() == series.codomain())) {
        throw std::invalid_argument("lift_coderivation: series must map V^n -> V");
    }
    if (series.degree() != 0 && series.degree() != 1) {
        throw std::invalid_argument("lift_coderivation: series degree must be 0 or 1");
    }
    const GradedSpace& v = series.domain();
    const std::size_t big_n = series.max_order();
    BlockMap out(v, v, big_n, series.degree(), BlockTag::coderivation);

    for (std::size_t k = 1; k <= big_n; ++k) {
        const LinearMap& dk = series.component(k);
        if (dk.is_zero()) {
            continue;
        }
        for (std::size_t n = k; n <= big_n; ++n) {
            const std::size_t m = n - k + 1;
            LinearMap sum({v, n}, {v, m}, series.degree());
            for (std::size_t left = 0; left + k <= n; ++left) {
                const std::size_t right = n - left - k;
                LinearMap term = dk;
                if (right > 0) {
                    term = koszul_tensor(term, LinearMap::identity(v, right));
                }
                if (left > 0) {
                    term = koszul_tensor(LinearMap::identity(v, left), term);
                }
                sum = add(sum, term);
            }
            out.set_block(n, m, add(out.block(n, m), sum));
        }
    }
    return out;
}

BlockMap lift_coalgebra(const MultilinearSeries& series) {
    if (series.degree() != 0) {
        throw std::invalid_argument("lift_coalgebra: series must have degree 0");
    }
    const GradedSpace& v = series.domain();
    const GradedSpace& w = series.codomain();
    const std::size_t big_n = series.max_order();
    BlockMap out(v, w, big_n, 0, BlockTag::coalgebra_morphism);

    // parts[n][k]: sum over compositions of n into k parts, built by peeling
    // off the first part: parts[n][k] = Σ_j f_j ⊗ parts[n-j][k-1].
    std::vector<std::vector<std::optional<LinearMap>>> parts(big_n + 1,
                                                             std::vector<std::optional<LinearMap>>(big_n + 1));
    for (std::size_t n = 1; n <= big_n; ++n) {
        parts[n][1] = series.component(n);
        for (std::size_t k = 2; k <= n; ++k) {
            LinearMap sum({v, n}, {w, k}, 0);
            for (std::size_t j = 1; j + (k - 1) <= n; ++j) {
                const LinearMap& head = series.component(j);
                const LinearMap& tail = *parts[n - j][k - 1];
                if (head.is_zero() || tail.is_zero()) {
                    continue;
                }
                sum = add(sum, koszul_tensor(head, tail));
            }
            parts[n][k] = std::move(sum);
        }
        for (std::size_t k = 1; k <= n; ++k) {
            out.set_block(n, k, *parts[n][k]);
        }
    }
    return out;
}

MultilinearSeries extract_components(const BlockMap& f) {
    MultilinearSeries s(f.domain(), f.codomain(), f.max_order(), f.degree());
    for (std::size_t n = 1; n <= f.max_order(); ++n) {
        s.set_component(n, f.block(n, 1));
    }
    return s;
}

bool satisfies_tag(const BlockMap& f, BlockTag tag) {
    switch (tag) {
        case BlockTag::untagged:
            return true;
        case BlockTag::coderivation:
            if (!(f.domain() == f.codomain()) || (f.degree() != 0 && f.degree() != 1)) {
                return false;
            }
            return lift_coderivation(extract_components(f)) == f;
        case BlockTag::coalgebra_morphism:
            return f.degree() == 0 && lift_coalgebra(extract_components(f)) == f;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Composition

BlockMap compose_blockmaps(const BlockMap& g, const BlockMap& f) {
    if (!(f.codomain() == g.domain())) {
        throw std::invalid_argument("compose_blockmaps: inner spaces do not match");
    }
    if (f.max_order() != g.max_order()) {
        throw std::invalid_argument("compose_blockmaps: truncation mismatch " + std::to_string(f.max_order()) +
                                    " vs " + std::to_string(g.max_order()));
    }
    const std::size_t big_n = f.max_order();
    BlockMap out(f.domain(), g.codomain(), big_n, f.degree() + g.degree());
    for (std::size_t n = 1; n <= big_n; ++n) {
        for (std::size_t m = 1; m <= big_n; ++m) {
            std::optional<LinearMap> sum;
            for (std::size_t k = 1; k <= big_n; ++k) {
                const LinearMap& inner = f.block(n, k);
                const LinearMap& outer = g.block(k, m);
                if (inner.is_zero() || outer.is_zero()) {
                    continue;
                }
                LinearMap term = compose(outer, inner);
                sum = sum ? add(*sum, term) : std::move(term);
            }
            if (sum) {
                out.set_block(n, m, std::move(*sum));
            }
        }
    }
    if (f.tag() == BlockTag::coalgebra_morphism && g.tag() == BlockTag::coalgebra_morphism) {
        if (!satisfies_tag(out, BlockTag::coalgebra_morphism)) {
            throw std::logic_error("composition of coalgebra maps failed the coalgebra round-trip");
        }
        out.retag(BlockTag::coalgebra_morphism);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gauge group

namespace {

void validate_gauge(const BlockMap& map) {
    if (!(map.domain() == map.codomain())) {
        throw std::invalid_argument("gauge element must be an endomorphism");
    }
    if (map.degree() != 0) {
        throw std::invalid_argument("gauge element must have degree 0");
    }
    if (!(map.block(1, 1) == LinearMap::identity(map.domain(), 1))) {
        throw std::invalid_argument("gauge element must have first component id");
    }
    if (!satisfies_tag(map, BlockTag::coalgebra_morphism)) {
        throw std::invalid_argument("gauge element is not a coalgebra map");
    }
}

}  // namespace

GaugeElement::GaugeElement(BlockMap map) : map_(std::move(map)) {
    validate_gauge(map_);
    map_.retag(BlockTag::coalgebra_morphism);
}

GaugeElement::GaugeElement(BlockMap map, BlockMap generator) : GaugeElement(std::move(map)) {
    generator_ = std::move(generator);
}

GaugeElement GaugeElement::identity(const GradedSpace& space, std::size_t max_order) {
    return GaugeElement(BlockMap::identity(space, max_order));
}

GaugeElement exp_coderivation(const BlockMap& a) {
    if (!(a.domain() == a.codomain())) {
        throw std::invalid_argument("exp_coderivation: A must be an endomorphism");
    }
    if (a.degree() != 0) {
        throw std::invalid_argument("exp_coderivation: A must have degree 0");
    }
    if (a.tag() != BlockTag::coderivation && !satisfies_tag(a, BlockTag::coderivation)) {
        throw std::invalid_argument("exp_coderivation: A is not a coderivation");
    }
    for (std::size_t n = 1; n <= a.max_order(); ++n) {
        if (!a.block(n, n).is_zero()) {
            throw std::invalid_argument(
                "exp_coderivation: A has a nonzero order-1 component (not in the gauge Lie algebra)");
        }
    }
    const std::size_t big_n = a.max_order();
    BlockMap result = BlockMap::identity(a.domain(), big_n);
    BlockMap term = result;
    // A^j vanishes for j >= N on the truncation.
    for (std::size_t j = 1; j < big_n; ++j) {
        term = scale(Scalar(1, static_cast<long>(j)), compose_blockmaps(a, term));
        if (term.is_zero()) {
            break;
        }
        result = add(result, term);
    }
    BlockMap generator = a;
    generator.retag(BlockTag::coderivation);
    return GaugeElement(std::move(result), std::move(generator));
}

GaugeElement inverse_gauge_by_substitution(const GaugeElement& g) {
    const BlockMap& map = g.map();
    const std::size_t big_n = map.max_order();
    BlockMap inv = BlockMap::identity(map.domain(), big_n);
    // (G^{-1}∘G)(n->m) = Σ_k H(k->m)∘G(n->k) = δ_{nm} with G(n->n) = id
    // determines H(n->m) from blocks of smaller order gap.
    for (std::size_t gap = 1; gap < big_n; ++gap) {
        for (std::size_t m = 1; m + gap <= big_n; ++m) {
            const std::size_t n = m + gap;
            LinearMap sum({map.domain(), n}, {map.domain(), m}, 0);
            for (std::size_t k = m; k < n; ++k) {
                const LinearMap& gb = map.block(n, k);
                const LinearMap& hb = inv.block(k, m);
                if (gb.is_zero() || hb.is_zero()) {
                    continue;
                }
                sum = add(sum, compose(hb, gb));
            }
            inv.set_block(n, m, scale(Scalar(-1), sum));
        }
    }
    return GaugeElement(std::move(inv));
}

GaugeElement inverse_gauge(const GaugeElement& g) {
    if (g.generator()) {
        return exp_coderivation(scale(Scalar(-1), *g.generator()));
    }
    return inverse_gauge_by_substitution(g);
}

GaugeElement compose_gauge(const GaugeElement& g, const GaugeElement& h) {
    return GaugeElement(compose_blockmaps(g.map(), h.map()));
}

BlockMap conjugate_structure(const BlockMap& d, const GaugeElement& g) {
    if (!(d.domain() == g.space()) || !(d.codomain() == g.space()) || d.max_order() != g.max_order()) {
        throw std::invalid_argument("conjugate_structure: structure and gauge element have different shapes");
    }
    if (d.tag() != BlockTag::coderivation && !satisfies_tag(d, BlockTag::coderivation)) {
        throw std::invalid_argument("conjugate_structure: D is not a coderivation");
    }
    const GaugeElement inv = inverse_gauge(g);
    BlockMap out = compose_blockmaps(inv.map(), compose_blockmaps(d, g.map()));
    if (!satisfies_tag(out, BlockTag::coderivation)) {
        throw std::logic_error("conjugated structure failed the coderivation round-trip");
    }
    out.retag(BlockTag::coderivation);
    return out;
}

BlockMap transport_morphism(const BlockMap& f, const GaugeElement& source, const GaugeElement& target) {
    if (!(f.domain() == source.space()) || !(f.codomain() == target.space())) {
        throw std::invalid_argument("transport_morphism: gauge elements do not act on the map's spaces");
    }
    const GaugeElement target_inv = inverse_gauge(target);
    return compose_blockmaps(target_inv.map(), compose_blockmaps(f, source.map()));
}

// ---------------------------------------------------------------------------
// A∞ checks

bool check_ainfty_structure(const BlockMap& d) {
    if (d.degree() != 1 || !(d.domain() == d.codomain())) {
        return false;
    }
    return compose_blockmaps(d, d).is_zero();
}

bool check_ainfty_morphism(const BlockMap& d, const BlockMap& f, const BlockMap& d_prime) {
    return compose_blockmaps(f, d) == compose_blockmaps(d_prime, f);
}

AInfinityStructure::AInfinityStructure(BlockMap d) : map_(std::move(d)) {
    if (map_.tag() != BlockTag::coderivation && !satisfies_tag(map_, BlockTag::coderivation)) {
        throw std::invalid_argument("A-infinity structure must be a coderivation");
    }
    if (!check_ainfty_structure(map_)) {
        throw std::invalid_argument("A-infinity structure must have degree 1 and square to zero");
    }
    map_.retag(BlockTag::coderivation);
}

AInfinityMorphism::AInfinityMorphism(AInfinityStructure source, BlockMap f, AInfinityStructure target)
    : source_(std::move(source)), map_(std::move(f)), target_(std::move(target)) {
    if (map_.tag() != BlockTag::coalgebra_morphism && !satisfies_tag(map_, BlockTag::coalgebra_morphism)) {
        throw std::invalid_argument("A-infinity morphism must be a degree-0 coalgebra map");
    }
    if (!check_ainfty_morphism(source_.map(), map_, target_.map())) {
        throw std::invalid_argument("A-infinity morphism does not intertwine the structures");
    }
    map_.retag(BlockTag::coalgebra_morphism);
}

AInfinityMorphism AInfinityMorphism::transported(const GaugeElement& g, const GaugeElement& h) const {
    return AInfinityMorphism(AInfinityStructure(conjugate_structure(source_.map(), g)),
                             transport_morphism(map_, g, h),
                             AInfinityStructure(conjugate_structure(target_.map(), h)));
}

}  // namespace hopcum
