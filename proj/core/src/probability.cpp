#include "hopcum/probability.hpp"

#include <sstream>
#include <stdexcept>

#include "hopcum/compositions.hpp"

namespace hopcum {

ProbabilitySpace::ProbabilitySpace(GradedSpace space, LinearMap product, LinearMap expectation,
                                   std::optional<LinearMap> differential)
    : space_(std::move(space)),
      product_(std::move(product)),
      expectation_(std::move(expectation)),
      differential_(std::move(differential)) {
    if (!(product_.domain() == TensorPower{space_, 2}) || !(product_.codomain() == TensorPower{space_, 1})) {
        throw std::invalid_argument("product must map V⊗V -> V");
    }
    if (product_.degree() != 0) {
        throw std::invalid_argument("product must have degree 0");
    }
    if (!(expectation_.domain() == TensorPower{space_, 1}) ||
        !(expectation_.codomain() == TensorPower{GradedSpace::ground(), 1})) {
        throw std::invalid_argument("expectation must map V -> ground field");
    }
    if (expectation_.degree() != 0) {
        throw std::invalid_argument("expectation must have degree 0");
    }
    if (differential_) {
        if (!(differential_->domain() == TensorPower{space_, 1}) ||
            !(differential_->codomain() == TensorPower{space_, 1})) {
            throw std::invalid_argument("differential must map V -> V");
        }
        if (differential_->degree() != 1) {
            throw std::invalid_argument("differential must have degree 1");
        }
    }
}

bool ProbabilitySpace::is_graded() const {
    return !space_.is_ungraded() || (differential_ && !differential_->is_zero());
}

std::string ValidationReport::summary() const {
    if (violations.empty()) {
        return "valid";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        os << (i ? "\n" : "") << violations[i].message;
    }
    return os.str();
}

namespace {

Vector basis_vector(const GradedSpace& v, std::size_t i) {
    Vector e(v.dim());
    e[i] = Scalar(1);
    return e;
}

std::string render_vector(const GradedSpace& v, const Vector& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        if (x[i] != Scalar(1)) {
            os << x[i] << "*";
        }
        os << v.label(i);
    }
    return first ? "0" : os.str();
}

}  // namespace

ValidationReport validate_space(const ProbabilitySpace& p) {
    ValidationReport report;
    const GradedSpace& v = p.space();

    if (!p.product().is_homogeneous()) {
        report.violations.push_back({ViolationKind::homogeneity, "product is not homogeneous of degree 0"});
    }
    if (!p.expectation().is_homogeneous()) {
        report.violations.push_back(
            {ViolationKind::homogeneity, "expectation is not homogeneous of degree 0 (nonzero on a graded element)"});
    }
    if (p.differential() && !p.differential()->is_homogeneous()) {
        report.violations.push_back({ViolationKind::homogeneity, "differential is not homogeneous of degree 1"});
    }

    // a∘(a⊗id) = a∘(id⊗a), checked triple by triple so failures can be named.
    const LinearMap id1 = LinearMap::identity(v, 1);
    const LinearMap left = compose(p.product(), koszul_tensor(p.product(), id1));
    const LinearMap right = compose(p.product(), koszul_tensor(id1, p.product()));
    if (!(left == right)) {
        for (const Word& w : enumerate_words(v, 3)) {
            const std::size_t c = word_index(v, w);
            bool same = true;
            for (std::size_t r = 0; r < v.dim(); ++r) {
                if (!(left.at(r, c) == right.at(r, c))) {
                    same = false;
                    break;
                }
            }
            if (same) {
                continue;
            }
            Vector lhs(v.dim());
            Vector rhs(v.dim());
            for (std::size_t r = 0; r < v.dim(); ++r) {
                lhs[r] = left.at(r, c);
                rhs[r] = right.at(r, c);
            }
            const std::string& x = v.label(w.letters[0]);
            const std::string& y = v.label(w.letters[1]);
            const std::string& z = v.label(w.letters[2]);
            report.violations.push_back({ViolationKind::associativity,
                                         "associativity fails on (" + x + ", " + y + ", " + z + "): (" + x + "*" +
                                             y + ")*" + z + " = " + render_vector(v, lhs) + " but " + x + "*(" +
                                             y + "*" + z + ") = " + render_vector(v, rhs)});
        }
    }

    if (p.differential()) {
        const LinearMap& d = *p.differential();
        const LinearMap dd = compose(d, d);
        if (!dd.is_zero()) {
            std::string where;
            for (std::size_t i = 0; i < v.dim(); ++i) {
                const Vector img = dd.apply(basis_vector(v, i));
                if (render_vector(v, img) != "0") {
                    where += (where.empty() ? "" : ", ") + std::string("d(d(") + v.label(i) +
                             ")) = " + render_vector(v, img);
                }
            }
            report.violations.push_back(
                {ViolationKind::differential_square, "differential does not square to zero: " + where});
        }
        const LinearMap ed = compose(p.expectation(), d);
        if (!ed.is_zero()) {
            std::string where;
            for (std::size_t i = 0; i < v.dim(); ++i) {
                const Scalar val = ed.at(0, i);
                if (!val.is_zero()) {
                    where += (where.empty() ? "" : ", ") + std::string("E(d(") + v.label(i) + ")) = " + val.str();
                }
            }
            report.violations.push_back(
                {ViolationKind::chain_map, "expectation is not a chain map (E∘d != 0): " + where});
        }
    }
    return report;
}

LinearMap iterated_product(const ProbabilitySpace& p, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("iterated_product: n must be >= 1");
    }
    const GradedSpace& v = p.space();
    LinearMap alpha = LinearMap::identity(v, 1);
    const LinearMap id1 = LinearMap::identity(v, 1);
    for (std::size_t k = 2; k <= n; ++k) {
        alpha = compose(p.product(), koszul_tensor(alpha, id1));
    }
    return alpha;
}

Scalar joint_moment(const ProbabilitySpace& p, std::span<const Vector> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("joint_moment: order must be >= 1");
    }
    const LinearMap alpha = iterated_product(p, xs.size());
    return compose(p.expectation(), alpha).apply(tensor_vectors(xs))[0];
}

std::vector<LinearMap> moment_maps(const ProbabilitySpace& p, std::size_t max_order) {
    std::vector<LinearMap> out;
    out.reserve(max_order);
    const LinearMap id1 = LinearMap::identity(p.space(), 1);
    LinearMap alpha = id1;
    for (std::size_t n = 1; n <= max_order; ++n) {
        if (n > 1) {
            alpha = compose(p.product(), koszul_tensor(alpha, id1));
        }
        out.push_back(compose(p.expectation(), alpha));
    }
    return out;
}

LinearMap scalar_multiplication(std::size_t k) {
    const GradedSpace c = GradedSpace::ground();
    LinearMap m({c, k}, {c, 1}, 0);
    m.set(0, 0, Scalar(1));
    return m;
}

const char* method_name(CumulantMethod m) {
    switch (m) {
        case CumulantMethod::recursive:
            return "recursive";
        case CumulantMethod::inversion:
            return "inversion";
        case CumulantMethod::ainfty:
            return "ainfty";
    }
    return "?";
}

Scalar CumulantSeries::evaluate(std::span<const Vector> xs) const {
    if (xs.empty() || xs.size() > kappa.size()) {
        throw std::invalid_argument("cumulant order " + std::to_string(xs.size()) + " outside 1.." +
                                    std::to_string(kappa.size()));
    }
    return order(xs.size()).apply(tensor_vectors(xs))[0];
}

namespace {

// α'_k∘(f_{n_1}⊗...⊗f_{n_k}) with f_j = maps[n_j - 1].
LinearMap multiply_along(const std::vector<LinearMap>& maps, const Composition& parts) {
    LinearMap t = maps.at(parts[0] - 1);
    for (std::size_t j = 1; j < parts.size(); ++j) {
        t = koszul_tensor(t, maps.at(parts[j] - 1));
    }
    return compose(scalar_multiplication(parts.size()), t);
}

void require_valid(const ProbabilitySpace& p) {
    const ValidationReport r = validate_space(p);
    if (!r.valid()) {
        throw std::invalid_argument("invalid probability space:\n" + r.summary());
    }
}

void require_order(std::size_t max_order) {
    if (max_order == 0) {
        throw std::invalid_argument("max order must be >= 1");
    }
}

}  // namespace

CumulantSeries cumulants_recursive(const ProbabilitySpace& p, std::size_t max_order) {
    require_order(max_order);
    require_valid(p);
    const std::vector<LinearMap> moments = moment_maps(p, max_order);
    CumulantSeries s{CumulantMethod::recursive, {}};
    s.kappa.reserve(max_order);
    for (std::size_t n = 1; n <= max_order; ++n) {
        LinearMap k = moments[n - 1];
        // s.kappa holds κ_1..κ_{n-1}; the single-part composition is κ_n itself.
        for (const Composition& parts : ordered_partitions(n)) {
            if (parts.size() < 2) {
                continue;
            }
            k = k - multiply_along(s.kappa, parts);
        }
        s.kappa.push_back(std::move(k));
    }
    return s;
}

CumulantSeries cumulants_inversion(const ProbabilitySpace& p, std::size_t max_order) {
    require_order(max_order);
    require_valid(p);
    const std::vector<LinearMap> moments = moment_maps(p, max_order);
    CumulantSeries s{CumulantMethod::inversion, {}};
    s.kappa.reserve(max_order);
    for (std::size_t n = 1; n <= max_order; ++n) {
        LinearMap k({p.space(), n}, {GradedSpace::ground(), 1}, 0);
        for (const Composition& parts : ordered_partitions(n)) {
            const LinearMap term = multiply_along(moments, parts);
            k = (parts.size() % 2 == 1) ? k + term : k - term;
        }
        s.kappa.push_back(std::move(k));
    }
    return s;
}

AInfinityCumulants ainfty_cumulants(const ProbabilitySpace& p, std::size_t max_order) {
    require_order(max_order);
    require_valid(p);
    const GradedSpace& v = p.space();
    const GradedSpace c = GradedSpace::ground();

    MultilinearSeries product_series(v, v, max_order, 0);
    MultilinearSeries scalar_series(c, c, max_order, 0);
    if (max_order >= 2) {
        product_series.set_component(2, p.product());
        scalar_series.set_component(2, scalar_multiplication(2));
    }
    const GaugeElement a = exp_coderivation(lift_coderivation(product_series));
    const GaugeElement a_prime = exp_coderivation(lift_coderivation(scalar_series));

    MultilinearSeries expectation_series(v, c, max_order, 0);
    expectation_series.set_component(1, p.expectation());
    BlockMap e = lift_coalgebra(expectation_series);

    MultilinearSeries differential_series(v, v, max_order, 1);
    if (p.differential()) {
        differential_series.set_component(1, *p.differential());
    }
    const BlockMap d = lift_coderivation(differential_series);
    const BlockMap d_prime = lift_coderivation(MultilinearSeries(c, c, max_order, 1));

    BlockMap source = conjugate_structure(d, a);
    BlockMap target = conjugate_structure(d_prime, a_prime);
    BlockMap f = transport_morphism(e, a, a_prime);

    CumulantSeries s{CumulantMethod::ainfty, {}};
    s.kappa.reserve(max_order);
    for (std::size_t n = 1; n <= max_order; ++n) {
        s.kappa.push_back(f.block(n, 1));
    }
    const bool morphism_ok = check_ainfty_morphism(source, f, target);
    return AInfinityCumulants{std::move(s), std::move(e), std::move(source), std::move(target), std::move(f),
                              morphism_ok};
}

bool CumulantReport::verified() const {
    const bool triple_ok = triple.source_squares_to_zero && triple.target_squares_to_zero && triple.target_is_zero &&
                           triple.morphism;
    if (graded) {
        return triple_ok;
    }
    if (!recursive || !inversion || verdicts.size() != max_order) {
        return false;
    }
    for (const auto& v : verdicts) {
        if (!v.all()) {
            return false;
        }
    }
    return triple_ok && triple.source_is_zero;
}

std::vector<OrderVerdict> recompute_verdicts(const CumulantReport& report) {
    std::vector<OrderVerdict> out;
    if (!report.recursive || !report.inversion) {
        return out;
    }
    for (std::size_t n = 1; n <= report.max_order; ++n) {
        const LinearMap& r = report.recursive->order(n);
        const LinearMap& i = report.inversion->order(n);
        const LinearMap& e = report.ainfty.order(n);
        out.push_back({n, r == i, r == e, i == e});
    }
    return out;
}

CumulantReport verify_main_proposition(const ProbabilitySpace& p, std::size_t max_order) {
    CumulantReport report;
    report.max_order = max_order;
    report.graded = p.is_graded();
    AInfinityCumulants t = ainfty_cumulants(p, max_order);
    report.ainfty = std::move(t.series);
    report.triple.source_squares_to_zero = check_ainfty_structure(t.source_structure);
    report.triple.target_squares_to_zero = check_ainfty_structure(t.target_structure);
    report.triple.target_is_zero = t.target_structure.is_zero();
    report.triple.source_is_zero = t.source_structure.is_zero();
    report.triple.morphism = t.morphism_check;
    if (!report.graded) {
        report.recursive = cumulants_recursive(p, max_order);
        report.inversion = cumulants_inversion(p, max_order);
        report.verdicts = recompute_verdicts(report);
    }
    return report;
}

}  // namespace hopcum
