#include "hopcum/linear_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopcum {

namespace {

const Scalar kZero{};

// Dense scratch row used to accumulate sparse sums without reallocating.
class RowAccumulator {
public:
    explicit RowAccumulator(std::size_t width) : values_(width), touched_(width, 0) {}

    void add(std::uint32_t col, const Scalar& a, const Scalar& b) {
        if (!touched_[col]) {
            touched_[col] = 1;
            active_.push_back(col);
        }
        values_[col].add_product(a, b);
    }

    void add(std::uint32_t col, const Scalar& a) {
        if (!touched_[col]) {
            touched_[col] = 1;
            active_.push_back(col);
        }
        values_[col] += a;
    }

    // Moves the accumulated nonzeros into out and resets the scratch state.
    void flush(std::vector<LinearMap::Entry>& out) {
        std::sort(active_.begin(), active_.end());
        out.clear();
        out.reserve(active_.size());
        for (std::uint32_t c : active_) {
            if (!values_[c].is_zero()) {
                out.push_back({c, values_[c]});
            }
            values_[c] = Scalar();
            touched_[c] = 0;
        }
        active_.clear();
    }

private:
    std::vector<Scalar> values_;
    std::vector<char> touched_;
    std::vector<std::uint32_t> active_;
};

}  // namespace

std::string describe(const TensorPower& p) {
    std::string labels;
    for (std::size_t i = 0; i < p.space.dim(); ++i) {
        labels += (i ? "," : "") + p.space.label(i);
    }
    return "{" + labels + "}^" + std::to_string(p.order);
}

Vector tensor_vectors(std::span<const Vector> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("tensor of zero vectors");
    }
    Vector out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const Vector& rhs = factors[i];
        Vector next;
        next.reserve(out.size() * rhs.size());
        for (const Scalar& a : out) {
            for (const Scalar& b : rhs) {
                next.push_back(a * b);
            }
        }
        out = std::move(next);
    }
    return out;
}

LinearMap::LinearMap(TensorPower domain, TensorPower codomain, int degree)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(degree), cols_(domain_.dim()),
      rows_(codomain_.dim()) {}

LinearMap LinearMap::identity(const GradedSpace& space, std::size_t order) {
    LinearMap id({space, order}, {space, order}, 0);
    for (std::size_t i = 0; i < id.rows_.size(); ++i) {
        id.rows_[i].push_back({static_cast<std::uint32_t>(i), Scalar(1)});
    }
    return id;
}

LinearMap LinearMap::from_dense(TensorPower domain, TensorPower codomain, int degree,
                                const std::vector<std::vector<Scalar>>& rows) {
    LinearMap m(std::move(domain), std::move(codomain), degree);
    if (rows.size() != m.rows()) {
        throw std::invalid_argument("from_dense: expected " + std::to_string(m.rows()) + " rows, got " +
                                    std::to_string(rows.size()));
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw std::invalid_argument("from_dense: row " + std::to_string(r) + " has wrong length");
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (!rows[r][c].is_zero()) {
                m.rows_[r].push_back({static_cast<std::uint32_t>(c), rows[r][c]});
            }
        }
    }
    return m;
}

const Scalar& LinearMap::at(std::size_t row, std::size_t col) const {
    if (col >= cols_) {
        throw std::out_of_range("LinearMap::at column out of range");
    }
    const auto& r = rows_.at(row);
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == col) {
        return it->value;
    }
    return kZero;
}

std::size_t LinearMap::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) {
        n += r.size();
    }
    return n;
}

bool LinearMap::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

std::vector<Scalar> LinearMap::dense_row(std::size_t r) const {
    std::vector<Scalar> out(cols_);
    for (const auto& e : rows_.at(r)) {
        out[e.col] = e.value;
    }
    return out;
}

void LinearMap::set(std::size_t row, std::size_t col, const Scalar& value) {
    if (col >= cols_) {
        throw std::out_of_range("LinearMap::set column out of range");
    }
    auto& r = rows_.at(row);
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const Entry& e, std::size_t c) { return e.col < c; });
    const bool present = it != r.end() && it->col == col;
    if (value.is_zero()) {
        if (present) {
            r.erase(it);
        }
    } else if (present) {
        it->value = value;
    } else {
        r.insert(it, {static_cast<std::uint32_t>(col), value});
    }
}

void LinearMap::add_to(std::size_t row, std::size_t col, const Scalar& value) { set(row, col, at(row, col) + value); }

bool LinearMap::is_homogeneous() const {
    const auto dom = word_degrees(domain_.space, domain_.order);
    const auto cod = word_degrees(codomain_.space, codomain_.order);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& e : rows_[r]) {
            if (cod[r] - dom[e.col] != degree_) {
                return false;
            }
        }
    }
    return true;
}

Vector LinearMap::apply(const Vector& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("apply: vector length " + std::to_string(x.size()) + " does not match domain " +
                                    describe(domain_));
    }
    Vector y(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& e : rows_[r]) {
            y[r].add_product(e.value, x[e.col]);
        }
    }
    return y;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
    if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_ || a.degree_ != b.degree_) {
        return false;
    }
    for (std::size_t r = 0; r < a.rows_.size(); ++r) {
        const auto& x = a.rows_[r];
        const auto& y = b.rows_[r];
        if (x.size() != y.size()) {
            return false;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].col != y[i].col || !(x[i].value == y[i].value)) {
                return false;
            }
        }
    }
    return true;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (!(g.codomain_ == f.domain_)) {
        throw std::invalid_argument("compose: codomain " + describe(g.codomain_) + " does not match domain " +
                                    describe(f.domain_));
    }
    LinearMap out(g.domain_, f.codomain_, f.degree_ + g.degree_);
    if (f.is_zero() || g.is_zero()) {
        return out;
    }
    RowAccumulator acc(g.cols_);
    for (std::size_t i = 0; i < f.rows_.size(); ++i) {
        if (f.rows_[i].empty()) {
            continue;
        }
        for (const auto& fe : f.rows_[i]) {
            for (const auto& ge : g.rows_[fe.col]) {
                acc.add(ge.col, fe.value, ge.value);
            }
        }
        acc.flush(out.rows_[i]);
    }
    return out;
}

LinearMap add(const LinearMap& f, const LinearMap& g) {
    if (!(f.domain_ == g.domain_) || !(f.codomain_ == g.codomain_)) {
        throw std::invalid_argument("add: shape mismatch " + describe(f.domain_) + "->" + describe(f.codomain_) +
                                    " vs " + describe(g.domain_) + "->" + describe(g.codomain_));
    }
    if (f.degree_ != g.degree_) {
        throw std::invalid_argument("add: degree mismatch " + std::to_string(f.degree_) + " vs " +
                                    std::to_string(g.degree_));
    }
    LinearMap out(f.domain_, f.codomain_, f.degree_);
    RowAccumulator acc(f.cols_);
    for (std::size_t r = 0; r < f.rows_.size(); ++r) {
        if (f.rows_[r].empty()) {
            out.rows_[r] = g.rows_[r];
            continue;
        }
        if (g.rows_[r].empty()) {
            out.rows_[r] = f.rows_[r];
            continue;
        }
        for (const auto& e : f.rows_[r]) {
            acc.add(e.col, e.value);
        }
        for (const auto& e : g.rows_[r]) {
            acc.add(e.col, e.value);
        }
        acc.flush(out.rows_[r]);
    }
    return out;
}

LinearMap scale(const Scalar& s, const LinearMap& f) {
    LinearMap out(f.domain(), f.codomain(), f.degree());
    if (s.is_zero()) {
        return out;
    }
    for (std::size_t r = 0; r < f.rows(); ++r) {
        for (const auto& e : f.row(r)) {
            out.set(r, e.col, s * e.value);
        }
    }
    return out;
}

LinearMap koszul_tensor(const LinearMap& f, const LinearMap& g) {
    if (!(f.domain_.space == g.domain_.space) || !(f.codomain_.space == g.codomain_.space)) {
        throw std::invalid_argument("koszul_tensor: factors must share domain and codomain spaces");
    }
    LinearMap out({f.domain_.space, f.domain_.order + g.domain_.order},
                  {f.codomain_.space, f.codomain_.order + g.codomain_.order}, f.degree_ + g.degree_);
    if (f.is_zero() || g.is_zero()) {
        return out;
    }
    const std::size_t g_rows = g.rows_.size();
    const std::size_t g_cols = g.cols_;
    // Sign depends only on the degree of the word that g jumps over.
    std::vector<int> sign(f.cols_, 1);
    if (g.degree_ % 2 != 0) {
        const auto degs = word_degrees(f.domain_.space, f.domain_.order);
        for (std::size_t c = 0; c < degs.size(); ++c) {
            sign[c] = (degs[c] % 2 == 0) ? 1 : -1;
        }
    }
    for (std::size_t rf = 0; rf < f.rows_.size(); ++rf) {
        if (f.rows_[rf].empty()) {
            continue;
        }
        for (std::size_t rg = 0; rg < g_rows; ++rg) {
            const auto& grow = g.rows_[rg];
            if (grow.empty()) {
                continue;
            }
            auto& target = out.rows_[rf * g_rows + rg];
            target.reserve(f.rows_[rf].size() * grow.size());
            for (const auto& fe : f.rows_[rf]) {
                Scalar lead = fe.value;
                if (sign[fe.col] < 0) {
                    lead = -lead;
                }
                const auto base = static_cast<std::uint32_t>(fe.col * g_cols);
                for (const auto& ge : grow) {
                    target.push_back({base + ge.col, lead * ge.value});
                }
            }
        }
    }
    return out;
}

LinearMap tensor_power_of(const LinearMap& f, std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("tensor_power_of: k must be >= 1");
    }
    LinearMap out = f;
    for (std::size_t i = 1; i < k; ++i) {
        out = koszul_tensor(out, f);
    }
    return out;
}

void require_homogeneous(const LinearMap& f, const std::string& what) {
    if (!f.is_homogeneous()) {
        throw std::invalid_argument(what + " is not homogeneous of degree " + std::to_string(f.degree()));
    }
}

}  // namespace hopcum
