#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

Dense to_dense(const LinearMap& f) {
    Dense out(f.rows(), f.cols());
    for (std::size_t r = 0; r < f.rows(); ++r) {
        for (std::size_t c = 0; c < f.cols(); ++c) {
            out.at(r, c) = f.at(r, c);
        }
    }
    return out;
}

Dense identity(std::size_t n) {
    Dense out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.at(i, i) = Scalar(1);
    }
    return out;
}

Dense multiply(const Dense& x, const Dense& y) {
    if (x.cols != y.rows) {
        throw std::logic_error("oracle multiply: shape mismatch");
    }
    Dense out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < y.cols; ++j) {
                out.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    }
    return out;
}

Dense plus(const Dense& x, const Dense& y) {
    if (x.rows != y.rows || x.cols != y.cols) {
        throw std::logic_error("oracle plus: shape mismatch");
    }
    Dense out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) {
        out.a[i] += y.a[i];
    }
    return out;
}

Dense times(const Scalar& s, const Dense& x) {
    Dense out = x;
    for (Scalar& e : out.a) {
        e *= s;
    }
    return out;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

std::vector<std::size_t> letters(std::size_t dim, std::size_t n, std::size_t index) {
    std::vector<std::size_t> w(n);
    for (std::size_t i = n; i-- > 0;) {
        w[i] = index % dim;
        index /= dim;
    }
    return w;
}

int letters_degree(const GradedSpace& v, const std::vector<std::size_t>& w) {
    int d = 0;
    for (std::size_t l : w) {
        d += v.degrees()[l];
    }
    return d;
}

Dense koszul_kron(const GradedSpace& v, const Dense& f, std::size_t p, const Dense& g, int degg) {
    Dense out(f.rows * g.rows, f.cols * g.cols);
    for (std::size_t fr = 0; fr < f.rows; ++fr) {
        for (std::size_t fc = 0; fc < f.cols; ++fc) {
            if (f.at(fr, fc).is_zero()) {
                continue;
            }
            const int dx = letters_degree(v, letters(v.dim(), p, fc));
            const Scalar sign((degg * dx) % 2 == 0 ? 1 : -1);
            for (std::size_t gr = 0; gr < g.rows; ++gr) {
                for (std::size_t gc = 0; gc < g.cols; ++gc) {
                    out.at(fr * g.rows + gr, fc * g.cols + gc) = sign * f.at(fr, fc) * g.at(gr, gc);
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (std::size_t first = 1; first <= n; ++first) {
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

Dense coderivation_block(const MultilinearSeries& s, std::size_t n, std::size_t m) {
    const GradedSpace& v = s.domain();
    const std::size_t dim = v.dim();
    Dense out(ipow(dim, m), ipow(dim, n));
    if (m > n) {
        return out;
    }
    const std::size_t k = n - m + 1;
    if (k > s.max_order()) {
        return out;
    }
    const LinearMap& dk = s.component(k);
    for (std::size_t col = 0; col < out.cols; ++col) {
        const auto w = letters(dim, n, col);
        for (std::size_t i = 0; i + k <= n; ++i) {
            std::vector<std::size_t> prefix(w.begin(), w.begin() + static_cast<long>(i));
            std::vector<std::size_t> middle(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + k));
            const int sign_exp = s.degree() * letters_degree(v, prefix);
            const Scalar sign(sign_exp % 2 == 0 ? 1 : -1);
            std::size_t mid_index = 0;
            for (std::size_t l : middle) {
                mid_index = mid_index * dim + l;
            }
            for (std::size_t img = 0; img < dim; ++img) {
                const Scalar& c = dk.at(img, mid_index);
                if (c.is_zero()) {
                    continue;
                }
                std::vector<std::size_t> target = prefix;
                target.push_back(img);
                target.insert(target.end(), w.begin() + static_cast<long>(i + k), w.end());
                std::size_t row = 0;
                for (std::size_t l : target) {
                    row = row * dim + l;
                }
                out.at(row, col) += sign * c;
            }
        }
    }
    return out;
}

namespace {

Dense kron_of_components(const MultilinearSeries& s, const std::vector<std::size_t>& parts) {
    Dense acc = to_dense(s.component(parts[0]));
    std::size_t used = parts[0];
    for (std::size_t j = 1; j < parts.size(); ++j) {
        acc = koszul_kron(s.domain(), acc, used, to_dense(s.component(parts[j])), s.degree());
        used += parts[j];
    }
    return acc;
}

}  // namespace

Dense coalgebra_block(const MultilinearSeries& s, std::size_t n, std::size_t k) {
    Dense out(ipow(s.codomain().dim(), k), ipow(s.domain().dim(), n));
    for (const auto& c : compositions(n)) {
        if (c.size() != k) {
            continue;
        }
        bool in_range = true;
        for (std::size_t part : c) {
            in_range = in_range && part <= s.max_order();
        }
        if (in_range) {
            out = plus(out, kron_of_components(s, c));
        }
    }
    return out;
}

Dense composite_component(const MultilinearSeries& g, const MultilinearSeries& f, std::size_t n) {
    Dense out(g.codomain().dim(), ipow(f.domain().dim(), n));
    for (std::size_t k = 1; k <= n; ++k) {
        out = plus(out, multiply(to_dense(g.component(k)), coalgebra_block(f, n, k)));
    }
    return out;
}

Vector multiply_vectors(const ProbabilitySpace& p, const Vector& x, const Vector& y) {
    const std::size_t dim = p.space().dim();
    Vector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Scalar c = x[i] * y[j];
            if (c.is_zero()) {
                continue;
            }
            for (std::size_t r = 0; r < dim; ++r) {
                out[r] += c * p.product().at(r, i * dim + j);
            }
        }
    }
    return out;
}

Scalar moment(const ProbabilitySpace& p, const std::vector<Vector>& xs) {
    Vector acc = xs.at(0);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        acc = multiply_vectors(p, acc, xs[i]);
    }
    Scalar e;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        e += p.expectation().at(0, i) * acc[i];
    }
    return e;
}

std::vector<Scalar> boolean_cumulant_row(const ProbabilitySpace& p, std::size_t n) {
    const std::size_t dim = p.space().dim();
    std::vector<Scalar> row(ipow(dim, n));
    const auto comps = compositions(n);
    for (std::size_t col = 0; col < row.size(); ++col) {
        const auto w = letters(dim, n, col);
        Scalar total;
        for (const auto& c : comps) {
            Scalar term(1);
            std::size_t pos = 0;
            for (std::size_t part : c) {
                std::vector<Vector> seg;
                for (std::size_t i = 0; i < part; ++i) {
                    seg.push_back(basis_vector(dim, w[pos + i]));
                }
                pos += part;
                term *= moment(p, seg);
            }
            total += (c.size() % 2 == 1) ? term : -term;
        }
        row[col] = total;
    }
    return row;
}

bool invert(const Dense& m, Dense& out) {
    const std::size_t n = m.rows;
    Dense a = m;
    out = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a.at(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(c, j), a.at(pivot, j));
            std::swap(out.at(c, j), out.at(pivot, j));
        }
        const Scalar inv = Scalar(1) / a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) *= inv;
            out.at(c, j) *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).is_zero()) {
                continue;
            }
            const Scalar f = a.at(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(c, j);
                out.at(r, j) -= f * out.at(c, j);
            }
        }
    }
    return true;
}

Vector basis_vector(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.at(i) = Scalar(1);
    return v;
}

}  // namespace oracle
