#ifndef HOPCUM_LINEAR_MAP_HPP
#define HOPCUM_LINEAR_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hopcum/graded_space.hpp"
#include "hopcum/scalar.hpp"

namespace hopcum {

/// Dense coefficient vector over a basis (of V or of V^{⊗n}).
using Vector = std::vector<Scalar>;

/// Coefficient vector of X1⊗...⊗Xn in the lexicographic word basis.
Vector tensor_vectors(std::span<const Vector> factors);

/// A tensor power V^{⊗n} used as the source or target of a map.
struct TensorPower {
    GradedSpace space;
    std::size_t order;

    [[nodiscard]] std::size_t dim() const { return tensor_dimension(space, order); }
    friend bool operator==(const TensorPower&, const TensorPower&) = default;
};

std::string describe(const TensorPower& p);

/// Homogeneous linear map V^{⊗n} -> W^{⊗m} with exact coefficients.
///
/// The matrix has one row per codomain word and one column per domain word,
/// both in lexicographic word order; column j holds the image of domain
/// word j. Only nonzero entries are stored (rows sorted by column), but the
/// indexing contract is that of the full dense matrix.
class LinearMap {
public:
    struct Entry {
        std::uint32_t col;
        Scalar value;
    };

    /// The zero map of the given degree.
    LinearMap(TensorPower domain, TensorPower codomain, int degree);

    static LinearMap identity(const GradedSpace& space, std::size_t order);

    /// Build from a dense row-major matrix (rows = codomain words).
    static LinearMap from_dense(TensorPower domain, TensorPower codomain, int degree,
                                const std::vector<std::vector<Scalar>>& rows);

    [[nodiscard]] const TensorPower& domain() const { return domain_; }
    [[nodiscard]] const TensorPower& codomain() const { return codomain_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] const Scalar& at(std::size_t row, std::size_t col) const;
    [[nodiscard]] std::span<const Entry> row(std::size_t r) const { return rows_.at(r); }
    [[nodiscard]] std::size_t nonzero_count() const;
    [[nodiscard]] bool is_zero() const;

    /// Dense copy of one row, length cols().
    [[nodiscard]] std::vector<Scalar> dense_row(std::size_t r) const;

    void set(std::size_t row, std::size_t col, const Scalar& value);
    void add_to(std::size_t row, std::size_t col, const Scalar& value);

    /// True iff every nonzero entry joins words whose degrees differ by degree().
    [[nodiscard]] bool is_homogeneous() const;

    [[nodiscard]] Vector apply(const Vector& x) const;

    friend bool operator==(const LinearMap& a, const LinearMap& b);

private:
    friend LinearMap compose(const LinearMap& f, const LinearMap& g);
    friend LinearMap koszul_tensor(const LinearMap& f, const LinearMap& g);
    friend LinearMap add(const LinearMap& f, const LinearMap& g);

    TensorPower domain_;
    TensorPower codomain_;
    int degree_;
    std::size_t cols_;
    std::vector<std::vector<Entry>> rows_;
};

/// f∘g. Requires g.codomain() == f.domain(); degrees add.
LinearMap compose(const LinearMap& f, const LinearMap& g);

/// f + g. Shapes and degrees must agree.
LinearMap add(const LinearMap& f, const LinearMap& g);

LinearMap scale(const Scalar& s, const LinearMap& f);

/// Graded tensor product: (f⊗g)(x⊗y) = (-1)^{deg(g)·deg(x)} f(x)⊗g(y).
/// Both factors must share the same domain space and the same codomain space.
LinearMap koszul_tensor(const LinearMap& f, const LinearMap& g);

/// f^{⊗k}, k >= 1.
LinearMap tensor_power_of(const LinearMap& f, std::size_t k);

/// Throws std::invalid_argument when the map violates its declared degree.
void require_homogeneous(const LinearMap& f, const std::string& what);

inline LinearMap operator+(const LinearMap& f, const LinearMap& g) { return add(f, g); }
inline LinearMap operator-(const LinearMap& f, const LinearMap& g) { return add(f, scale(Scalar(-1), g)); }
inline LinearMap operator*(const Scalar& s, const LinearMap& f) { return scale(s, f); }

}  // namespace hopcum

#endif  // HOPCUM_LINEAR_MAP_HPP
