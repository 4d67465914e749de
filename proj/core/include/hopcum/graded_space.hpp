#ifndef HOPCUM_GRADED_SPACE_HPP
#define HOPCUM_GRADED_SPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopcum {

/// Finite-dimensional graded vector space with a named basis.
///
/// An ungraded space is one whose degrees are all zero. There is no degree
/// shift anywhere: a tensor word has the plain sum of its letters' degrees.
class GradedSpace {
public:
    GradedSpace(std::vector<std::string> labels, std::vector<int> degrees);
    explicit GradedSpace(std::vector<std::string> labels);

    /// The one-dimensional ground field, basis {"1"} in degree 0.
    static GradedSpace ground();

    [[nodiscard]] std::size_t dim() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::vector<int>& degrees() const { return degrees_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] int degree(std::size_t i) const { return degrees_.at(i); }
    [[nodiscard]] bool is_ungraded() const;
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
};

/// A basis tensor of V^{⊗n}: letters are basis indices, n = letters.size().
struct Word {
    std::vector<std::size_t> letters;

    [[nodiscard]] std::size_t order() const { return letters.size(); }
    friend bool operator==(const Word&, const Word&) = default;
};

/// dim(V)^n. Throws std::invalid_argument for n = 0 or on overflow.
std::size_t tensor_dimension(const GradedSpace& space, std::size_t n);

/// All dim(V)^n words in lexicographic order of letter indices. This order
/// is the row/column order of every LinearMap matrix.
std::vector<Word> enumerate_words(const GradedSpace& space, std::size_t n);

/// Position of a word in the lexicographic enumeration.
std::size_t word_index(const GradedSpace& space, const Word& word);

/// Inverse of word_index for words of order n.
Word word_at(const GradedSpace& space, std::size_t n, std::size_t index);

int word_degree(const GradedSpace& space, const Word& word);

/// Degree of every word of V^{⊗n}, indexed like enumerate_words.
std::vector<int> word_degrees(const GradedSpace& space, std::size_t n);

/// Human label such as "x⊗y"; single letters print bare.
std::string word_label(const GradedSpace& space, const Word& word);

}  // namespace hopcum

#endif  // HOPCUM_GRADED_SPACE_HPP
