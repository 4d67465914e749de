#include "hopcum/graded_space.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace hopcum {

GradedSpace::GradedSpace(std::vector<std::string> labels, std::vector<int> degrees)
    : labels_(std::move(labels)), degrees_(std::move(degrees)) {
    if (labels_.empty()) {
        throw std::invalid_argument("graded space must have dimension >= 1");
    }
    if (labels_.size() != degrees_.size()) {
        throw std::invalid_argument("graded space: " + std::to_string(labels_.size()) + " labels but " +
                                    std::to_string(degrees_.size()) + " degrees");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) {
            throw std::invalid_argument("graded space: empty basis label");
        }
        if (!seen.insert(l).second) {
            throw std::invalid_argument("graded space: duplicate basis label '" + l + "'");
        }
    }
}

GradedSpace::GradedSpace(std::vector<std::string> labels)
    : GradedSpace(labels, std::vector<int>(labels.size(), 0)) {}

GradedSpace GradedSpace::ground() { return GradedSpace({"1"}, {0}); }

bool GradedSpace::is_ungraded() const {
    return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 0; });
}

std::optional<std::size_t> GradedSpace::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t tensor_dimension(const GradedSpace& space, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("tensor order must be >= 1");
    }
    std::size_t d = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (d > std::numeric_limits<std::uint32_t>::max() / space.dim()) {
            throw std::invalid_argument("tensor power too large");
        }
        d *= space.dim();
    }
    return d;
}

std::vector<Word> enumerate_words(const GradedSpace& space, std::size_t n) {
    const std::size_t count = tensor_dimension(space, n);
    std::vector<Word> words;
    words.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        words.push_back(word_at(space, n, idx));
    }
    return words;
}

std::size_t word_index(const GradedSpace& space, const Word& word) {
    if (word.letters.empty()) {
        throw std::invalid_argument("empty word");
    }
    std::size_t idx = 0;
    for (std::size_t letter : word.letters) {
        if (letter >= space.dim()) {
            throw std::out_of_range("word letter out of range");
        }
        idx = idx * space.dim() + letter;
    }
    return idx;
}

Word word_at(const GradedSpace& space, std::size_t n, std::size_t index) {
    const std::size_t count = tensor_dimension(space, n);
    if (index >= count) {
        throw std::out_of_range("word index out of range");
    }
    Word w;
    w.letters.assign(n, 0);
    for (std::size_t pos = n; pos-- > 0;) {
        w.letters[pos] = index % space.dim();
        index /= space.dim();
    }
    return w;
}

int word_degree(const GradedSpace& space, const Word& word) {
    int deg = 0;
    for (std::size_t letter : word.letters) {
        deg += space.degree(letter);
    }
    return deg;
}

std::vector<int> word_degrees(const GradedSpace& space, std::size_t n) {
    std::vector<int> degs(space.degrees().begin(), space.degrees().end());
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<int> next;
        next.reserve(degs.size() * space.dim());
        for (int prefix : degs) {
            for (int letter : space.degrees()) {
                next.push_back(prefix + letter);
            }
        }
        degs = std::move(next);
    }
    return degs;
}

std::string word_label(const GradedSpace& space, const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        if (i > 0) {
            out += "⊗";
        }
        out += space.label(word.letters[i]);
    }
    return out;
}

}  // namespace hopcum
