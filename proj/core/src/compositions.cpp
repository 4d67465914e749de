#include "hopcum/compositions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopcum {

std::vector<Composition> ordered_partitions(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ordered_partitions: n must be >= 1");
    }
    if (n > 30) {
        throw std::invalid_argument("ordered_partitions: n too large");
    }
    // Bit i of the mask set means "cut after position i + 1".
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        Composition c;
        std::size_t run = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    return out;
}

}  // namespace hopcum
