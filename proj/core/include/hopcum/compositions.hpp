#ifndef HOPCUM_COMPOSITIONS_HPP
#define HOPCUM_COMPOSITIONS_HPP

#include <cstddef>
#include <vector>

namespace hopcum {

/// An ordered partition (n_1, ..., n_k) of n into positive parts.
using Composition = std::vector<std::size_t>;

/// All 2^{n-1} compositions of n, ordered by number of parts and then
/// lexicographically. Throws std::invalid_argument for n = 0.
std::vector<Composition> ordered_partitions(std::size_t n);

}  // namespace hopcum

#endif  // HOPCUM_COMPOSITIONS_HPP
