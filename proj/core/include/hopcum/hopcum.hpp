#ifndef HOPCUM_HOPCUM_HPP
#define HOPCUM_HOPCUM_HPP

#include "hopcum/coalgebra.hpp"
#include "hopcum/compositions.hpp"
#include "hopcum/graded_space.hpp"
#include "hopcum/linear_map.hpp"
#include "hopcum/probability.hpp"
#include "hopcum/scalar.hpp"
#include "hopcum/spaces.hpp"

#endif  // HOPCUM_HOPCUM_HPP
