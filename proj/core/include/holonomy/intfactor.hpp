#pragma once

#include <map>
#include <vector>

#include "holonomy/rational.hpp"

namespace holonomy {

/// Full factorization of |n| (n != 0) into prime powers.
/// Trial division up to a fixed bound, then Pollard-Brent for the rest.
std::map<Integer, int> factor_integer(Integer n);

/// All positive divisors of |n|, unsorted count guard included.
std::vector<Integer> divisors(const Integer& n, std::size_t limit = 2000000);

}  // namespace holonomy
