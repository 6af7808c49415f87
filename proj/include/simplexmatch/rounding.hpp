#pragma once

#include "simplexmatch/types.hpp"

namespace simplexmatch {

// Greedy maximum-weight matching: take the largest remaining entry, fix its row and column, repeat.
// Ties go to the smaller row, then the smaller column. Result maps row i to column π(i).
Permutation gmwm(const Matrix& c);

// Fraction of i with p(i) == p_star(i).
double overlap(const Permutation& p, const Permutation& p_star);

}  // namespace simplexmatch
