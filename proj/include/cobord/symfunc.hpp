#pragma once

#include <vector>

#include "cobord/gf2poly.hpp"

namespace cobord {

// Dual classes vbar_0..vbar_d: the multiplicative inverses of the total
// class 1 + v1 + v2 + ..., i.e. the complete homogeneous symmetric
// functions written in the elementary basis. vbar_0 = 1 and
// vbar_i = sum_{j<i} v_{i-j} * vbar_j.
std::vector<PolyGF2> dual_classes(int d);

// Power sums p_1..p_jmax in the elementary basis, via the Newton
// recurrence with all coefficients reduced mod 2:
//   p_j = sum_{i=1}^{j-1} v_i p_{j-i} + (j mod 2) v_j.
// Entry 0 of the returned vector is unused (zero).
std::vector<PolyGF2> power_sums(int j_max);
PolyGF2 power_sum(int j);

// i-th elementary symmetric polynomial in variables x1..xn (as a PolyGF2
// whose variable k plays x_k). Zero for i > n, one for i = 0.
PolyGF2 elementary_symmetric(int i, int n_vars);

// Substitute v_i -> e_i(x1..xN). The brute-force oracle for the
// symmetric-function identities; requires N >= deg(expr) so that the
// expansion is faithful.
PolyGF2 expand_in_variables(const PolyGF2& expr, int n_vars);

}  // namespace cobord
