#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobord/gf2poly.hpp"

namespace cobord {

// C(n, j) mod 2 via binary digit domination (Lucas).
int binom_mod2(std::uint64_t n, std::uint64_t j);

// Smallest power of two 2^q with q > 0 and 2^q > d: the common period of
// n -> I_{n,d}.
int ind_period(int d);

// The invariant polynomial
//   I_{n,d} = (n-d+1) vbar_d + sum_{j=1}^d C(n,j) vbar_{d-j} p_j
// over GF(2), homogeneous of degree d in v1..vd (possibly zero).
// Defined for all n, d >= 0. Cached on (n mod period, d).
PolyGF2 ind_poly(int n, int d);

// Same value computed from the defining sum with no cache and no period
// reduction; used by the verification routines so they stay independent
// of the caching assumptions.
PolyGF2 ind_poly_raw(int n, int d);

// Cells with n <= d or n = 2^k - 1 fall outside the geometric range but
// the defining sum still makes sense; tables mark them.
bool ind_marginal_cell(int n, int d);

struct IndTable {
    int n_max = 0;
    int d_max = 0;
    std::vector<std::vector<PolyGF2>> cells;  // [n][d]

    const PolyGF2& at(int n, int d) const { return cells[n][d]; }
    std::string text() const;  // aligned grid, marginal cells marked '*'
    std::string csv() const;   // long form: n,d,expr,marginal
};

IndTable ind_table(int n_max, int d_max);

// I_{n,d} == I_{n + period, d}, both sides from the raw definition.
bool verify_periodicity(int n, int d);

// For n = m_odd * 2^k - 1: I_{n,d} = 0 for all d < 2^k and
// I_{n,2^k} = v1^{2^k}, checked symbolically from the raw definition.
bool verify_initial_zeros(int k, int m_odd);

}  // namespace cobord
