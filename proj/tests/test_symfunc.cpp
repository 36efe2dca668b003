#include "doctest.h"

#include "cobord/symfunc.hpp"

using namespace cobord;

namespace {

// Independent oracle: the truncated series product (sum v_j t^j)(sum vbar_j t^j)
// must be 1, i.e. every positive-degree graded piece cancels.
PolyGF2 series_convolution(const std::vector<PolyGF2>& dual, int d) {
    PolyGF2 acc;
    for (int j = 0; j <= d; ++j) {
        PolyGF2 vj = j == 0 ? PolyGF2::one() : PolyGF2::var(j);
        acc += vj * dual[d - j];
    }
    return acc;
}

// Brute-force complete homogeneous polynomial: all degree-d monomials in n vars.
PolyGF2 complete_homogeneous(int d, int n_vars) {
    PolyGF2 out;
    std::vector<int> exps(n_vars, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n_vars) {
            if (remaining == 0) {
                std::map<int, int> m;
                for (int i = 0; i < n_vars; ++i)
                    if (exps[i]) m[i + 1] = exps[i];
                out.toggle(Monomial(std::move(m)));
            }
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, d);
    return out;
}

PolyGF2 sum_of_powers(int j, int n_vars) {
    PolyGF2 out;
    for (int i = 1; i <= n_vars; ++i) out += PolyGF2::var(i, j);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("symfunc");

TEST_CASE("dual classes: first values") {
    auto d1 = dual_classes(1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == PolyGF2::one());
    CHECK(d1[1] == PolyGF2::var(1));

    auto d3 = dual_classes(3);
    CHECK(d3[2] == PolyGF2::var(1, 2) + PolyGF2::var(2));
    CHECK(d3[3] == PolyGF2::var(1, 3) + PolyGF2::var(3));

    CHECK(dual_classes(0) == std::vector<PolyGF2>{PolyGF2::one()});
}

TEST_CASE("dual classes invert the total class up to degree 12") {
    auto dual = dual_classes(12);
    for (int d = 1; d <= 12; ++d) {
        CHECK(series_convolution(dual, d).is_zero());
        CHECK(dual[d].is_homogeneous(d));
    }
}

TEST_CASE("newton identity between h and p up to degree 12") {
    auto dual = dual_classes(12);
    auto p = power_sums(12);
    for (int d = 1; d <= 12; ++d) {
        PolyGF2 acc;
        if (d % 2) acc += dual[d];
        for (int j = 1; j <= d; ++j) acc += dual[d - j] * p[j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("power sums: first values") {
    CHECK(power_sum(1) == PolyGF2::var(1));
    CHECK(power_sum(3) ==
          PolyGF2::var(1, 3) + PolyGF2::var(1) * PolyGF2::var(2) + PolyGF2::var(3));
    CHECK(power_sum(4) == PolyGF2::var(1, 4));
}

TEST_CASE("p at powers of two collapses to a power of v1") {
    for (int k = 0; k <= 4; ++k) {
        int j = 1 << k;
        CHECK(power_sum(j) == PolyGF2::var(1, j));
    }
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(0, 3) == PolyGF2::one());
    CHECK(elementary_symmetric(1, 2) == PolyGF2::var(1) + PolyGF2::var(2));
    CHECK(elementary_symmetric(4, 3).is_zero());
    CHECK(elementary_symmetric(2, 4).term_count() == 6);
}

TEST_CASE("expansion: spec examples") {
    CHECK(expand_in_variables(PolyGF2::var(1), 2) == PolyGF2::var(1) + PolyGF2::var(2));
    // p2 = v1^2 expands to x1^2 + x2^2
    CHECK(expand_in_variables(power_sum(2), 2) ==
          PolyGF2::var(1, 2) + PolyGF2::var(2, 2));
    // vbar_2 = v1^2 + v2 is the complete homogeneous h2
    auto dual = dual_classes(2);
    CHECK(expand_in_variables(dual[2], 3) == complete_homogeneous(2, 3));
}

TEST_CASE("expansion oracle for power sums and duals") {
    for (int j = 1; j <= 10; ++j) {
        CHECK(expand_in_variables(power_sum(j), j) == sum_of_powers(j, j));
        CHECK(expand_in_variables(dual_classes(j)[j], j) == complete_homogeneous(j, j));
    }
}

TEST_CASE("expansion rejects too few variables") {
    CHECK_THROWS(expand_in_variables(PolyGF2::var(3), 2));
}

TEST_SUITE_END();
