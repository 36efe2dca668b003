#include <random>

#include "doctest.h"

#include "cobord/ind.hpp"
#include "cobord/symfunc.hpp"

using namespace cobord;

namespace {

struct Cell {
    const char* expr;
    bool marginal;
};

// The reference grid of I_{n,d} for n <= 16, d <= 4, in canonical text form.
// Marginal cells (n <= d or n = 2^k - 1) are flagged.
const Cell kReference[17][5] = {
    {{"1", 1}, {"0", 1}, {"v1^2+v2", 1}, {"0", 1}, {"v1^4+v1^2*v2+v2^2+v4", 1}},
    {{"0", 1}, {"0", 1}, {"v1^2", 1}, {"v1*v2+v3", 1}, {"v1^4+v1*v3", 1}},
    {{"1", 0}, {"0", 0}, {"v2", 1}, {"v1^3", 1}, {"v2^2+v4", 1}},
    {{"0", 1}, {"0", 1}, {"0", 1}, {"0", 1}, {"v1^4", 1}},
    {{"1", 0}, {"0", 0}, {"v1^2+v2", 0}, {"0", 0}, {"v1^2*v2+v2^2+v4", 1}},
    {{"0", 0}, {"0", 0}, {"v1^2", 0}, {"v1*v2+v3", 0}, {"v1*v3", 0}},
    {{"1", 0}, {"0", 0}, {"v2", 0}, {"v1^3", 0}, {"v1^4+v2^2+v4", 0}},
    {{"0", 1}, {"0", 1}, {"0", 1}, {"0", 1}, {"0", 1}},
    {{"1", 0}, {"0", 0}, {"v1^2+v2", 0}, {"0", 0}, {"v1^4+v1^2*v2+v2^2+v4", 0}},
    {{"0", 0}, {"0", 0}, {"v1^2", 0}, {"v1*v2+v3", 0}, {"v1^4+v1*v3", 0}},
    {{"1", 0}, {"0", 0}, {"v2", 0}, {"v1^3", 0}, {"v2^2+v4", 0}},
    {{"0", 0}, {"0", 0}, {"0", 0}, {"0", 0}, {"v1^4", 0}},
    {{"1", 0}, {"0", 0}, {"v1^2+v2", 0}, {"0", 0}, {"v1^2*v2+v2^2+v4", 0}},
    {{"0", 0}, {"0", 0}, {"v1^2", 0}, {"v1*v2+v3", 0}, {"v1*v3", 0}},
    {{"1", 0}, {"0", 0}, {"v2", 0}, {"v1^3", 0}, {"v1^4+v2^2+v4", 0}},
    {{"0", 1}, {"0", 1}, {"0", 1}, {"0", 1}, {"0", 1}},
    {{"1", 0}, {"0", 0}, {"v1^2+v2", 0}, {"0", 0}, {"v1^4+v1^2*v2+v2^2+v4", 0}},
};

}  // namespace

TEST_SUITE_BEGIN("ind");

TEST_CASE("binomial parity") {
    CHECK(binom_mod2(4, 2) == 0);
    CHECK(binom_mod2(7, 3) == 1);
    for (std::uint64_t n = 0; n < 12; ++n) CHECK(binom_mod2(n, 0) == 1);
    CHECK(binom_mod2(2, 4) == 0);  // j > n

    // against Pascal's triangle
    std::vector<std::vector<unsigned>> pascal(16);
    for (int n = 0; n < 16; ++n) {
        pascal[n].assign(n + 1, 1);
        for (int j = 1; j < n; ++j) pascal[n][j] = pascal[n - 1][j - 1] + pascal[n - 1][j];
        for (int j = 0; j <= n; ++j)
            CHECK(binom_mod2(n, j) == static_cast<int>(pascal[n][j] % 2));
    }
}

TEST_CASE("period") {
    CHECK(ind_period(0) == 2);
    CHECK(ind_period(1) == 2);
    CHECK(ind_period(2) == 4);
    CHECK(ind_period(3) == 4);
    CHECK(ind_period(4) == 8);
    CHECK(ind_period(8) == 16);
}

TEST_CASE("reference grid, all 85 cells") {
    auto table = ind_table(16, 4);
    for (int n = 0; n <= 16; ++n)
        for (int d = 0; d <= 4; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(table.at(n, d).str() == kReference[n][d].expr);
            CHECK(ind_marginal_cell(n, d) == kReference[n][d].marginal);
        }
}

TEST_CASE("spec examples") {
    CHECK(ind_poly(4, 2).str() == "v1^2+v2");
    CHECK(ind_poly(5, 3).str() == "v1*v2+v3");
    for (int d = 0; d <= 4; ++d) CHECK(ind_poly(7, d).is_zero());
    CHECK(ind_poly(6, 4).str() == "v1^4+v2^2+v4");
    CHECK(ind_table(0, 0).at(0, 0).str() == "1");
}

TEST_CASE("homogeneity for n <= 64, d <= 10") {
    for (int d = 0; d <= 10; ++d)
        for (int n = 0; n <= 64; ++n) {
            auto p = ind_poly(n, d);
            CHECK(p.is_homogeneous(d));
        }
}

TEST_CASE("column d=1 vanishes for n <= 64") {
    for (int n = 0; n <= 64; ++n) CHECK(ind_poly(n, 1).is_zero());
}

TEST_CASE("periodicity for n <= 32, d <= 8") {
    for (int d = 0; d <= 8; ++d)
        for (int n = 0; n <= 32; ++n) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(verify_periodicity(n, d));
        }
}

TEST_CASE("cache agrees with the raw definition") {
    for (int d = 0; d <= 6; ++d)
        for (int n = 0; n <= 20; ++n) CHECK(ind_poly(n, d) == ind_poly_raw(n, d));
}

TEST_CASE("initial zeros") {
    for (int k = 1; k <= 4; ++k)
        for (int m : {1, 3, 5}) {
            CAPTURE(k);
            CAPTURE(m);
            CHECK(verify_initial_zeros(k, m));
        }
    CHECK_THROWS(verify_initial_zeros(1, 2));
}

TEST_CASE("table text marks marginal cells") {
    auto t = ind_table(3, 2);
    auto s = t.text();
    CHECK(s.find("v1^2+v2*") != std::string::npos);
    CHECK(s.find("n\\d") != std::string::npos);
    auto c = t.csv();
    CHECK(c.find("3,2,0,1") != std::string::npos);
    CHECK(c.find("2,0,1,0") != std::string::npos);
}

TEST_SUITE_END();
