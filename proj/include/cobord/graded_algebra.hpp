#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobord/profile.hpp"

namespace cobord {

// Finite-dimensional graded commutative algebra over GF(2), given by an
// explicit basis and multiplication table. Elements are coefficient
// vectors over the basis. Models the mod-2 cohomology of the small
// closed manifolds used by the oracle; the distinguished top-degree
// basis element carries the evaluation against the fundamental class.
struct GradedAlgebra {
    using Elem = std::vector<std::uint8_t>;

    struct BasisElement {
        std::string name;
        int degree = 0;
    };

    std::vector<BasisElement> basis;
    std::vector<std::vector<Elem>> mult;  // [i][j] -> product of basis i and j
    int unit_index = -1;
    int top_index = -1;
    int top_degree = 0;

    int dim() const { return static_cast<int>(basis.size()); }

    Elem zero() const { return Elem(basis.size(), 0); }
    Elem unit() const;
    Elem basis_elem(int i) const;
    int find_basis(const std::string& name) const;  // -1 if absent

    static bool is_zero(const Elem& a);
    static Elem add(Elem a, const Elem& b);
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, int e) const;
    Elem graded_part(const Elem& a, int d) const;
    int top_eval(const Elem& a) const;
    std::string describe(const Elem& a) const;

    // Checks gradedness, commutativity, associativity on the basis,
    // the unit law, and one-dimensionality of the top degree.
    void validate() const;
};

GradedAlgebra point_algebra();
// GF(2)[a]/(a^{m+1}), the cohomology of RP^m.
GradedAlgebra truncated_polynomial_algebra(int m, const std::string& generator);
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

// A vector bundle over a base manifold, described by the base algebra,
// the total tangent class of the base, and the total class of the bundle.
struct BundleSpec {
    GradedAlgebra base;
    std::vector<GradedAlgebra::Elem> w_base;    // [0..top_degree], w0 = 1
    std::vector<GradedAlgebra::Elem> w_bundle;  // [0..top_degree], v0 = 1, 0 above rank
    int rank = 1;
    std::string base_name;
    std::string bundle_name;

    void validate() const;
};

// The algebra of the fiberwise projectivization P(xi): free over the base
// on 1, c, ..., c^{rank-1} with c^rank reduced by the defining relation
// c^k + c^{k-1} v1 + ... + vk = 0. Top evaluation picks the coefficient
// of (top of base) * c^{rank-1}.
struct ProjectiveBundle {
    GradedAlgebra alg;
    int rank = 1;
    int base_dim = 0;  // number of base basis elements

    int pair_index(int base_idx, int cpow) const { return cpow * base_dim + base_idx; }
    GradedAlgebra::Elem lift(const GradedAlgebra::Elem& base_elem, int cpow) const;
};

ProjectiveBundle projectivize(const BundleSpec& spec);

// Graded components of w(P(xi)) = p*(w(M)) * sum_i (1+c)^{k-i} v_i.
std::vector<GradedAlgebra::Elem> total_w_projective(const BundleSpec& spec,
                                                    const ProjectiveBundle& proj);
std::vector<GradedAlgebra::Elem> total_w_projective(const BundleSpec& spec);

// Sum of n-th powers of the formal roots of the total class, evaluated on
// the fundamental class: the image under phi^n. Requires top_degree == n.
int phi_direct(const GradedAlgebra& alg, const std::vector<GradedAlgebra::Elem>& total_w,
               int n);

// Reads the normal profile off the bundle's classes by top evaluation.
NormalProfile bundle_profile(const BundleSpec& spec);

struct CrossCheckResult {
    int lhs = 0;  // phi^n of the projectivization, computed in cohomology
    int rhs = 0;  // evaluation of I_{n,d} on the bundle profile
    bool ok() const { return lhs == rhs; }
};

// Both routes to phi^n[P(xi)] for a rank n-d+1 bundle over a d-manifold.
CrossCheckResult cross_check(int n, const BundleSpec& spec);

struct OracleCase {
    BundleSpec spec;
    int n = 0;
};

struct OracleOutcome {
    std::string base;
    std::string bundle;
    int n = 0;
    int d = 0;
    int lhs = 0;
    int rhs = 0;
    bool ok = false;
};

// Bases of dimension <= 3 (point, RP1, RP2, RP3, RP1xRP1, RP1xRP2) with
// sums of tautological line bundles and trivial summands, for every
// n <= 10 with n != 2^k - 1 and rank n-d+1 in [2, 9].
std::vector<OracleCase> default_catalog();
std::vector<OracleOutcome> run_cases(const std::vector<OracleCase>& cases);

}  // namespace cobord
