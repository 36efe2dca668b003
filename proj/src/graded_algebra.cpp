#include "cobord/graded_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "cobord/ind.hpp"

namespace cobord {

GradedAlgebra::Elem GradedAlgebra::unit() const { return basis_elem(unit_index); }

GradedAlgebra::Elem GradedAlgebra::basis_elem(int i) const {
    Elem e = zero();
    e[i] = 1;
    return e;
}

int GradedAlgebra::find_basis(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (basis[i].name == name) return i;
    return -1;
}

bool GradedAlgebra::is_zero(const Elem& a) {
    for (auto x : a)
        if (x) return false;
    return true;
}

GradedAlgebra::Elem GradedAlgebra::add(Elem a, const Elem& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}

GradedAlgebra::Elem GradedAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (int i = 0; i < dim(); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim(); ++j) {
            if (!b[j]) continue;
            const Elem& prod = mult[i][j];
            for (int k = 0; k < dim(); ++k) out[k] ^= prod[k];
        }
    }
    return out;
}

GradedAlgebra::Elem GradedAlgebra::pow(const Elem& a, int e) const {
    Elem out = unit();
    for (int t = 0; t < e; ++t) out = mul(out, a);
    return out;
}

GradedAlgebra::Elem GradedAlgebra::graded_part(const Elem& a, int d) const {
    Elem out = zero();
    for (int i = 0; i < dim(); ++i)
        if (a[i] && basis[i].degree == d) out[i] = 1;
    return out;
}

int GradedAlgebra::top_eval(const Elem& a) const { return a[top_index]; }

std::string GradedAlgebra::describe(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i)
        if (a[i]) {
            if (!first) os << '+';
            first = false;
            os << basis[i].name;
        }
    return first ? "0" : os.str();
}

void GradedAlgebra::validate() const {
    if (unit_index < 0 || top_index < 0) throw std::logic_error("algebra: missing unit or top");
    if (basis[unit_index].degree != 0) throw std::logic_error("algebra: unit not in degree 0");
    if (basis[top_index].degree != top_degree)
        throw std::logic_error("algebra: top element degree mismatch");
    int top_count = 0;
    for (const auto& b : basis) {
        if (b.degree < 0 || b.degree > top_degree)
            throw std::logic_error("algebra: basis degree out of range");
        if (b.degree == top_degree) ++top_count;
    }
    if (top_count != 1) throw std::logic_error("algebra: top degree not one-dimensional");
    for (int i = 0; i < dim(); ++i) {
        if (!(mul(basis_elem(i), unit()) == basis_elem(i)))
            throw std::logic_error("algebra: unit law fails");
        for (int j = 0; j < dim(); ++j) {
            const Elem& p = mult[i][j];
            int d = basis[i].degree + basis[j].degree;
            for (int k = 0; k < dim(); ++k)
                if (p[k] && basis[k].degree != d)
                    throw std::logic_error("algebra: multiplication not graded");
            if (d > top_degree && !is_zero(p))
                throw std::logic_error("algebra: product above top degree");
            if (!(mult[i][j] == mult[j][i])) throw std::logic_error("algebra: not commutative");
            for (int k = 0; k < dim(); ++k)
                if (!(mul(mult[i][j], basis_elem(k)) == mul(basis_elem(i), mult[j][k])))
                    throw std::logic_error("algebra: not associative");
        }
    }
}

GradedAlgebra point_algebra() {
    GradedAlgebra a;
    a.basis = {{"1", 0}};
    a.mult = {{GradedAlgebra::Elem{1}}};
    a.unit_index = a.top_index = 0;
    a.top_degree = 0;
    return a;
}

GradedAlgebra truncated_polynomial_algebra(int m, const std::string& generator) {
    if (m < 0) throw std::invalid_argument("truncated_polynomial_algebra: negative degree");
    GradedAlgebra a;
    for (int i = 0; i <= m; ++i) {
        std::string name =
            i == 0 ? "1" : (i == 1 ? generator : generator + "^" + std::to_string(i));
        a.basis.push_back({name, i});
    }
    a.unit_index = 0;
    a.top_index = m;
    a.top_degree = m;
    a.mult.assign(m + 1, std::vector<GradedAlgebra::Elem>(m + 1, a.zero()));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            if (i + j <= m) a.mult[i][j][i + j] = 1;
    return a;
}

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
    GradedAlgebra t;
    const int na = a.dim(), nb = b.dim();
    auto pair_name = [&](int i, int j) {
        if (a.basis[i].name == "1") return b.basis[j].name;
        if (b.basis[j].name == "1") return a.basis[i].name;
        return a.basis[i].name + "*" + b.basis[j].name;
    };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            t.basis.push_back({pair_name(i, j), a.basis[i].degree + b.basis[j].degree});
    auto idx = [&](int i, int j) { return i * nb + j; };
    t.unit_index = idx(a.unit_index, b.unit_index);
    t.top_index = idx(a.top_index, b.top_index);
    t.top_degree = a.top_degree + b.top_degree;
    t.mult.assign(na * nb, std::vector<GradedAlgebra::Elem>(na * nb, t.zero()));
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    const auto& pa = a.mult[i1][i2];
                    const auto& pb = b.mult[j1][j2];
                    auto& out = t.mult[idx(i1, j1)][idx(i2, j2)];
                    for (int k1 = 0; k1 < na; ++k1)
                        if (pa[k1])
                            for (int k2 = 0; k2 < nb; ++k2)
                                if (pb[k2]) out[idx(k1, k2)] ^= 1;
                }
    return t;
}

void BundleSpec::validate() const {
    if (rank < 1) throw std::invalid_argument("BundleSpec: rank must be >= 1");
    const std::size_t want = static_cast<std::size_t>(base.top_degree) + 1;
    if (w_base.size() != want || w_bundle.size() != want)
        throw std::invalid_argument("BundleSpec: class lists must have top_degree + 1 entries");
    if (!(w_base[0] == base.unit()) || !(w_bundle[0] == base.unit()))
        throw std::invalid_argument("BundleSpec: w0 and v0 must be the unit");
    for (int i = 0; i <= base.top_degree; ++i) {
        if (!(base.graded_part(w_base[i], i) == w_base[i]) ||
            !(base.graded_part(w_bundle[i], i) == w_bundle[i]))
            throw std::invalid_argument("BundleSpec: class in the wrong degree");
        if (i > rank && !GradedAlgebra::is_zero(w_bundle[i]))
            throw std::invalid_argument("BundleSpec: bundle class above the rank");
    }
}

GradedAlgebra::Elem ProjectiveBundle::lift(const GradedAlgebra::Elem& base_elem,
                                           int cpow) const {
    GradedAlgebra::Elem out = alg.zero();
    for (int b = 0; b < base_dim; ++b)
        if (base_elem[b]) out[pair_index(b, cpow)] = 1;
    return out;
}

ProjectiveBundle projectivize(const BundleSpec& spec) {
    spec.validate();
    const GradedAlgebra& B = spec.base;
    const int k = spec.rank;
    const int nb = B.dim();

    ProjectiveBundle proj;
    proj.rank = k;
    proj.base_dim = nb;
    GradedAlgebra& A = proj.alg;
    A.top_degree = B.top_degree + k - 1;
    for (int j = 0; j < k; ++j)
        for (int b = 0; b < nb; ++b) {
            std::string name = B.basis[b].name;
            if (j > 0) {
                std::string cpart = j == 1 ? "c" : "c^" + std::to_string(j);
                name = name == "1" ? cpart : name + "*" + cpart;
            }
            A.basis.push_back({name, B.basis[b].degree + j});
        }
    A.unit_index = proj.pair_index(B.unit_index, 0);
    A.top_index = proj.pair_index(B.top_index, k - 1);

    // c^m over the module basis 1..c^{k-1} with base coefficients:
    // c^m = sum_j rep[m][j] c^j, using c^k = sum_{i=1}^{k} c^{k-i} v_i.
    std::vector<std::vector<GradedAlgebra::Elem>> rep(2 * k - 1);
    for (int m = 0; m <= 2 * (k - 1); ++m) {
        rep[m].assign(k, B.zero());
        if (m < k) {
            rep[m][m] = B.unit();
            continue;
        }
        for (int i = 1; i <= std::min(k, B.top_degree); ++i) {
            const GradedAlgebra::Elem& vi = spec.w_bundle[i];
            if (GradedAlgebra::is_zero(vi)) continue;
            for (int j = 0; j < k; ++j)
                rep[m][j] = GradedAlgebra::add(rep[m][j], B.mul(vi, rep[m - i][j]));
        }
    }

    const int dim = nb * k;
    A.mult.assign(dim, std::vector<GradedAlgebra::Elem>(dim, A.zero()));
    for (int j1 = 0; j1 < k; ++j1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int j2 = 0; j2 < k; ++j2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    auto p = B.mul(B.basis_elem(b1), B.basis_elem(b2));
                    auto& out = A.mult[proj.pair_index(b1, j1)][proj.pair_index(b2, j2)];
                    for (int j = 0; j < k; ++j) {
                        auto coeff = B.mul(p, rep[j1 + j2][j]);
                        for (int b = 0; b < nb; ++b)
                            if (coeff[b]) out[proj.pair_index(b, j)] ^= 1;
                    }
                }
    return proj;
}

std::vector<GradedAlgebra::Elem> total_w_projective(const BundleSpec& spec,
                                                    const ProjectiveBundle& proj) {
    spec.validate();
    const GradedAlgebra& A = proj.alg;
    const int k = spec.rank;

    // the class of the tautological double cover; for rank 1 the relation
    // has already identified it with v1
    GradedAlgebra::Elem c = A.zero();
    if (k >= 2)
        c = proj.lift(spec.base.unit(), 1);
    else if (spec.base.top_degree >= 1)
        c = proj.lift(spec.w_bundle[1], 0);
    GradedAlgebra::Elem one_plus_c = GradedAlgebra::add(A.unit(), c);

    GradedAlgebra::Elem fiber_sum = A.zero();
    for (int i = 0; i <= std::min(k, spec.base.top_degree); ++i) {
        auto term = A.mul(A.pow(one_plus_c, k - i), proj.lift(spec.w_bundle[i], 0));
        fiber_sum = GradedAlgebra::add(fiber_sum, term);
    }

    GradedAlgebra::Elem base_total = A.zero();
    for (int i = 0; i <= spec.base.top_degree; ++i)
        base_total = GradedAlgebra::add(base_total, proj.lift(spec.w_base[i], 0));

    auto w = A.mul(base_total, fiber_sum);
    std::vector<GradedAlgebra::Elem> parts;
    for (int d = 0; d <= A.top_degree; ++d) parts.push_back(A.graded_part(w, d));
    return parts;
}

std::vector<GradedAlgebra::Elem> total_w_projective(const BundleSpec& spec) {
    return total_w_projective(spec, projectivize(spec));
}

int phi_direct(const GradedAlgebra& alg, const std::vector<GradedAlgebra::Elem>& total_w,
               int n) {
    if (alg.top_degree != n)
        throw std::invalid_argument("phi_direct: algebra top degree must equal n");
    if (total_w.empty() || !(total_w[0] == alg.unit()))
        throw std::invalid_argument("phi_direct: total class must start with 1");
    auto w = [&](int i) {
        return i < static_cast<int>(total_w.size()) ? total_w[i] : alg.zero();
    };
    // Newton recurrence for the root power sums, the w_i playing the
    // elementary symmetric functions: s_j = sum_i w_i s_{j-i} + (j odd) w_j.
    std::vector<GradedAlgebra::Elem> s(n + 1, alg.zero());
    for (int j = 1; j <= n; ++j) {
        if (j % 2) s[j] = GradedAlgebra::add(s[j], w(j));
        for (int i = 1; i < j; ++i)
            s[j] = GradedAlgebra::add(s[j], alg.mul(w(i), s[j - i]));
    }
    return alg.top_eval(alg.graded_part(s[n], n));
}

NormalProfile bundle_profile(const BundleSpec& spec) {
    const int d = spec.base.top_degree;
    if (d == 0) return NormalProfile::point();
    std::map<Partition, int> bits;
    for (const auto& part : partitions_of(d)) {
        GradedAlgebra::Elem prod = spec.base.unit();
        for (int p : part.parts()) prod = spec.base.mul(prod, spec.w_bundle[p]);
        bits[part] = spec.base.top_eval(prod);
    }
    return NormalProfile(d, std::move(bits));
}

CrossCheckResult cross_check(int n, const BundleSpec& spec) {
    spec.validate();
    const int d = spec.base.top_degree;
    if (spec.rank != n - d + 1)
        throw std::invalid_argument("cross_check: need rank = n - d + 1");
    auto proj = projectivize(spec);
    auto w = total_w_projective(spec, proj);
    CrossCheckResult r;
    r.lhs = phi_direct(proj.alg, w, n);
    r.rhs = evaluate(ind_poly(n, d), bundle_profile(spec));
    return r;
}

namespace {

bool power_of_two_minus_one(int n) {
    return ((static_cast<unsigned>(n) + 1) & static_cast<unsigned>(n)) == 0;
}

// A catalog base together with its degree-one tautological generators.
struct CatalogBase {
    GradedAlgebra algebra;
    std::vector<int> taut;
    std::vector<int> factor_dims;
    std::string name;
};

CatalogBase make_rp(int m) {
    CatalogBase b;
    b.algebra = truncated_polynomial_algebra(m, "a");
    b.taut = {b.algebra.find_basis("a")};
    b.factor_dims = {m};
    b.name = "RP" + std::to_string(m);
    return b;
}

CatalogBase make_product(int m1, int m2) {
    CatalogBase b;
    b.algebra = tensor_product(truncated_polynomial_algebra(m1, "a"),
                               truncated_polynomial_algebra(m2, "b"));
    b.taut = {b.algebra.find_basis("a"), b.algebra.find_basis("b")};
    b.factor_dims = {m1, m2};
    b.name = "RP" + std::to_string(m1) + "xRP" + std::to_string(m2);
    return b;
}

std::vector<GradedAlgebra::Elem> split_components(const GradedAlgebra& alg,
                                                  const GradedAlgebra::Elem& total) {
    std::vector<GradedAlgebra::Elem> parts;
    for (int d = 0; d <= alg.top_degree; ++d) parts.push_back(alg.graded_part(total, d));
    return parts;
}

BundleSpec make_spec(const CatalogBase& b, const std::vector<int>& taut_multiplicity,
                     int rank) {
    BundleSpec spec;
    spec.base = b.algebra;
    spec.rank = rank;
    spec.base_name = b.name;

    auto tangent = b.algebra.unit();
    for (std::size_t f = 0; f < b.factor_dims.size(); ++f) {
        auto one_plus =
            GradedAlgebra::add(b.algebra.unit(), b.algebra.basis_elem(b.taut[f]));
        tangent = b.algebra.mul(tangent, b.algebra.pow(one_plus, b.factor_dims[f] + 1));
    }
    spec.w_base = split_components(b.algebra, tangent);

    auto total = b.algebra.unit();
    std::ostringstream bn;
    int taut_total = 0;
    for (std::size_t f = 0; f < taut_multiplicity.size(); ++f) {
        int a = taut_multiplicity[f];
        taut_total += a;
        if (a > 0) {
            auto one_plus =
                GradedAlgebra::add(b.algebra.unit(), b.algebra.basis_elem(b.taut[f]));
            total = b.algebra.mul(total, b.algebra.pow(one_plus, a));
            bn << a << "*taut" << (taut_multiplicity.size() > 1 ? std::to_string(f + 1) : "")
               << "+";
        }
    }
    bn << (rank - taut_total) << "*triv";
    spec.bundle_name = bn.str();
    spec.w_bundle = split_components(b.algebra, total);
    for (int i = rank + 1; i <= b.algebra.top_degree; ++i)
        spec.w_bundle[i] = b.algebra.zero();
    return spec;
}

}  // namespace

std::vector<OracleCase> default_catalog() {
    std::vector<OracleCase> cases;
    auto push = [&](const CatalogBase& b, const std::vector<int>& mult, int n) {
        int d = b.algebra.top_degree;
        int k = n - d + 1;
        if (k < 2 || k > 9) return;
        if (n > 10 || power_of_two_minus_one(n)) return;
        int taut_total = 0;
        for (int a : mult) taut_total += a;
        if (taut_total > k) return;
        cases.push_back({make_spec(b, mult, k), n});
    };

    CatalogBase pt{point_algebra(), {}, {}, "point"};
    for (int n : {2, 4, 5, 6, 8}) push(pt, {}, n);

    auto rp1 = make_rp(1);
    for (int n : {2, 4, 5, 6, 8, 9})
        for (int a : {0, 1, 2}) push(rp1, {a}, n);

    auto rp2 = make_rp(2);
    for (int n : {4, 5, 6, 8, 9, 10})
        for (int a : {0, 1, 2, 3}) push(rp2, {a}, n);

    auto rp3 = make_rp(3);
    for (int n : {4, 5, 6, 8, 9, 10})
        for (int a : {0, 1, 2, 3}) push(rp3, {a}, n);

    auto rp1x1 = make_product(1, 1);
    for (int n : {4, 5, 6, 8, 9, 10})
        for (auto [a1, a2] : std::vector<std::pair<int, int>>{
                 {0, 0}, {1, 0}, {1, 1}, {2, 1}, {0, 2}, {2, 2}})
            push(rp1x1, {a1, a2}, n);

    auto rp1x2 = make_product(1, 2);
    for (int n : {5, 6, 8, 9, 10})
        for (auto [a1, a2] :
             std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {0, 2}, {2, 1}})
            push(rp1x2, {a1, a2}, n);

    return cases;
}

std::vector<OracleOutcome> run_cases(const std::vector<OracleCase>& cases) {
    std::vector<OracleOutcome> out;
    out.reserve(cases.size());
    for (const auto& c : cases) {
        auto r = cross_check(c.n, c.spec);
        out.push_back({c.spec.base_name, c.spec.bundle_name, c.n, c.spec.base.top_degree,
                       r.lhs, r.rhs, r.ok()});
    }
    return out;
}

}  // namespace cobord
