#include "cobord/symfunc.hpp"

#include <stdexcept>

namespace cobord {

std::vector<PolyGF2> dual_classes(int d) {
    if (d < 0) throw std::invalid_argument("dual_classes: d must be >= 0");
    std::vector<PolyGF2> dual(d + 1);
    dual[0] = PolyGF2::one();
    for (int i = 1; i <= d; ++i)
        for (int j = 0; j < i; ++j) dual[i] += PolyGF2::var(i - j) * dual[j];
    return dual;
}

std::vector<PolyGF2> power_sums(int j_max) {
    if (j_max < 0) throw std::invalid_argument("power_sums: j_max must be >= 0");
    std::vector<PolyGF2> p(j_max + 1);
    for (int j = 1; j <= j_max; ++j) {
        if (j % 2) p[j] += PolyGF2::var(j);
        for (int i = 1; i < j; ++i) p[j] += PolyGF2::var(i) * p[j - i];
    }
    return p;
}

PolyGF2 power_sum(int j) {
    if (j < 1) throw std::invalid_argument("power_sum: j must be >= 1");
    return power_sums(j)[j];
}

PolyGF2 elementary_symmetric(int i, int n_vars) {
    if (i < 0 || n_vars < 0) throw std::invalid_argument("elementary_symmetric: bad arguments");
    if (i == 0) return PolyGF2::one();
    if (i > n_vars) return PolyGF2::zero();
    PolyGF2 out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == i) {
            std::map<int, int> exps;
            for (int k : pick) exps[k] = 1;
            out.toggle(Monomial(std::move(exps)));
            return;
        }
        int need = i - static_cast<int>(pick.size());
        for (int k = next; k <= n_vars - need + 1; ++k) {
            pick.push_back(k);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

PolyGF2 expand_in_variables(const PolyGF2& expr, int n_vars) {
    if (n_vars < expr.degree())
        throw std::invalid_argument(
            "expand_in_variables: need at least deg(expr) variables for a faithful expansion");
    PolyGF2 out;
    for (const auto& m : expr.terms()) {
        PolyGF2 prod = PolyGF2::one();
        for (auto [i, e] : m.exponents()) {
            PolyGF2 ei = elementary_symmetric(i, n_vars);
            for (int t = 0; t < e; ++t) prod = prod * ei;
        }
        out += prod;
    }
    return out;
}

}  // namespace cobord
