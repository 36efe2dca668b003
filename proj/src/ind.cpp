#include "cobord/ind.hpp"

#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cobord/symfunc.hpp"

namespace cobord {

int binom_mod2(std::uint64_t n, std::uint64_t j) { return (j & ~n) == 0 ? 1 : 0; }

int ind_period(int d) {
    if (d < 0) throw std::invalid_argument("ind_period: d must be >= 0");
    int p = 2;
    while (p <= d) p <<= 1;
    return p;
}

namespace {

PolyGF2 ind_from_definition(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("ind_poly: n, d must be >= 0");
    auto dual = dual_classes(d);
    auto p = power_sums(d);
    PolyGF2 out;
    if (((n - d + 1) % 2 + 2) % 2) out += dual[d];
    for (int j = 1; j <= d; ++j)
        if (binom_mod2(n, j)) out += dual[d - j] * p[j];
    return out;
}

}  // namespace

PolyGF2 ind_poly_raw(int n, int d) { return ind_from_definition(n, d); }

PolyGF2 ind_poly(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("ind_poly: n, d must be >= 0");
    static std::map<std::pair<int, int>, PolyGF2> cache;
    static std::mutex mutex;
    const std::pair<int, int> key{n % ind_period(d), d};
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PolyGF2 value = ind_from_definition(key.first, d);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

bool ind_marginal_cell(int n, int d) {
    const bool pow2_minus_1 = ((static_cast<unsigned>(n) + 1) & static_cast<unsigned>(n)) == 0;
    return n <= d || pow2_minus_1;
}

IndTable ind_table(int n_max, int d_max) {
    if (n_max < 0 || d_max < 0) throw std::invalid_argument("ind_table: bounds must be >= 0");
    IndTable t;
    t.n_max = n_max;
    t.d_max = d_max;
    t.cells.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        t.cells[n].reserve(d_max + 1);
        for (int d = 0; d <= d_max; ++d) t.cells[n].push_back(ind_poly(n, d));
    }
    return t;
}

std::string IndTable::text() const {
    std::vector<std::vector<std::string>> rendered(n_max + 1);
    std::vector<std::size_t> width(d_max + 1, 1);
    for (int n = 0; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d) {
            std::string s = cells[n][d].str();
            if (ind_marginal_cell(n, d)) s += '*';
            rendered[n].push_back(s);
            width[d] = std::max(width[d], s.size());
        }
    std::size_t nw = std::to_string(n_max).size() + 3;
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(nw)) << "n\\d";
    for (int d = 0; d <= d_max; ++d)
        os << "  " << std::setw(static_cast<int>(width[d])) << d;
    os << '\n';
    for (int n = 0; n <= n_max; ++n) {
        os << std::setw(static_cast<int>(nw)) << n;
        for (int d = 0; d <= d_max; ++d)
            os << "  " << std::setw(static_cast<int>(width[d])) << rendered[n][d];
        os << '\n';
    }
    return os.str();
}

std::string IndTable::csv() const {
    std::ostringstream os;
    os << "n,d,expr,marginal\n";
    for (int n = 0; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d)
            os << n << ',' << d << ',' << cells[n][d].str() << ','
               << (ind_marginal_cell(n, d) ? 1 : 0) << '\n';
    return os.str();
}

bool verify_periodicity(int n, int d) {
    return ind_poly_raw(n, d) == ind_poly_raw(n + ind_period(d), d);
}

bool verify_initial_zeros(int k, int m_odd) {
    if (k < 1) throw std::invalid_argument("verify_initial_zeros: k must be >= 1");
    if (m_odd < 1 || m_odd % 2 == 0)
        throw std::invalid_argument("verify_initial_zeros: m_odd must be odd and >= 1");
    const int n = m_odd * (1 << k) - 1;
    const int top = 1 << k;
    for (int d = 0; d < top; ++d)
        if (!ind_poly_raw(n, d).is_zero()) return false;
    return ind_poly_raw(n, top) == PolyGF2::var(1, top);
}

}  // namespace cobord
