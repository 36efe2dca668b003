#include "cobord/gf2poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cobord {

namespace {

int degree_of(const std::map<int, int>& exps) {
    int d = 0;
    for (auto [i, e] : exps) d += i * e;
    return d;
}

}  // namespace

Monomial::Monomial(std::map<int, int> exps) : exps_(std::move(exps)) {
    for (auto it = exps_.begin(); it != exps_.end();) {
        if (it->first < 1) throw std::invalid_argument("Monomial: variable index must be >= 1");
        if (it->second < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (it->second == 0)
            it = exps_.erase(it);
        else
            ++it;
    }
    degree_ = degree_of(exps_);
}

Monomial Monomial::var(int index, int exp) {
    return Monomial(std::map<int, int>{{index, exp}});
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    std::map<int, int> out = exps_;
    for (auto [i, e] : rhs.exps_) out[i] += e;
    return Monomial(std::move(out));
}

bool Monomial::operator<(const Monomial& rhs) const {
    if (degree_ != rhs.degree_) return degree_ < rhs.degree_;
    auto a = exps_.begin(), b = rhs.exps_.begin();
    while (a != exps_.end() && b != rhs.exps_.end()) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second > b->second;
        ++a;
        ++b;
    }
    return false;  // equal (same degree and both exhausted, by degree equality)
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [i, e] : exps_) {
        if (!first) os << '*';
        first = false;
        os << 'v' << i;
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::of_monomial(const Monomial& m) {
    std::vector<int> parts;
    for (auto [i, e] : m.exponents())
        for (int t = 0; t < e; ++t) parts.push_back(i);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Monomial Partition::monomial() const {
    std::map<int, int> exps;
    for (int p : parts_) exps[p] += 1;
    return Monomial(std::move(exps));
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << '+';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    if (text.empty()) return Partition();
    std::vector<int> parts;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, '+')) parts.push_back(std::stoi(piece));
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

PolyGF2 PolyGF2::one() { return term(Monomial()); }

PolyGF2 PolyGF2::var(int index, int exp) { return term(Monomial::var(index, exp)); }

PolyGF2 PolyGF2::term(const Monomial& m) {
    PolyGF2 p;
    p.terms_.insert(m);
    return p;
}

bool PolyGF2::is_one() const { return terms_.size() == 1 && terms_.begin()->is_unit(); }

int PolyGF2::degree() const {
    int d = -1;
    for (const auto& m : terms_) d = std::max(d, m.degree());
    return d;
}

bool PolyGF2::is_homogeneous(int d) const {
    for (const auto& m : terms_)
        if (m.degree() != d) return false;
    return true;
}

PolyGF2 PolyGF2::homogeneous_part(int d) const {
    PolyGF2 out;
    for (const auto& m : terms_)
        if (m.degree() == d) out.terms_.insert(m);
    return out;
}

void PolyGF2::toggle(const Monomial& m) {
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
}

PolyGF2& PolyGF2::operator+=(const PolyGF2& rhs) {
    for (const auto& m : rhs.terms_) toggle(m);
    return *this;
}

PolyGF2 PolyGF2::operator+(const PolyGF2& rhs) const {
    PolyGF2 out = *this;
    out += rhs;
    return out;
}

PolyGF2 PolyGF2::operator*(const PolyGF2& rhs) const {
    PolyGF2 out;
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_) out.toggle(a * b);
    return out;
}

std::string PolyGF2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : terms_) {
        if (!first) os << '+';
        first = false;
        os << m.str();
    }
    return os.str();
}

PolyGF2 PolyGF2::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "0") return PolyGF2::zero();
    PolyGF2 out;
    std::istringstream is(s);
    std::string termtext;
    while (std::getline(is, termtext, '+')) {
        if (termtext == "1") {
            out.toggle(Monomial());
            continue;
        }
        std::map<int, int> exps;
        std::istringstream ts(termtext);
        std::string factor;
        while (std::getline(ts, factor, '*')) {
            if (factor.empty() || factor[0] != 'v')
                throw std::invalid_argument("PolyGF2::parse: bad factor '" + factor + "'");
            auto caret = factor.find('^');
            int idx = std::stoi(factor.substr(1, caret == std::string::npos
                                                     ? std::string::npos
                                                     : caret - 1));
            int exp = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
            exps[idx] += exp;
        }
        out.toggle(Monomial(std::move(exps)));
    }
    return out;
}

}  // namespace cobord
