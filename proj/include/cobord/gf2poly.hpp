#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cobord {

// Monomial in the graded variables v1, v2, ... with deg(v_i) = i.
// Exponents are stored sparsely; an absent index means exponent zero.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<int, int> exps);

    static Monomial var(int index, int exp = 1);

    int degree() const { return degree_; }
    bool is_unit() const { return exps_.empty(); }
    const std::map<int, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& rhs) const;

    // Total order: by degree, then lexicographically by variable index with
    // the higher exponent first, so v1^4 < v1^2*v2 < v1*v3 < v2^2 < v4.
    bool operator<(const Monomial& rhs) const;
    bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }

    std::string str() const;

private:
    std::map<int, int> exps_;
    int degree_ = 0;
};

// Partition of a nonnegative integer, parts weakly decreasing.
// Indexes the degree-d monomials: (l1,...,lr) <-> v_{l1}*...*v_{lr}.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition of_monomial(const Monomial& m);
    Monomial monomial() const;

    int weight() const { return weight_; }
    const std::vector<int>& parts() const { return parts_; }

    bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }
    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }

    std::string str() const;  // "2+1+1", empty string for the empty partition
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of d, in descending lexicographic order of parts.
std::vector<Partition> partitions_of(int d);

// Multivariate polynomial over GF(2): a set of monomials (presence = 1).
class PolyGF2 {
public:
    PolyGF2() = default;

    static PolyGF2 zero() { return PolyGF2(); }
    static PolyGF2 one();
    static PolyGF2 var(int index, int exp = 1);
    static PolyGF2 term(const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::set<Monomial>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const;  // max term degree; -1 for the zero polynomial
    bool is_homogeneous(int d) const;  // vacuously true for zero
    PolyGF2 homogeneous_part(int d) const;

    void toggle(const Monomial& m);
    PolyGF2& operator+=(const PolyGF2& rhs);
    PolyGF2 operator+(const PolyGF2& rhs) const;
    PolyGF2 operator*(const PolyGF2& rhs) const;
    bool operator==(const PolyGF2& rhs) const { return terms_ == rhs.terms_; }

    // Canonical text form: terms in monomial order joined by '+',
    // each term like "v1^2*v3"; "0" and "1" for zero and unit.
    std::string str() const;
    static PolyGF2 parse(const std::string& text);

private:
    std::set<Monomial> terms_;
};

}  // namespace cobord
