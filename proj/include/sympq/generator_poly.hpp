#ifndef SYMPQ_GENERATOR_POLY_HPP
#define SYMPQ_GENERATOR_POLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sympq/rational.hpp"

namespace sympq {

// Monomials in generators g_1, g_2, ... are keyed by their index multiset,
// stored weakly decreasing. Display order: higher degree first, then
// lexicographic on the index list.
struct MonomialOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a < b;
    }
};

inline int monomial_degree(const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline std::vector<int> monomial_product(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), std::greater<int>());
    return out;
}

// Polynomial in commuting generators over Q. Tag supplies the symbol used
// for printing and canonical(), which picks the normal form used by ==.
template <class Tag>
class GeneratorPoly {
public:
    using Map = std::map<std::vector<int>, Rational, MonomialOrder>;

    GeneratorPoly() = default;
    template <std::integral I>
    GeneratorPoly(I c) : GeneratorPoly(Rational(c)) {}
    GeneratorPoly(const Rational& c) {
        if (!c.is_zero()) terms_.emplace(std::vector<int>{}, c);
    }

    // g_r, with g_0 = 1 and g_r = 0 for r < 0.
    static GeneratorPoly gen(int r) {
        if (r < 0) return {};
        if (r == 0) return GeneratorPoly(1);
        return monomial({r});
    }
    static GeneratorPoly monomial(std::vector<int> indices, const Rational& c = Rational(1)) {
        std::sort(indices.begin(), indices.end(), std::greater<int>());
        GeneratorPoly p;
        if (!c.is_zero()) p.terms_.emplace(std::move(indices), c);
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const std::vector<int>& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    // -1 for zero.
    int max_degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.begin()->first); }
    int min_degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.rbegin()->first); }
    GeneratorPoly homogeneous_part(int d) const {
        GeneratorPoly p;
        for (const auto& [m, c] : terms_)
            if (monomial_degree(m) == d) p.terms_.emplace(m, c);
        return p;
    }

    void add_term(const std::vector<int>& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GeneratorPoly& operator+=(const GeneratorPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GeneratorPoly& operator-=(const GeneratorPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    GeneratorPoly& operator*=(const Rational& c) {
        if (c.is_zero()) terms_.clear();
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend GeneratorPoly operator+(GeneratorPoly a, const GeneratorPoly& b) { return a += b; }
    friend GeneratorPoly operator-(GeneratorPoly a, const GeneratorPoly& b) { return a -= b; }
    friend GeneratorPoly operator*(GeneratorPoly a, const Rational& c) { return a *= c; }
    friend GeneratorPoly operator*(const Rational& c, GeneratorPoly a) { return a *= c; }
    GeneratorPoly operator-() const { return *this * Rational(-1); }
    friend GeneratorPoly operator*(const GeneratorPoly& a, const GeneratorPoly& b) {
        GeneratorPoly p;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(monomial_product(ma, mb), ca * cb);
        return p;
    }
    GeneratorPoly& operator*=(const GeneratorPoly& o) { return *this = *this * o; }

    GeneratorPoly pow(int e) const {
        GeneratorPoly r(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Equality in the ring (normal forms), not of stored representatives.
    friend bool operator==(const GeneratorPoly& a, const GeneratorPoly& b) {
        return Tag::canonical(a - b).is_zero();
    }
    bool same_representative(const GeneratorPoly& o) const { return terms_ == o.terms_; }

    // e.g. "q[2,1] - 2*q[3] - 2*q[1]"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string mono;
            if (!m.empty()) {
                mono = std::string(Tag::symbol) + "[";
                for (std::size_t i = 0; i < m.size(); ++i) mono += (i ? "," : "") + std::to_string(m[i]);
                mono += "]";
            }
            std::string term;
            if (mono.empty()) term = c.to_string();
            else if (c.is_one()) term = mono;
            else if (c == Rational(-1)) term = "-" + mono;
            else term = c.to_string() + "*" + mono;
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

private:
    Map terms_;
};

}  // namespace sympq

#endif
