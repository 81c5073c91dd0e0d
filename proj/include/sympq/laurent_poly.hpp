#ifndef SYMPQ_LAURENT_POLY_HPP
#define SYMPQ_LAURENT_POLY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sympq/rational.hpp"

namespace sympq {

inline constexpr int kMaxVars = 8;

// Unused slots are always zero, so lexicographic comparison of the whole
// array is the lexicographic order on the first nvars entries.
using Exponent = std::array<std::int16_t, kMaxVars>;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept {
        std::size_t h = 0;
        for (auto v : e) h = h * 131 + static_cast<std::uint16_t>(v);
        return h;
    }
};

Exponent make_exponent(const std::vector<int>& e);

// Sparse Laurent polynomial over Q in nvars variables.
//
// A constant may be combined with a polynomial in any number of variables;
// otherwise both operands must have the same nvars.
class LaurentPoly {
public:
    using Term = std::pair<Exponent, Rational>;

    LaurentPoly() = default;
    template <std::integral I>
    LaurentPoly(I c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(const Rational& c);

    static LaurentPoly zero(int nvars);
    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(int nvars, const Exponent& e, const Rational& c = Rational(1));
    static LaurentPoly monomial(int nvars, const std::vector<int>& e, const Rational& c = Rational(1));
    // x_var^power
    static LaurentPoly variable(int nvars, int var, int power = 1);
    // Terms need not be sorted or distinct.
    static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational coeff(const Exponent& e) const;
    Rational constant_term() const { return coeff(Exponent{}); }

    int max_exponent(int var) const;
    int min_exponent(int var) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(int e) const;
    LaurentPoly mul_monomial(const Exponent& e, const Rational& c) const;

    Rational eval(const std::vector<Rational>& pt) const;
    // Substitutes a value for one variable; the result keeps nvars.
    LaurentPoly substitute(int var, const Rational& value) const;
    // Variable i goes to sign[i] < 0 ? x_{perm[i]}^{-1} : x_{perm[i]}.
    LaurentPoly signed_permute(const std::vector<int>& perm, const std::vector<int>& sign) const;
    // Moves variable i to position var_map[i] in a ring with new_nvars variables.
    LaurentPoly embed(int new_nvars, const std::vector<int>& var_map) const;
    // Coefficient of x_var^k, as a polynomial free of x_var.
    LaurentPoly coefficient_in(int var, int k) const;

    // Descending lexicographic order, e.g. "2*x1 + 2*x1^-1".
    std::string to_string(const std::string& prefix = "x") const;
    std::size_t hash() const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;  // ascending lexicographic, nonzero coefficients

    static int merge_nvars(const LaurentPoly& a, const LaurentPoly& b);
    void add_scaled(const LaurentPoly& o, int sign);
};

// Exact quotient num/den in the Laurent ring. Long division in pivot_var;
// when the leading coefficient of den is not a monomial the coefficient
// division recurses on another variable.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den, int pivot_var);

}  // namespace sympq

#endif
