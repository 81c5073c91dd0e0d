#include "sympq/laurent_poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "sympq/errors.hpp"

namespace sympq {

Exponent make_exponent(const std::vector<int>& e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars))
        throw StructuralError("too many variables in exponent");
    Exponent out{};
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = static_cast<std::int16_t>(e[i]);
    return out;
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(Exponent{}, c);
}

LaurentPoly LaurentPoly::zero(int nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw StructuralError("bad variable count");
    LaurentPoly p;
    p.nvars_ = nvars;
    return p;
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p = zero(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Exponent{}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponent& e, const Rational& c) {
    LaurentPoly p = zero(nvars);
    for (int i = nvars; i < kMaxVars; ++i)
        if (e[i] != 0) throw StructuralError("exponent uses more than nvars variables");
    if (!c.is_zero()) p.terms_.emplace_back(e, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const std::vector<int>& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) throw StructuralError("exponent length != nvars");
    return monomial(nvars, make_exponent(e), c);
}

LaurentPoly LaurentPoly::variable(int nvars, int var, int power) {
    if (var < 0 || var >= nvars) throw StructuralError("variable index out of range");
    Exponent e{};
    e[var] = static_cast<std::int16_t>(power);
    return monomial(nvars, e);
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms) {
    LaurentPoly p = zero(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    }
    for (const auto& t : p.terms_)
        for (int i = nvars; i < kMaxVars; ++i)
            if (t.first[i] != 0) throw StructuralError("exponent uses more than nvars variables");
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponent{});
}

Rational LaurentPoly::coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return Rational(0);
}

int LaurentPoly::max_exponent(int var) const {
    if (terms_.empty()) throw DomainError("degree of zero polynomial");
    int m = terms_[0].first[var];
    for (const auto& t : terms_) m = std::max<int>(m, t.first[var]);
    return m;
}

int LaurentPoly::min_exponent(int var) const {
    if (terms_.empty()) throw DomainError("degree of zero polynomial");
    int m = terms_[0].first[var];
    for (const auto& t : terms_) m = std::min<int>(m, t.first[var]);
    return m;
}

int LaurentPoly::merge_nvars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ == b.nvars_) return a.nvars_;
    if (a.is_constant() || b.is_constant()) return std::max(a.nvars_, b.nvars_);
    throw StructuralError("Laurent polynomials in different numbers of variables");
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
    nvars_ = merge_nvars(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : -j->second);
            ++j;
        } else {
            Rational c = sign > 0 ? i->second + j->second : i->second - j->second;
            if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled(o, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled(o, -1);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LaurentPoly LaurentPoly::mul_monomial(const Exponent& e, const Rational& c) const {
    LaurentPoly p = zero(nvars_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    // Shifting every exponent by e preserves the lexicographic order.
    for (const auto& t : terms_) {
        Exponent s;
        for (int i = 0; i < kMaxVars; ++i) s[i] = static_cast<std::int16_t>(t.first[i] + e[i]);
        p.terms_.emplace_back(s, t.second * c);
    }
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    int nv = LaurentPoly::merge_nvars(a, b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly::zero(nv);
    if (b.is_monomial()) {
        LaurentPoly p = a.mul_monomial(b.terms_[0].first, b.terms_[0].second);
        p.nvars_ = nv;
        return p;
    }
    if (a.is_monomial()) {
        LaurentPoly p = b.mul_monomial(a.terms_[0].first, a.terms_[0].second);
        p.nvars_ = nv;
        return p;
    }
    std::unordered_map<Exponent, Rational, ExponentHash> acc;
    acc.reserve(a.terms_.size() * 2 + b.terms_.size() * 2);
    Rational prod;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            Exponent e;
            for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::int16_t>(s.first[i] + t.first[i]);
            prod = s.second;
            prod *= t.second;
            acc[e] += prod;
        }
    }
    LaurentPoly p = LaurentPoly::zero(nv);
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) { return x.first < y.first; });
    return p;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative power of a Laurent polynomial");
    LaurentPoly result = constant(nvars_, Rational(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Rational LaurentPoly::eval(const std::vector<Rational>& pt) const {
    if (static_cast<int>(pt.size()) < nvars_) throw StructuralError("evaluation point too short");
    Rational total(0);
    for (const auto& t : terms_) {
        Rational v = t.second;
        for (int i = 0; i < nvars_; ++i)
            if (t.first[i] != 0) v *= pt[i].pow(t.first[i]);
        total += v;
    }
    return total;
}

LaurentPoly LaurentPoly::substitute(int var, const Rational& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent e = t.first;
        int k = e[var];
        e[var] = 0;
        out.emplace_back(e, t.second * value.pow(k));
    }
    return from_terms(nvars_, std::move(out));
}

LaurentPoly LaurentPoly::signed_permute(const std::vector<int>& perm, const std::vector<int>& sign) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent e{};
        for (int i = 0; i < nvars_; ++i)
            e[perm[i]] = static_cast<std::int16_t>(sign[i] < 0 ? -t.first[i] : t.first[i]);
        out.emplace_back(e, t.second);
    }
    return from_terms(nvars_, std::move(out));
}

LaurentPoly LaurentPoly::embed(int new_nvars, const std::vector<int>& var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent e{};
        for (int i = 0; i < nvars_; ++i) {
            if (t.first[i] == 0) continue;
            if (var_map[i] < 0 || var_map[i] >= new_nvars) throw StructuralError("bad variable map");
            e[var_map[i]] = t.first[i];
        }
        out.emplace_back(e, t.second);
    }
    return from_terms(new_nvars, std::move(out));
}

LaurentPoly LaurentPoly::coefficient_in(int var, int k) const {
    LaurentPoly p = zero(nvars_);
    for (const auto& t : terms_) {
        if (t.first[var] != k) continue;
        Exponent e = t.first;
        e[var] = 0;
        p.terms_.emplace_back(e, t.second);
    }
    return p;
}

std::string LaurentPoly::to_string(const std::string& prefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (int i = 0; i < kMaxVars; ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += prefix + std::to_string(i + 1);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        const Rational& c = it->second;
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

std::size_t LaurentPoly::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) h = h * 1000003u ^ (ExponentHash{}(t.first) + 31 * t.second.hash());
    return h;
}

namespace {

LaurentPoly divide_by_monomial(const LaurentPoly& num, const LaurentPoly::Term& d, int nv) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(num.size());
    Rational inv = d.second.inverse();
    for (const auto& t : num.terms()) {
        Exponent e;
        for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::int16_t>(t.first[i] - d.first[i]);
        out.emplace_back(e, t.second * inv);
    }
    return LaurentPoly::from_terms(nv, std::move(out));
}

int varying_variable(const LaurentPoly& p) {
    for (int v = 0; v < kMaxVars; ++v)
        if (p.max_exponent(v) != p.min_exponent(v)) return v;
    return -1;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den, int pivot_var) {
    if (den.is_zero()) throw StructuralError("exact_divide by the zero polynomial");
    int nv = std::max(num.nvars(), den.nvars());
    if (!num.is_zero() && !den.is_constant() && !num.is_constant() && num.nvars() != den.nvars())
        throw StructuralError("exact_divide operands in different numbers of variables");
    if (num.is_zero()) return LaurentPoly::zero(nv);
    if (den.is_monomial()) return divide_by_monomial(num, den.terms()[0], nv);
    if (pivot_var < 0 || pivot_var >= kMaxVars) throw StructuralError("bad pivot variable");

    int p = pivot_var;
    if (den.max_exponent(p) == den.min_exponent(p)) p = varying_variable(den);
    const int dmax = den.max_exponent(p);
    const int dspan = dmax - den.min_exponent(p);
    const LaurentPoly lc = den.coefficient_in(p, dmax);
    const int lc_pivot = lc.is_monomial() ? -1 : varying_variable(lc);

    LaurentPoly quotient = LaurentPoly::zero(nv);
    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const int rmax = rem.max_exponent(p);
        if (rmax - rem.min_exponent(p) < dspan)
            throw DivisibilityError("nonzero remainder in exact_divide");
        LaurentPoly c = rem.coefficient_in(p, rmax);
        LaurentPoly qc = lc_pivot < 0 ? divide_by_monomial(c, lc.terms()[0], nv)
                                      : exact_divide(c, lc, lc_pivot);
        Exponent shift{};
        shift[p] = static_cast<std::int16_t>(rmax - dmax);
        LaurentPoly step = qc.mul_monomial(shift, Rational(1));
        rem -= step * den;
        quotient += step;
    }
    return quotient;
}

}  // namespace sympq
