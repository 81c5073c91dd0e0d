#include "sympq/factorial.hpp"

#include <numeric>

#include "sympq/errors.hpp"
#include "sympq/ring_matrix.hpp"
#include "sympq/tableaux.hpp"

namespace sympq {

FactorialParams FactorialParams::parse(std::string_view text) {
    FactorialParams p;
    std::string s(text);
    if (s.empty()) return p;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        p.values.push_back(Rational::parse(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return p;
}

const Rational& FactorialParams::at(int i) const {
    if (i < 0 || i >= size())
        throw DomainError("factorial parameter a_" + std::to_string(i) + " not supplied (have " +
                          std::to_string(size()) + ")");
    return values[i];
}

std::vector<Rational> FactorialParams::slice(int from, int to) const {
    std::vector<Rational> out;
    for (int i = from; i < to; ++i) out.push_back(at(i));
    return out;
}

std::string FactorialParams::to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) s += (i ? "," : "") + values[i].to_string();
    return s;
}

Rational elementary(int k, const std::vector<Rational>& xs) {
    if (k < 0 || k > static_cast<int>(xs.size())) return Rational(0);
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = Rational(1);
    for (const auto& x : xs)
        for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
    return e[k];
}

Rational factorial_monomial(const Rational& x, const FactorialParams& a, int r) {
    Rational p(1);
    for (int i = 0; i < r; ++i) p *= x + a.at(i);
    return p;
}

LaurentPoly factorial_monomial(const LaurentPoly& x, const FactorialParams& a, int r) {
    LaurentPoly p = LaurentPoly::constant(x.nvars(), Rational(1));
    for (int i = 0; i < r; ++i) p *= x + LaurentPoly::constant(x.nvars(), a.at(i));
    return p;
}

LaurentPoly g_tilde_fac(int d, const FactorialParams& a, int nvars, int var) {
    if (d < 0) return LaurentPoly::zero(nvars);
    if (d == 0) return LaurentPoly::constant(nvars, Rational(1));
    LaurentPoly x = LaurentPoly::variable(nvars, var, 1), xi = LaurentPoly::variable(nvars, var, -1);
    LaurentPoly num = (factorial_monomial(x, a, d) - factorial_monomial(xi, a, d)) * (x + xi) * Rational(2);
    return exact_divide(num, x - xi, var);
}

LaurentPoly g_tilde_fac_from_g(int r, const FactorialParams& a, FgReading reading) {
    if (r <= 0) return g_tilde_fac(r, a);
    LaurentPoly out = LaurentPoly::zero(1);
    for (int k = 1; k <= r; ++k) {
        int last = reading == FgReading::FullPrefix ? r : r - k + 1;
        out += g_tilde(k) * elementary(r - k, a.slice(0, last));
    }
    return out;
}

Rational d_coeff(const StrictPartition& lam, const StrictPartition& mu, const FactorialParams& a) {
    if (lam.length() != mu.length()) throw DomainError("d coefficients need partitions of equal length");
    const int l = lam.length();
    RingMatrix<Rational> m(l, l);
    for (int i = 0; i < l; ++i) {
        std::vector<Rational> prefix = a.slice(0, lam[i]);
        for (int j = 0; j < l; ++j) m(i, j) = elementary(lam[i] - mu[j], prefix);
    }
    return determinant(m);
}

GammaElement ufac_Q(const StrictPartition& lam, const FactorialParams& a) {
    GammaElement out;
    for (const auto& mu : strict_subpartitions(lam)) {
        if (mu.length() != lam.length()) continue;
        Rational d = d_coeff(lam, mu, a);
        if (!d.is_zero()) out += usymp_Q(mu) * d;
    }
    return out;
}

GammaElement ufac_Q_pair(int r, int s, const FactorialParams& a) {
    if (r == s) return {};
    if (r < s) return -ufac_Q_pair(s, r, a);
    if (s < 0) return {};
    if (s == 0) return ufac_Q(StrictPartition({r}), a);
    return ufac_Q(StrictPartition({r, s}), a);
}

GammaElement R_coeff(int r, int k, const FactorialParams& a) {
    if (k < 0 || k > r) return {};
    if (k == r) return GammaElement(1);
    if (k == 0) return ufac_Q(StrictPartition({r}), a);
    std::vector<Rational> shifted{Rational(0)};
    for (int i = k + 1; i <= r - 1; ++i) shifted.push_back(a.at(i));
    return ufac_Q(StrictPartition({r - k}), FactorialParams(std::move(shifted)));
}

GammaElement ufac_Q_skew(const StrictPartition& lam, const StrictPartition& mu, const FactorialParams& a) {
    const int r = lam.length();
    std::vector<int> beta = mu.parts();
    if ((lam.length() + mu.length()) % 2 == 1) beta.push_back(0);
    const int s = static_cast<int>(beta.size());
    RingMatrix<GammaElement> m(r + s, r + s);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            m(i, j) = ufac_Q_pair(lam[i], lam[j], a);
            m(j, i) = -m(i, j);
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) {
            m(i, r + j) = R_coeff(lam[i], beta[s - 1 - j], a);
            m(r + j, i) = -m(i, r + j);
        }
    return pfaffian(m);
}

LaurentPoly fac_tableau_sum(const SkewShiftedShape& shape, int n, const FactorialParams& a) {
    if (a.size() == 0 || !a.at(0).is_zero()) throw DomainError("factorial tableau sums need a_0 = 0");
    const int span = shape.outer()[0];
    if (span > 0) a.at(span - 1);  // every a_{j-i} that can occur
    return weighted_tableau_sum(shape, n, true, [&](int code, int row, int col) {
        const int level = code / 4, t = code % 4;
        LaurentPoly x = LaurentPoly::variable(n, level, t < 2 ? 1 : -1);
        Rational c = a.at(col - row);
        return x + LaurentPoly::constant(n, t % 2 == 0 ? -c : c);
    });
}

bool check_rel_e(const FactorialParams& a, int r, int i, int j) {
    Rational lhs(0);
    for (int k = j; k <= r - i; ++k)
        lhs += elementary(k - j, a.slice(0, k)) * elementary(r - k - i, a.slice(k + 1, r));
    return lhs == elementary(r - i - j, a.slice(0, r));
}

namespace {

std::vector<int> range(int from, int to) {
    std::vector<int> v(to - from);
    std::iota(v.begin(), v.end(), from);
    return v;
}

CheckResult mismatch(const std::string& what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    auto clip = [](std::string s) { return s.size() > 240 ? s.substr(0, 240) + " ..." : s; };
    return {false, what + ": lhs " + clip(lhs.to_string()) + " | rhs " + clip(rhs.to_string())};
}

}  // namespace

CheckResult check_Q_equals_Rg(int r, int n, const FactorialParams& a) {
    if (n < 1 || n + 1 > kMaxVars) throw DomainError("too many variables");
    if (r < 0) throw DomainError("negative row length");
    const int N = n + 1;
    auto sp_all = AlphabetSpecializer::symplectic(N, range(0, N));
    auto sp_x = AlphabetSpecializer::symplectic(N, range(0, n));
    LaurentPoly lhs = sp_all.apply(ufac_Q(r == 0 ? StrictPartition() : StrictPartition({r}), a));
    LaurentPoly rhs = LaurentPoly::zero(N);
    for (int k = 0; k <= r; ++k) rhs += sp_x.apply(R_coeff(r, k, a)) * g_tilde_fac(k, a, N, n);
    if (lhs == rhs) return {};
    return mismatch("Q^C_(" + std::to_string(r) + ")(x,y|a)", lhs, rhs);
}

CheckResult check_fac_separation(const StrictPartition& lam, int n, int m, const FactorialParams& a) {
    if (n < 1 || m < 1 || n + m > kMaxVars) throw DomainError("separation check needs n, m >= 1 and n + m small");
    const int N = n + m;
    auto sp_all = AlphabetSpecializer::symplectic(N, range(0, N));
    auto sp_x = AlphabetSpecializer::symplectic(N, range(0, n));
    auto sp_y = AlphabetSpecializer::symplectic(N, range(n, N));
    LaurentPoly lhs = sp_all.apply(ufac_Q(lam, a));
    LaurentPoly rhs = LaurentPoly::zero(N);
    for (const auto& mu : strict_subpartitions(lam))
        rhs += sp_x.apply(ufac_Q_skew(lam, mu, a)) * sp_y.apply(ufac_Q(mu, a));
    if (lhs == rhs) return {};
    return mismatch("Q^C_" + lam.to_string() + "(x,y|a)", lhs, rhs);
}

FactorialParams random_params(int m, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    FactorialParams p;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            p.values.emplace_back(0);
            continue;
        }
        int x = num(rng), y = den(rng);
        p.values.emplace_back(x, y);
    }
    return p;
}

}  // namespace sympq
