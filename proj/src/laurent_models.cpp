#include "sympq/laurent_models.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "sympq/cache.hpp"
#include "sympq/errors.hpp"
#include "sympq/ring_matrix.hpp"

namespace sympq {

SpecializationContext::SpecializationContext(int n_) : n(n_) {
    if (n < 1 || n > kMaxVars) throw DomainError("number of variables must be in 1.." + std::to_string(kMaxVars));
}

// ---- alphabet specializer ------------------------------------------------

AlphabetSpecializer::AlphabetSpecializer(int nvars, std::vector<LaurentPoly> alphabet)
    : nvars_(nvars), alphabet_(std::move(alphabet)) {}

std::vector<LaurentPoly> AlphabetSpecializer::symplectic_alphabet(int nvars, const std::vector<int>& vars) {
    std::vector<LaurentPoly> a;
    for (int v : vars) {
        a.push_back(LaurentPoly::variable(nvars, v, 1));
        a.push_back(LaurentPoly::variable(nvars, v, -1));
    }
    return a;
}

AlphabetSpecializer AlphabetSpecializer::symplectic(int nvars, const std::vector<int>& vars) {
    return AlphabetSpecializer(nvars, symplectic_alphabet(nvars, vars));
}

AlphabetSpecializer AlphabetSpecializer::substituted(int nvars) {
    std::vector<LaurentPoly> a;
    for (int v = 0; v < nvars; ++v)
        a.push_back(LaurentPoly::variable(nvars, v, 1) + LaurentPoly::variable(nvars, v, -1));
    return AlphabetSpecializer(nvars, std::move(a));
}

std::shared_ptr<const AlphabetSpecializer::Series> AlphabetSpecializer::ensure(int degree) const {
    std::lock_guard lock(mu_);
    if (series_ && static_cast<int>(series_->h.size()) > degree) return series_;
    int order = std::max(degree, series_ ? 2 * static_cast<int>(series_->h.size()) : 8);
    const LaurentPoly zero = LaurentPoly::zero(nvars_);
    auto s = std::make_shared<Series>();
    s->h.assign(order + 1, zero);
    s->e.assign(order + 1, zero);
    s->h[0] = s->e[0] = LaurentPoly::constant(nvars_, Rational(1));
    for (const auto& z : alphabet_) {
        // h <- h / (1 - z t), e <- e (1 + z t)
        for (int k = 1; k <= order; ++k) s->h[k] += z * s->h[k - 1];
        for (int k = order; k >= 1; --k) s->e[k] += z * s->e[k - 1];
    }
    s->q.assign(order + 1, zero);
    for (int r = 0; r <= order; ++r)
        for (int p = 0; p <= r; ++p)
            if (!s->e[p].is_zero() && !s->h[r - p].is_zero()) s->q[r] += s->e[p] * s->h[r - p];
    series_ = s;
    return series_;
}

LaurentPoly AlphabetSpecializer::q(int r) const {
    if (r < 0) return LaurentPoly::zero(nvars_);
    return ensure(r)->q[r];
}

LaurentPoly AlphabetSpecializer::h(int r) const {
    if (r < 0) return LaurentPoly::zero(nvars_);
    return ensure(r)->h[r];
}

LaurentPoly AlphabetSpecializer::e(int r) const {
    if (r < 0) return LaurentPoly::zero(nvars_);
    return ensure(r)->e[r];
}

namespace {

template <class Elem, class Gen>
LaurentPoly apply_generators(const Elem& x, int nvars, Gen gen) {
    LaurentPoly out = LaurentPoly::zero(nvars);
    for (const auto& [m, c] : x.terms()) {
        LaurentPoly t = LaurentPoly::constant(nvars, c);
        for (int i : m) t *= gen(i);
        out += t;
    }
    return out;
}

}  // namespace

LaurentPoly AlphabetSpecializer::apply(const GammaElement& g) const {
    return apply_generators(g, nvars_, [this](int r) { return q(r); });
}

LaurentPoly AlphabetSpecializer::apply(const LambdaElement& l) const {
    return apply_generators(l, nvars_, [this](int r) { return h(r); });
}

const AlphabetSpecializer& standard_specializer(int n) {
    SpecializationContext check(n);
    static std::mutex mu;
    static std::array<std::unique_ptr<AlphabetSpecializer>, kMaxVars + 1> table;
    std::lock_guard lock(mu);
    if (!table[n]) {
        std::vector<int> vars(n);
        std::iota(vars.begin(), vars.end(), 0);
        table[n] = std::make_unique<AlphabetSpecializer>(n, AlphabetSpecializer::symplectic_alphabet(n, vars));
    }
    return *table[n];
}

LaurentPoly specialize(const GammaElement& e, SpecializationContext ctx) {
    return standard_specializer(ctx.n).apply(e);
}

LaurentPoly specialize(const LambdaElement& e, SpecializationContext ctx) {
    return standard_specializer(ctx.n).apply(e);
}

// ---- one-variable functions ------------------------------------------------

LaurentPoly f_tilde(int d, int nvars, int var) {
    if (d < 0) return LaurentPoly::zero(nvars);
    if (d == 0) return LaurentPoly::constant(nvars, Rational(1));
    LaurentPoly x = LaurentPoly::variable(nvars, var, 1), xi = LaurentPoly::variable(nvars, var, -1);
    LaurentPoly num = (LaurentPoly::variable(nvars, var, d) - LaurentPoly::variable(nvars, var, -d)) * (x + xi);
    return exact_divide(num, x - xi, var);
}

LaurentPoly g_tilde(int d, int nvars, int var) {
    if (d <= 0) return f_tilde(d, nvars, var);
    return f_tilde(d, nvars, var) * Rational(2);
}

// ---- Schur-type Pfaffian -----------------------------------------------------

namespace {

// Two-row values by the coefficient recursion of the two-row generating
// function, for r > s >= 0:
//   (r,1) = Q_r Q_1 - 2 Q_{r+1} - 2 Q_{r-1}
//   (r,s) = Q_r Q_s - Q_{r+1} Q_{s-1} - Q_{r-1} Q_{s-1} + Q_r Q_{s-2}
//           - (r+1,s-1) - (r-1,s-1) - (r,s-2)
class TwoRowTable {
public:
    explicit TwoRowTable(const AlphabetSpecializer& sp) : sp_(sp) {}

    LaurentPoly operator()(int r, int s) {
        if (r < 0 || s < 0 || r == s) return LaurentPoly::zero(sp_.nvars());
        if (r < s) return -(*this)(s, r);
        if (s == 0) return sp_.q(r);
        auto key = std::make_pair(r, s);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LaurentPoly v;
        if (s == 1) {
            v = sp_.q(r) * sp_.q(1) - Rational(2) * sp_.q(r + 1) - Rational(2) * sp_.q(r - 1);
        } else {
            v = sp_.q(r) * sp_.q(s) - sp_.q(r + 1) * sp_.q(s - 1) - sp_.q(r - 1) * sp_.q(s - 1) +
                sp_.q(r) * sp_.q(s - 2);
            v -= (*this)(r + 1, s - 1);
            v -= (*this)(r - 1, s - 1);
            v -= (*this)(r, s - 2);
        }
        memo_.emplace(key, v);
        return v;
    }

private:
    const AlphabetSpecializer& sp_;
    std::map<std::pair<int, int>, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly two_row_QC(int r, int s, SpecializationContext ctx) {
    TwoRowTable t(standard_specializer(ctx.n));
    return t(r, s);
}

LaurentPoly schur_pfaffian_QC(const StrictPartition& lam, SpecializationContext ctx) {
    TwoRowTable t(standard_specializer(ctx.n));
    std::vector<int> parts = lam.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    const int m = static_cast<int>(parts.size());
    RingMatrix<LaurentPoly> a(m, m, LaurentPoly::zero(ctx.n));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            a(i, j) = t(parts[i], parts[j]);
            a(j, i) = -a(i, j);
        }
    if (m == 0) return LaurentPoly::constant(ctx.n, Rational(1));
    return pfaffian(a);
}

// ---- Nimmo-type evaluation ---------------------------------------------------

namespace {

Rational f_tilde_at(int d, const Rational& x) {
    if (d < 0) return Rational(0);
    if (d == 0) return Rational(1);
    Rational xi = x.inverse(), s(0);
    for (int k = 0; k < d; ++k) s += x.pow(d - 1 - 2 * k);
    return (x + xi) * s;
}

Rational factorial_power(const Rational& x, const std::vector<Rational>& a, int d) {
    if (static_cast<int>(a.size()) < d) throw DomainError("not enough factorial parameters");
    Rational p(1);
    for (int i = 0; i < d; ++i) p *= x + a[i];
    return p;
}

Rational g_tilde_factorial_at(int d, const Rational& x, const std::vector<Rational>& a) {
    if (d < 0) return Rational(0);
    if (d == 0) return Rational(1);
    Rational xi = x.inverse();
    if (x == xi) throw PoleError("x^2 = 1 in a factorial one-row value");
    return Rational(2) * (factorial_power(x, a, d) - factorial_power(xi, a, d)) * (x + xi) / (x - xi);
}

}  // namespace

Rational nimmo_eval(const StrictPartition& lam, PQKind kind, const EvaluationPoint& pt,
                    const std::vector<Rational>* factorial_params) {
    const int n = pt.size();
    if (n < 1) throw DomainError("empty evaluation point");
    if (factorial_params && kind != PQKind::Q) throw DomainError("factorial values are defined for Q only");
    if (lam.length() > n) return Rational(0);
    std::vector<Rational> u(n);
    for (int i = 0; i < n; ++i) {
        if (pt.values[i].is_zero()) throw PoleError("zero coordinate");
        u[i] = pt.values[i] + pt.values[i].inverse();
    }
    std::vector<int> alpha = lam.parts();
    if ((n + lam.length()) % 2 == 1) alpha.push_back(0);
    const int l = static_cast<int>(alpha.size());
    RingMatrix<Rational> m(n + l, n + l);
    Rational delta(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational den = u[j] + u[i];
            if (den.is_zero() || u[i] == u[j]) throw PoleError("x_i + 1/x_i coincide up to sign");
            m(i, j) = (u[j] - u[i]) / den;
            m(j, i) = -m(i, j);
            delta *= m(i, j);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < l; ++j) {
            const Rational& x = pt.values[i];
            Rational v;
            if (factorial_params) v = g_tilde_factorial_at(alpha[j], x, *factorial_params);
            else {
                v = f_tilde_at(alpha[j], x);
                if (kind == PQKind::Q && alpha[j] > 0) v *= Rational(2);
            }
            m(i, n + j) = v;
            m(n + j, i) = -v;
        }
    return pfaffian(m) / delta;
}

// ---- bialternant ---------------------------------------------------------------

LaurentPoly bialternant_SC(const Partition& mu, SpecializationContext ctx) {
    const int n = ctx.n;
    if (mu.length() > n) throw DomainError("partition longer than the number of variables");
    static ConcurrentCache<std::pair<Partition, int>, LaurentPoly> cache;
    return cache.get_or_compute({mu, n}, [&] {
        RingMatrix<LaurentPoly> a(n, n, LaurentPoly::zero(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int p = mu[j] + n - j;
                a(i, j) = LaurentPoly::variable(n, i, p) - LaurentPoly::variable(n, i, -p);
            }
        LaurentPoly num = determinant(a);
        for (int i = 0; i < n; ++i)
            num = exact_divide(num, LaurentPoly::variable(n, i, 1) - LaurentPoly::variable(n, i, -1), i);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                LaurentPoly d = LaurentPoly::variable(n, i, 1) + LaurentPoly::variable(n, i, -1) -
                                LaurentPoly::variable(n, j, 1) - LaurentPoly::variable(n, j, -1);
                num = exact_divide(num, d, i);
            }
        return num;
    });
}

// ---- Weyl-group oracle -----------------------------------------------------------

namespace {

using Dense = std::vector<Rational>;  // coefficients in t, ascending

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Dense dense_divide(Dense num, const Dense& den) {
    std::size_t dd = den.size() - 1;
    while (num.size() > 1 && num.back().is_zero()) num.pop_back();
    if (num.size() < den.size()) {
        for (const auto& c : num)
            if (!c.is_zero()) throw DivisibilityError("W-sum not divisible by v(t)");
        return {Rational(0)};
    }
    Dense quot(num.size() - dd, Rational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational c = num[k + dd] / den[dd];
        quot[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (!c.is_zero()) throw DivisibilityError("W-sum not divisible by v(t)");
    return quot;
}

Rational dense_eval(const Dense& p, const Rational& t) {
    Rational v(0);
    for (std::size_t k = p.size(); k-- > 0;) v = v * t + p[k];
    return v;
}

// (1 - t c)/(1 - c) as a polynomial in t.
Dense kernel_factor(const Rational& c) {
    Rational den = Rational(1) - c;
    if (den.is_zero()) throw PoleError("Weyl kernel denominator vanishes");
    return {den.inverse(), -c / den};
}

// 1 + t + ... + t^{k-1}
Dense geometric(int k) { return Dense(k, Rational(1)); }

}  // namespace

Rational weyl_hall_littlewood_oracle(const Partition& lam, const Rational& t, const EvaluationPoint& pt) {
    const int n = pt.size();
    if (n < 1) throw DomainError("empty evaluation point");
    if (lam.length() > n) throw DomainError("partition longer than the number of variables");
    if (n > 6) throw DomainError("Weyl-group sum limited to n <= 6");
    for (const auto& x : pt.values)
        if (x.is_zero()) throw PoleError("zero coordinate");

    Dense sum{Rational(0)};
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Rational> y(n);
            for (int i = 0; i < n; ++i) {
                const Rational& x = pt.values[perm[i]];
                y[i] = (mask >> i & 1u) ? x.inverse() : x;
            }
            Rational scal(1);
            for (int i = 0; i < n; ++i) scal *= y[i].pow(lam[i]);
            Dense term{scal};
            for (int i = 0; i < n; ++i) term = dense_mul(term, kernel_factor(y[i].inverse().pow(2)));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Rational yi = y[i].inverse();
                    term = dense_mul(term, kernel_factor(yi * y[j]));
                    term = dense_mul(term, kernel_factor(yi * y[j].inverse()));
                }
            if (sum.size() < term.size()) sum.resize(term.size(), Rational(0));
            for (std::size_t k = 0; k < term.size(); ++k) sum[k] += term[k];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Dense v{Rational(1)};
    std::map<int, int> mult;
    for (int i = 0; i < n; ++i) ++mult[lam[i]];
    for (const auto& [part, m] : mult)
        for (int j = 1; j <= m; ++j) v = dense_mul(v, geometric(part == 0 ? 2 * j : j));
    return dense_eval(dense_divide(sum, v), t);
}

// ---- S^C expansion ------------------------------------------------------------------

std::map<Partition, Rational> expand_in_SC_basis(const LaurentPoly& f, SpecializationContext ctx) {
    const int n = ctx.n;
    LaurentPoly rest = f;
    if (rest.nvars() != n && !rest.is_constant()) throw DomainError("polynomial has the wrong number of variables");
    std::map<Partition, Rational> out;
    while (!rest.is_zero()) {
        const LaurentPoly::Term* lead = nullptr;
        for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it) {
            bool dominant = true;
            for (int i = 0; i < n && dominant; ++i)
                dominant = it->first[i] >= (i + 1 < n ? it->first[i + 1] : 0);
            if (dominant) {
                lead = &*it;
                break;
            }
        }
        if (!lead) throw DomainError("not in the span of symplectic Schur functions (no dominant exponent)");
        std::vector<int> parts;
        for (int i = 0; i < n && lead->first[i] > 0; ++i) parts.push_back(lead->first[i]);
        Partition mu(parts);
        LaurentPoly s = bialternant_SC(mu, ctx);
        Rational c = lead->second / s.coeff(lead->first);
        out[mu] += c;
        rest -= s * c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// ---- identity checks -----------------------------------------------------------------

namespace {

std::string clip(std::string s) {
    if (s.size() > 240) s = s.substr(0, 240) + " ...";
    return s;
}

CheckResult mismatch(const std::string& what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return {false, what + ": lhs " + clip(lhs.to_string()) + " | rhs " + clip(rhs.to_string())};
}

}  // namespace

CheckResult separation_check(const StrictPartition& lam, int n, int m) {
    if (n < 1 || m < 1 || n + m > kMaxVars) throw DomainError("separation check needs n, m >= 1 and n + m small");
    const int N = n + m;
    std::vector<int> all(N), xs(n), ys(m);
    std::iota(all.begin(), all.end(), 0);
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(ys.begin(), ys.end(), n);
    auto sp_all = AlphabetSpecializer::symplectic(N, all);
    auto sp_x = AlphabetSpecializer::symplectic(N, xs);
    auto sp_y = AlphabetSpecializer::symplectic(N, ys);
    LaurentPoly lhs = sp_all.apply(usymp_Q(lam));
    LaurentPoly rhs = LaurentPoly::zero(N);
    for (const auto& mu : strict_subpartitions(lam))
        rhs += sp_x.apply(usymp_Q_skew(lam, mu)) * sp_y.apply(usymp_Q(mu));
    if (lhs == rhs) return {};
    return mismatch("Q^C_" + lam.to_string() + "(x,y)", lhs, rhs);
}

CheckResult delta_identities(int r, int s, SpecializationContext ctx) {
    const int n = ctx.n;
    if (r < 0 || s < 0 || r > n || s > n) throw DomainError("staircase sizes must not exceed n");
    auto classical = AlphabetSpecializer::substituted(n);
    StrictPartition sum(add(staircase(r).as_partition(), staircase(s).as_partition()).parts());
    LaurentPoly lhs = specialize(usymp_P(sum), ctx);
    LaurentPoly rhs = classical.apply(schur_P(sum));
    if (!(lhs == rhs)) return mismatch("P^C_" + sum.to_string() + " vs P(x+1/x)", lhs, rhs);
    for (int k : {r, s}) {
        Partition d = staircase(k).as_partition();
        LaurentPoly a = bialternant_SC(d, ctx);
        LaurentPoly b = classical.apply(schur_s(d));
        if (!(a == b)) return mismatch("S^C_" + d.to_string() + " vs s(x+1/x)", a, b);
    }
    return {};
}

CheckResult check_gf_length1(int n, int order) {
    SpecializationContext ctx(n);
    // prod over the alphabet of (1 + z t)/(1 - z t) = 1 + 2 sum_k z^k t^k
    const LaurentPoly one = LaurentPoly::constant(n, Rational(1));
    TruncSeries<LaurentPoly> prod = TruncSeries<LaurentPoly>::constant(order, one, LaurentPoly::zero(n));
    for (int v = 0; v < n; ++v)
        for (int sgn : {1, -1}) {
            TruncSeries<LaurentPoly> f(order, LaurentPoly::zero(n));
            f[0] = one;
            for (int k = 1; k <= order; ++k) f[k] = LaurentPoly::variable(n, v, sgn * k) * Rational(2);
            prod = prod * f;
        }
    for (int r = 0; r <= order; ++r) {
        LaurentPoly lhs = r == 0 ? one : specialize(usymp_P(StrictPartition({r})), ctx) * Rational(2);
        if (!(lhs == prod[r])) return mismatch("z^" + std::to_string(r), lhs, prod[r]);
    }
    return {};
}

CheckResult check_gf_length2(int n, int order) {
    SpecializationContext ctx(n);
    const auto& sp = standard_specializer(n);
    TwoRowTable f(sp);
    auto F = [&](int a, int b) { return (a < 0 || b < 0) ? LaurentPoly::zero(n) : f(a, b); };
    auto G = [&](int a, int b) {
        if (a < 0 || b < 0) return LaurentPoly::zero(n);
        LaurentPoly g = sp.q(a) * sp.q(b);
        if (a == 0 && b == 0) g -= LaurentPoly::constant(n, Rational(1));
        return g;
    };
    // (z+w)(1+zw) F = (z-w)(1-zw) G, coefficient of z^a w^b
    for (int a = 0; a <= order; ++a)
        for (int b = 0; b <= order; ++b) {
            LaurentPoly lhs = F(a - 1, b) + F(a, b - 1) + F(a - 2, b - 1) + F(a - 1, b - 2);
            LaurentPoly rhs = G(a - 1, b) - G(a, b - 1) - G(a - 2, b - 1) + G(a - 1, b - 2);
            if (!(lhs == rhs))
                return mismatch("z^" + std::to_string(a) + " w^" + std::to_string(b), lhs, rhs);
        }
    // The recursion against the closed two-row formula of the universal ring.
    for (int r = 0; r <= order; ++r)
        for (int s = 0; s < r; ++s) {
            LaurentPoly a = f(r, s), b = sp.apply(usymp_Q_pair(r, s));
            if (!(a == b)) return mismatch("(" + std::to_string(r) + "," + std::to_string(s) + ")", a, b);
        }
    return {};
}

EvaluationPoint random_point(int n, std::mt19937_64& rng, int bound) {
    if (n < 1 || bound < 2) throw DomainError("random_point needs n >= 1 and bound >= 2");
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    EvaluationPoint pt;
    while (static_cast<int>(pt.values.size()) < n) {
        int a = num(rng), b = den(rng);
        if (a == 0) continue;
        Rational x(a, b);
        if (x * x == Rational(1)) continue;
        bool ok = true;
        for (const auto& y : pt.values)
            ok = ok && x != y && x != -y && x != y.inverse() && x != -y.inverse();
        if (ok) pt.values.push_back(x);
    }
    return pt;
}

}  // namespace sympq
