#include "sympq/pieri_paths.hpp"

#include <unordered_set>

#include "sympq/errors.hpp"
#include "sympq/laurent_models.hpp"
#include "sympq/laurent_poly.hpp"
#include "sympq/ring_matrix.hpp"

namespace sympq {

namespace {

bool length_ok(const StrictPartition& lam, const StrictPartition& mu) {
    return lam.length() == mu.length() || lam.length() == mu.length() + 1;
}

void check_order(int K) {
    if (K < 0) throw DomainError("negative truncation order");
}

}  // namespace

long pieri_closed(const StrictPartition& lam, const StrictPartition& mu, int r) {
    if (r < 1) throw DomainError("Pieri coefficients need r >= 1");
    if (!length_ok(lam, mu)) return 0;
    Rational total(0);
    for (const auto& kappa : pieri_kappas(mu, lam, r)) {
        int e = components(mu, kappa) + components(lam, kappa) - length_drop_indicator(mu, kappa) - 1;
        total += Rational(2).pow(e);
    }
    return total.to_long();
}

std::map<StrictPartition, long> pieri_expand(const StrictPartition& mu, int r) {
    if (r < 1) throw DomainError("Pieri coefficients need r >= 1");
    std::map<StrictPartition, long> out;
    for (int w = std::max(0, mu.weight() - r); w <= mu.weight() + r; ++w) {
        if ((mu.weight() + r - w) % 2 != 0) continue;
        for (const auto& lam : strict_of_weight(w)) {
            if (!length_ok(lam, mu)) continue;
            if (long c = pieri_closed(lam, mu, r); c != 0) out.emplace(lam, c);
        }
    }
    return out;
}

ZSeries b_series(int r, int s, int K) {
    check_order(K);
    if (r < 0 || s < 0) throw DomainError("negative index in b-series");
    ZSeries b(K);
    auto set = [&](int k, const Rational& c) {
        if (k <= K) b[k] += c;
    };
    // (1 + z^2)(1 + z^2 + ... + z^{2(m-1)}) shifted by z^shift, times 2
    auto add_block = [&](int shift, int m) {
        for (int j = 0; j < m; ++j) {
            set(shift + 2 * j, Rational(2));
            set(shift + 2 * j + 2, Rational(2));
        }
    };
    if (s == 0) {
        set(r, Rational(r == 0 ? 1 : 2));
    } else if (r == 0) {
    } else if (r < s) {
        add_block(s - r, r);
    } else if (r == s) {
        add_block(0, s);
        set(0, Rational(-1));
    } else {
        add_block(r - s, s);
    }
    return b;
}

ZSeries b_series_from_f_expansion(int r, int s, int K) {
    check_order(K);
    if (r < 0 || s < 0) throw DomainError("negative index in b-series");
    // Pi_z(x) = (1 + 2 sum x^k z^k)(1 + 2 sum x^-k z^k); coefficient of z^k
    // times f_s(x), expanded in f_0, f_1, ... by peeling the top power of x
    // (f_d = x^d + lower terms).
    LaurentPoly fs = f_tilde(s);
    ZSeries out(K);
    for (int k = 0; k <= K; ++k) {
        LaurentPoly pk = LaurentPoly::zero(1);
        for (int i = 0; i <= k; ++i) {
            Rational c = Rational(i == 0 ? 1 : 2) * Rational(k - i == 0 ? 1 : 2);
            pk += LaurentPoly::variable(1, 0, i - (k - i)) * c;
        }
        LaurentPoly rest = fs * pk;
        while (!rest.is_zero()) {
            int d = rest.max_exponent(0);
            if (d < 0) throw DivisibilityError("z-coefficient is not in the span of the f basis");
            Rational c = rest.coeff(make_exponent({d}));
            if (d == r) out[k] = c;
            rest -= f_tilde(d) * c;
        }
    }
    return out;
}

bool is_edge(const Vertex& from, const Vertex& to) {
    const int i = from.index, j = to.index;
    if (i < 0 || j < 0) return false;
    switch (from.level) {
        case Level::A:
            if (to.level == Level::A) return j == i - 1;
            if (to.level == Level::B) return j == i || (j == i - 1 && j >= 1);
            return false;
        case Level::B:
            return to.level == Level::C && (j == i || j == i + 1);
        case Level::C:
            return to.level == Level::C && j == i + 1;
    }
    return false;
}

int edge_z_degree(const Vertex& from, const Vertex& to) {
    if (!is_edge(from, to)) throw DomainError("not an edge of the path graph");
    bool vertical = from.index == to.index && from.level != to.level;
    return vertical ? 0 : 1;
}

int LatticePath::z_degree() const {
    int d = 0;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) d += edge_z_degree(vertices[k], vertices[k + 1]);
    return d;
}

int LatticePath::b_index() const {
    for (const auto& v : vertices)
        if (v.level == Level::B) return v.index;
    throw InternalError("lattice path without a B vertex");
}

std::vector<LatticePath> lattice_paths(int s, int r, int max_degree) {
    std::vector<LatticePath> out;
    if (s < 0 || r < 0 || max_degree < 0) return out;
    std::vector<Vertex> path{{Level::A, s}};
    auto rec = [&](auto&& self, int deg) -> void {
        const Vertex v = path.back();
        if (v.level == Level::C && v.index == r) {
            out.push_back({path});
            return;
        }
        if (v.level == Level::C && v.index > r) return;
        std::vector<Vertex> next;
        switch (v.level) {
            case Level::A:
                next = {{Level::A, v.index - 1}, {Level::B, v.index}, {Level::B, v.index - 1}};
                break;
            case Level::B:
                next = {{Level::C, v.index}, {Level::C, v.index + 1}};
                break;
            case Level::C:
                next = {{Level::C, v.index + 1}};
                break;
        }
        for (const auto& w : next) {
            if (!is_edge(v, w)) continue;
            int d = deg + edge_z_degree(v, w);
            if (d > max_degree) continue;
            path.push_back(w);
            self(self, d);
            path.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

ZSeries path_weight_sum(int s, int r, int K) {
    check_order(K);
    if (s < 0 || r < 1) throw DomainError("path sums are taken for s >= 0, r >= 1");
    std::map<std::pair<int, int>, ZSeries> memo;  // (r, s) -> w^r_s
    const ZSeries z = ZSeries::monomial(K, 1, Rational(1));
    const ZSeries one = ZSeries::constant(K, Rational(1));
    auto rec = [&](auto&& self, int rr, int ss) -> ZSeries {
        if (rr == 0 && ss == 0) return one;  // A_0 -> B_0 -> C_0
        if (auto it = memo.find({rr, ss}); it != memo.end()) return it->second;
        ZSeries w(K);
        if (rr == 1 && ss == 0) w = z.scaled(Rational(2));
        else if (rr == 1 && ss == 1) w = one + ZSeries::monomial(K, 2, Rational(2));
        else if (rr <= ss - 2) w = z * self(self, rr, ss - 1);
        else if (rr == ss - 1) w = z * self(self, ss - 1, ss - 1) + z;
        else if (rr == ss) w = ZSeries::monomial(K, 2, Rational(1)) * self(self, ss - 1, ss - 1) + one +
                                ZSeries::monomial(K, 2, Rational(3));
        else if (rr == ss + 1) w = z * self(self, ss, ss) + z;
        else w = z * self(self, rr - 1, ss);
        memo.emplace(std::make_pair(rr, ss), w);
        return w;
    };
    return rec(rec, r, s);
}

ZSeries path_weight_sum_enumerated(int s, int r, int K) {
    check_order(K);
    ZSeries w(K);
    for (const auto& p : lattice_paths(s, r, K)) w[p.z_degree()] += Rational(1);
    return w;
}

ZSeries u_series(const StrictPartition& lam, const StrictPartition& mu, int K) {
    check_order(K);
    if (!length_ok(lam, mu)) return ZSeries(K);
    const int l = lam.length();
    if (l == 0) return ZSeries::constant(K, Rational(1));
    RingMatrix<ZSeries> m(l, l, ZSeries(K));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m(i, j) = b_series(lam[i], mu[j], K);
    return determinant(m);
}

namespace {

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept {
        return static_cast<std::size_t>(v.index) * 3 + static_cast<std::size_t>(v.level);
    }
};

// Sum of z^{degree} over non-intersecting families, path i drawn from
// choices[i].
ZSeries family_sum(const std::vector<std::vector<LatticePath>>& choices, int K) {
    ZSeries out(K);
    std::unordered_set<Vertex, VertexHash> used;
    auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
        if (i == choices.size()) {
            out[deg] += Rational(1);
            return;
        }
        for (const auto& p : choices[i]) {
            int d = deg + p.z_degree();
            if (d > K) continue;
            bool clash = false;
            for (const auto& v : p.vertices)
                if (used.count(v)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (const auto& v : p.vertices) used.insert(v);
            self(self, i + 1, d);
            for (const auto& v : p.vertices) used.erase(v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

ZSeries u_series_paths(const StrictPartition& lam, const StrictPartition& mu, int K) {
    check_order(K);
    if (!length_ok(lam, mu)) return ZSeries(K);
    const int l = lam.length();
    std::vector<std::vector<LatticePath>> choices(l);
    for (int i = 0; i < l; ++i) choices[i] = lattice_paths(mu[i], lam[i], K);
    return family_sum(choices, K);
}

long class_count(const StrictPartition& mu, const StrictPartition& lam, const StrictPartition& kappa) {
    int e = components(lam, kappa) + components(mu, kappa) - length_drop_indicator(mu, kappa);
    if (e < 0) throw DomainError("negative exponent in the family count");
    return 1L << e;
}

long class_count_enumerated(const StrictPartition& mu, const StrictPartition& lam, const StrictPartition& kappa) {
    if (!interlaces(mu, kappa) || !interlaces(lam, kappa))
        throw DomainError("family count needs mu and lam to interlace kappa");
    const int l = lam.length();
    std::vector<std::vector<LatticePath>> choices(l);
    int K = 0;
    for (int i = 0; i < l; ++i) {
        int d = (mu[i] - kappa[i]) + (lam[i] - kappa[i]);
        if (d < 0) return 0;
        K += d;
        for (auto& p : lattice_paths(mu[i], lam[i], d))
            if (p.b_index() == kappa[i]) choices[i].push_back(std::move(p));
    }
    ZSeries s = family_sum(choices, K);
    Rational total(0);
    for (const auto& c : s.coeffs()) total += c;
    return total.to_long();
}

}  // namespace sympq
