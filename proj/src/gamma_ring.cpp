#include "sympq/gamma_ring.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "sympq/cache.hpp"
#include "sympq/errors.hpp"
#include "sympq/ring_matrix.hpp"

namespace sympq {

namespace {

ConcurrentCache<int, GammaElement>& even_q_cache() {
    static ConcurrentCache<int, GammaElement> c;
    return c;
}

GammaElement normal_q(int r) {
    if (r <= 0 || r % 2 == 1) return q(r);
    return even_q_cache().get_or_compute(r, [r] {
        GammaElement s;
        for (int i = 1; i < r; ++i) {
            GammaElement t = normal_q(i) * normal_q(r - i);
            if (i % 2 == 1) s += t;
            else s -= t;
        }
        return s * Rational(1, 2);
    });
}

Rational pow2(int e) { return Rational(2).pow(e); }

// Pf(pair(parts_i, parts_j)) with a trailing 0 when the length is odd.
template <class PairFn>
GammaElement pair_pfaffian(std::vector<int> parts, PairFn pair) {
    if (parts.size() % 2 == 1) parts.push_back(0);
    const int m = static_cast<int>(parts.size());
    RingMatrix<GammaElement> a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            a(i, j) = pair(parts[i], parts[j]);
            a(j, i) = -a(i, j);
        }
    return pfaffian(a);
}

}  // namespace

GammaElement GammaTag::canonical(const GammaElement& e) { return gamma_canonical(e); }

GammaElement gamma_canonical(const GammaElement& e) {
    static ConcurrentCache<std::vector<int>, GammaElement> mono_cache;
    GammaElement out;
    for (const auto& [m, c] : e.terms()) {
        bool all_odd = true;
        for (int i : m) all_odd = all_odd && (i % 2 == 1);
        if (all_odd) {
            out.add_term(m, c);
            continue;
        }
        const std::vector<int>& key = m;
        GammaElement nf = mono_cache.get_or_compute(key, [&key] {
            GammaElement p(1);
            for (int i : key) p = p * normal_q(i);
            return p;
        });
        out += nf * c;
    }
    return out;
}

GammaElement schur_Q_pair(int r, int s) {
    if (r == s) return {};
    if (r < s) return -schur_Q_pair(s, r);
    if (s < 0) return {};
    GammaElement v = q(r) * q(s);
    for (int k = 1; k <= s; ++k) {
        GammaElement t = q(r + k) * q(s - k) * Rational(2);
        if (k % 2 == 1) v -= t;
        else v += t;
    }
    return v;
}

GammaElement usymp_Q_pair(int r, int s) {
    if (r == s) return {};
    if (r < s) return -usymp_Q_pair(s, r);
    if (s < 0) return {};
    static ConcurrentCache<std::pair<int, int>, GammaElement> cache;
    return cache.get_or_compute({r, s}, [r, s] {
        GammaElement v = q(r) * q(s);
        for (int k = 1; k <= s; ++k) {
            GammaElement inner = q(r + k) + q(r - k);
            for (int i = 1; i <= k - 1; ++i) inner += q(r + k - 2 * i) * Rational(2);
            GammaElement t = inner * q(s - k) * Rational(2);
            if (k % 2 == 1) v -= t;
            else v += t;
        }
        return v;
    });
}

GammaElement schur_Q(const StrictPartition& lam) {
    if (lam.length() == 0) return GammaElement(1);
    if (lam.length() == 1) return q(lam[0]);
    if (lam.length() == 2) return schur_Q_pair(lam[0], lam[1]);
    return pair_pfaffian(lam.parts(), schur_Q_pair);
}

GammaElement schur_P(const StrictPartition& lam) { return schur_Q(lam) * pow2(-lam.length()); }

GammaElement usymp_Q(const StrictPartition& lam) {
    if (lam.length() == 0) return GammaElement(1);
    if (lam.length() == 1) return q(lam[0]);
    if (lam.length() == 2) return usymp_Q_pair(lam[0], lam[1]);
    static ConcurrentCache<StrictPartition, GammaElement> cache;
    return cache.get_or_compute(lam, [&lam] { return pair_pfaffian(lam.parts(), usymp_Q_pair); });
}

GammaElement usymp_P(const StrictPartition& lam) { return usymp_Q(lam) * pow2(-lam.length()); }

GammaElement usymp_Q_skew(const StrictPartition& lam, const StrictPartition& mu) {
    const int r = lam.length();
    std::vector<int> beta = mu.parts();
    if ((lam.length() + mu.length()) % 2 == 1) beta.push_back(0);
    const int s = static_cast<int>(beta.size());
    RingMatrix<GammaElement> a(r + s, r + s);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            a(i, j) = usymp_Q_pair(lam[i], lam[j]);
            a(j, i) = -a(i, j);
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) {
            a(i, r + j) = q(lam[i] - beta[s - 1 - j]);
            a(r + j, i) = -a(i, r + j);
        }
    return pfaffian(a);
}

GammaElement usymp_P_skew(const StrictPartition& lam, const StrictPartition& mu) {
    return usymp_Q_skew(lam, mu) * pow2(mu.length() - lam.length());
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::SchurQ: return "schurQ";
        case Basis::SchurP: return "schurP";
        case Basis::SympQ: return "sympQ";
        case Basis::SympP: return "sympP";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    for (Basis b : {Basis::SchurQ, Basis::SchurP, Basis::SympQ, Basis::SympP})
        if (basis_name(b) == name) return b;
    throw ParseError("unknown basis '" + std::string(name) + "'");
}

GammaElement basis_element(Basis b, const StrictPartition& lam) {
    switch (b) {
        case Basis::SchurQ: return schur_Q(lam);
        case Basis::SchurP: return schur_P(lam);
        case Basis::SympQ: return usymp_Q(lam);
        case Basis::SympP: return usymp_P(lam);
    }
    return {};
}

namespace {

GammaElement canonical_basis_element(Basis b, const StrictPartition& lam) {
    static ConcurrentCache<std::pair<int, StrictPartition>, GammaElement> cache;
    return cache.get_or_compute({static_cast<int>(b), lam},
                                [b, &lam] { return gamma_canonical(basis_element(b, lam)); });
}

// Top-degree slice of the basis in odd-q coordinates, inverted.
struct DegreeSystem {
    std::vector<std::vector<int>> coords;  // odd partitions of d
    std::vector<StrictPartition> shapes;   // strict partitions of d
    RingMatrix<Rational> inv{0, 0};
};

DegreeSystem build_system(Basis b, int d) {
    DegreeSystem sys;
    for (const auto& p : partitions_of_weight(d)) {
        bool odd = true;
        for (int x : p.parts()) odd = odd && (x % 2 == 1);
        if (odd) sys.coords.push_back(p.parts());
    }
    sys.shapes = strict_of_weight(d);
    const int n = static_cast<int>(sys.shapes.size());
    if (static_cast<int>(sys.coords.size()) != n) throw InternalError("odd/strict partition counts differ");
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[sys.coords[i]] = i;
    RingMatrix<Rational> m(n, n);
    for (int j = 0; j < n; ++j) {
        GammaElement top = canonical_basis_element(b, sys.shapes[j]).homogeneous_part(d);
        for (const auto& [mono, c] : top.terms()) m(index.at(mono), j) = c;
    }
    auto inv = inverse(m);
    if (!inv) throw InternalError("basis system singular in degree " + std::to_string(d));
    sys.inv = *inv;
    return sys;
}

const DegreeSystem& degree_system(Basis b, int d) {
    static std::shared_mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<DegreeSystem>> systems;
    const std::pair<int, int> key{static_cast<int>(b), d};
    {
        std::shared_lock lock(mu);
        if (auto it = systems.find(key); it != systems.end()) return *it->second;
    }
    auto sys = std::make_unique<DegreeSystem>(build_system(b, d));
    std::unique_lock lock(mu);
    auto [it, inserted] = systems.emplace(key, std::move(sys));
    return *it->second;
}

}  // namespace

BasisExpansion to_basis(const GammaElement& e, Basis b) {
    BasisExpansion out;
    out.basis = b;
    GammaElement rest = gamma_canonical(e);
    while (!rest.is_zero()) {
        const int d = rest.max_degree();
        const DegreeSystem& sys = degree_system(b, d);
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < sys.coords.size(); ++i) index[sys.coords[i]] = static_cast<int>(i);
        const int n = static_cast<int>(sys.coords.size());
        std::vector<Rational> v(n);
        for (const auto& [mono, c] : rest.terms()) {
            if (monomial_degree(mono) != d) break;
            auto it = index.find(mono);
            if (it == index.end()) throw InternalError("non-canonical monomial in basis solve");
            v[it->second] = c;
        }
        for (int j = 0; j < n; ++j) {
            Rational c(0);
            for (int k = 0; k < n; ++k)
                if (!v[k].is_zero()) c += sys.inv(j, k) * v[k];
            if (c.is_zero()) continue;
            out.coeffs[sys.shapes[j]] += c;
            rest -= canonical_basis_element(b, sys.shapes[j]) * c;
        }
        if (!rest.is_zero() && rest.max_degree() >= d)
            throw InternalError("basis solve left a top-degree residual");
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

GammaElement from_basis(const BasisExpansion& x) {
    GammaElement e;
    for (const auto& [lam, c] : x.coeffs) e += basis_element(x.basis, lam) * c;
    return e;
}

BasisExpansion product_in_basis(const StrictPartition& mu, const StrictPartition& nu, Basis b) {
    return to_basis(canonical_basis_element(b, mu) * canonical_basis_element(b, nu), b);
}

BasisExpansion structure_constants(const StrictPartition& mu, const StrictPartition& nu) {
    return product_in_basis(mu, nu, Basis::SympP);
}

BasisExpansion coproduct_constants(const StrictPartition& lam, const StrictPartition& mu) {
    return to_basis(usymp_Q_skew(lam, mu), Basis::SympQ);
}

BasisExpansion schurP_in_sympP(const StrictPartition& lam) {
    return to_basis(schur_P(lam), Basis::SympP);
}

}  // namespace sympq
