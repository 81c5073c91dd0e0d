#include "sympq/lambda_ring.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>

#include "sympq/cache.hpp"
#include "sympq/errors.hpp"
#include "sympq/ring_matrix.hpp"

namespace sympq {

LambdaElement elementary_in_h(int p) {
    if (p < 0) return {};
    static ConcurrentCache<int, LambdaElement> cache;
    return cache.get_or_compute(p, [p] {
        RingMatrix<LambdaElement> m(p, p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) m(i, j) = h(1 - i + j);
        return determinant(m);
    });
}

LambdaElement q_in_h(int r) {
    if (r < 0) return {};
    static ConcurrentCache<int, LambdaElement> cache;
    return cache.get_or_compute(r, [r] {
        LambdaElement s;
        for (int p = 0; p <= r; ++p) s += elementary_in_h(p) * h(r - p);
        return s;
    });
}

LambdaElement embed(const GammaElement& e) {
    LambdaElement out;
    for (const auto& [m, c] : e.terms()) {
        LambdaElement t(c);
        for (int i : m) t = t * q_in_h(i);
        out += t;
    }
    return out;
}

LambdaElement schur_s(const Partition& lam) {
    const int l = lam.length();
    RingMatrix<LambdaElement> m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m(i, j) = h(lam[i] - i + j);
    return determinant(m);
}

LambdaElement usymp_schur(const Partition& lam) {
    static ConcurrentCache<Partition, LambdaElement> cache;
    return cache.get_or_compute(lam, [&lam] {
        // The first column of the displayed matrix is 2h_{lam_i-i+1}; it is
        // halved here instead of halving the determinant.
        const int l = lam.length();
        RingMatrix<LambdaElement> m(l, l);
        for (int i = 0; i < l; ++i) {
            m(i, 0) = h(lam[i] - i);
            for (int j = 1; j < l; ++j) m(i, j) = h(lam[i] - i + j) + h(lam[i] - i - j);
        }
        return determinant(m);
    });
}

namespace {

struct DegreeSystem {
    std::vector<Partition> shapes;  // partitions of d; also the h-monomial coordinates
    RingMatrix<Rational> inv{0, 0};
};

DegreeSystem build_system(int d) {
    DegreeSystem sys;
    sys.shapes = partitions_of_weight(d);
    const int n = static_cast<int>(sys.shapes.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[sys.shapes[i].parts()] = i;
    RingMatrix<Rational> m(n, n);
    for (int j = 0; j < n; ++j) {
        LambdaElement top = usymp_schur(sys.shapes[j]).homogeneous_part(d);
        for (const auto& [mono, c] : top.terms()) m(index.at(mono), j) = c;
    }
    auto inv = inverse(m);
    if (!inv) throw InternalError("s^C system singular in degree " + std::to_string(d));
    sys.inv = *inv;
    return sys;
}

const DegreeSystem& degree_system(int d) {
    static std::shared_mutex mu;
    static std::map<int, std::unique_ptr<DegreeSystem>> systems;
    {
        std::shared_lock lock(mu);
        if (auto it = systems.find(d); it != systems.end()) return *it->second;
    }
    auto sys = std::make_unique<DegreeSystem>(build_system(d));
    std::unique_lock lock(mu);
    return *systems.emplace(d, std::move(sys)).first->second;
}

}  // namespace

std::map<Partition, Rational> expand_in_usymp_schur(const LambdaElement& e) {
    std::map<Partition, Rational> out;
    LambdaElement rest = e;
    while (!rest.is_zero()) {
        const int d = rest.max_degree();
        const DegreeSystem& sys = degree_system(d);
        const int n = static_cast<int>(sys.shapes.size());
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < n; ++i) index[sys.shapes[i].parts()] = i;
        std::vector<Rational> v(n);
        for (const auto& [mono, c] : rest.terms()) {
            if (monomial_degree(mono) != d) break;
            v[index.at(mono)] = c;
        }
        for (int j = 0; j < n; ++j) {
            Rational c(0);
            for (int k = 0; k < n; ++k)
                if (!v[k].is_zero()) c += sys.inv(j, k) * v[k];
            if (c.is_zero()) continue;
            out[sys.shapes[j]] += c;
            rest -= usymp_schur(sys.shapes[j]) * c;
        }
        if (!rest.is_zero() && rest.max_degree() >= d)
            throw InternalError("s^C solve left a top-degree residual");
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::map<Partition, Rational> g_tilde_expansion(const StrictPartition& lam) {
    return expand_in_usymp_schur(embed(gamma_canonical(usymp_P(lam))));
}

}  // namespace sympq
