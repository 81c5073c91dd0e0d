#include <doctest.h>

#include <set>

#include "sympq/errors.hpp"
#include "sympq/gamma_ring.hpp"
#include "sympq/pieri_paths.hpp"

using namespace sympq;

namespace {

StrictPartition sp(std::vector<int> v) { return StrictPartition(std::move(v)); }

ZSeries poly(int K, std::vector<int> coeffs) {
    ZSeries s(K);
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= K; ++k) s[k] = Rational(coeffs[k]);
    return s;
}

// Strict partitions one box away from mu: additions, and removals that
// keep the length.
std::set<StrictPartition> neighbours(const StrictPartition& mu) {
    std::set<StrictPartition> out;
    std::vector<int> p = mu.parts();
    for (std::size_t i = 0; i <= p.size(); ++i) {
        std::vector<int> q = p;
        if (i == q.size()) q.push_back(1);
        else ++q[i];
        if (i == 0 || q[i - 1] > q[i]) out.insert(sp(q));
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<int> q = p;
        --q[i];
        if (q[i] == 0) continue;
        if (i + 1 == q.size() || q[i] > q[i + 1]) out.insert(sp(q));
    }
    return out;
}

}  // namespace

TEST_CASE("small series") {
    CHECK(b_series(1, 1, 4) == poly(4, {1, 0, 2}));
    CHECK(path_weight_sum(0, 1, 4) == poly(4, {0, 2}));
    CHECK(u_series(sp({4, 3, 1}), sp({4, 3, 1}), 4)[2] == Rational(6));
    CHECK(class_count(sp({4, 3, 1}), sp({4, 3, 1}), sp({4, 2, 1})) == 4);
    CHECK(class_count(sp({4, 3, 1}), sp({4, 3, 1}), sp({4, 3})) == 2);
}

TEST_CASE("graph edges") {
    CHECK_FALSE(is_edge({Level::A, 1}, {Level::B, 0}));
    CHECK(is_edge({Level::A, 2}, {Level::B, 1}));
    CHECK(is_edge({Level::A, 0}, {Level::B, 0}));
    CHECK(is_edge({Level::B, 3}, {Level::C, 4}));
    CHECK_FALSE(is_edge({Level::C, 4}, {Level::C, 3}));
    CHECK(edge_z_degree({Level::A, 0}, {Level::B, 0}) == 0);
    CHECK(edge_z_degree({Level::C, 0}, {Level::C, 1}) == 1);
    CHECK_THROWS_AS(edge_z_degree({Level::A, 0}, {Level::C, 0}), DomainError);
}

TEST_CASE("paths are walks in the graph") {
    for (int s = 0; s <= 4; ++s)
        for (int r = 1; r <= 4; ++r)
            for (const auto& p : lattice_paths(s, r, 8)) {
                REQUIRE(p.vertices.size() >= 2);
                CHECK(p.vertices.front() == Vertex{Level::A, s});
                CHECK(p.vertices.back() == Vertex{Level::C, r});
                int deg = 0;
                for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
                    CHECK(is_edge(p.vertices[k], p.vertices[k + 1]));
                    deg += edge_z_degree(p.vertices[k], p.vertices[k + 1]);
                }
                CHECK(deg == p.z_degree());
                CHECK(deg <= 8);
            }
}

TEST_CASE("series by formula, by expansion and by paths") {
    const int K = 10;
    for (int r = 0; r <= 6; ++r)
        for (int s = 0; s <= 6; ++s) {
            CHECK(b_series(r, s, K) == b_series_from_f_expansion(r, s, K));
            if (r >= 1) CHECK(path_weight_sum(s, r, K) == path_weight_sum_enumerated(s, r, K));
        }
}

TEST_CASE("determinants and path families agree") {
    const int K = 8;
    for (const auto& mu : enumerate_strict(6))
        for (const auto& lam : enumerate_strict(7)) {
            if (lam.length() != mu.length() && lam.length() != mu.length() + 1) continue;
            CHECK(u_series(lam, mu, K) == u_series_paths(lam, mu, K));
        }
}

TEST_CASE("class counts agree with enumeration") {
    for (const auto& mu : enumerate_strict(7))
        for (int r = 1; r <= 3; ++r)
            for (const auto& [lam, c] : pieri_expand(mu, r)) {
                long total = 0;
                for (const auto& kappa : pieri_kappas(mu, lam, r)) {
                    CHECK(class_count(mu, lam, kappa) == class_count_enumerated(mu, lam, kappa));
                    total += class_count(mu, lam, kappa);
                }
                CHECK(total == 2 * c);
            }
    CHECK_THROWS_AS(class_count(sp({4, 3, 1}), sp({4, 3, 1}), sp({2})), DomainError);
}

TEST_CASE("multiplying by the one-box function") {
    for (const auto& mu : enumerate_strict(9)) {
        std::map<StrictPartition, long> want;
        for (const auto& lam : neighbours(mu)) want[lam] = 1;
        CHECK(pieri_expand(mu, 1) == want);
    }
}

TEST_CASE("Pieri coefficients are half the z^r coefficient of the determinant series") {
    for (const auto& mu : enumerate_strict(6))
        for (int r = 1; r <= 3; ++r)
            for (const auto& [lam, c] : pieri_expand(mu, r)) {
                CHECK(u_series(lam, mu, r)[r] == Rational(2 * c));
            }
}
