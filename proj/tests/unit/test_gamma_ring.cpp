#include <doctest.h>

#include <random>

#include "sympq/gamma_ring.hpp"
#include "sympq/pieri_paths.hpp"

using namespace sympq;

namespace {

StrictPartition sp(std::vector<int> v) { return StrictPartition(std::move(v)); }

BasisExpansion expansion(Basis b, std::map<StrictPartition, Rational> m) { return BasisExpansion{b, std::move(m)}; }

}  // namespace

TEST_CASE("generators and their relations") {
    CHECK(usymp_Q(sp({2, 1})).to_string() == "q[2,1] - 2*q[3] - 2*q[1]");
    CHECK(schur_Q(sp({})) == GammaElement(1));
    // Q(z)Q(-z) = 1 in degree 2 and 4
    CHECK(q(2) * Rational(2) == q(1) * q(1));
    CHECK(q(4) * Rational(2) == q(1) * q(3) * Rational(2) - q(2) * q(2));
    CHECK(schur_P(sp({3})) == q(3) * Rational(1, 2));
    CHECK(usymp_P(sp({3})) == q(3) * Rational(1, 2));
}

TEST_CASE("two-row conventions") {
    CHECK(usymp_Q_pair(3, 3).is_zero());
    CHECK(usymp_Q_pair(1, 3) == -usymp_Q_pair(3, 1));
    CHECK(usymp_Q_pair(3, 0) == q(3));
    CHECK(usymp_Q_pair(3, -1).is_zero());
    for (int r = 2; r <= 6; ++r)
        CHECK(usymp_Q(sp({r, 1})) == q(r) * q(1) - q(r + 1) * Rational(2) - q(r - 1) * Rational(2));
}

TEST_CASE("basis round trips") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> idx(1, 5), coef(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        GammaElement e = GammaElement(coef(rng));
        for (int k = 0; k < 3; ++k) {
            std::vector<int> m{idx(rng), idx(rng)};
            std::sort(m.rbegin(), m.rend());
            e += GammaElement::monomial(m, Rational(coef(rng), 1 + trial % 3));
        }
        for (Basis b : {Basis::SchurQ, Basis::SchurP, Basis::SympQ, Basis::SympP}) CHECK(from_basis(to_basis(e, b)) == e);
    }
    CHECK(parse_basis("sympP") == Basis::SympP);
    CHECK_THROWS(parse_basis("nope"));
}

TEST_CASE("the worked Pieri product") {
    auto f = structure_constants(sp({4, 3, 1}), sp({2}));
    CHECK(f.at(sp({6, 3, 1})) == Rational(1));
    CHECK(f.at(sp({5, 4, 1})) == Rational(1));
    CHECK(f.at(sp({5, 3, 2})) == Rational(2));
    CHECK(f.at(sp({5, 2, 1})) == Rational(2));
    CHECK(f.at(sp({4, 3, 1})) == Rational(3));
    CHECK(f.at(sp({3, 2, 1})) == Rational(1));
    // Length l(mu)+1 term, also present in the classical product P_431 P_2.
    CHECK(f.at(sp({4, 3, 2, 1})) == Rational(1));
    CHECK(f.coeffs.size() == 7);
    auto classical = to_basis(schur_P(sp({4, 3, 1})) * schur_P(sp({2})), Basis::SchurP);
    CHECK(classical.at(sp({4, 3, 2, 1})) == Rational(1));
}

TEST_CASE("structure constants: symmetry, grading, top degree") {
    auto strict = enumerate_strict(8);
    for (const auto& mu : strict)
        for (const auto& nu : strict) {
            if (mu.weight() + nu.weight() > 8) continue;
            auto f = structure_constants(mu, nu);
            CHECK(f == structure_constants(nu, mu));
            auto classical = to_basis(schur_P(mu) * schur_P(nu), Basis::SchurP);
            for (const auto& [lam, c] : f.coeffs) {
                int gap = mu.weight() + nu.weight() - lam.weight();
                CHECK(gap >= 0);
                CHECK(gap % 2 == 0);
                if (gap == 0) CHECK(c == classical.at(lam));
            }
        }
}

TEST_CASE("products of staircases") {
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s) {
            StrictPartition sum(add(staircase(r).as_partition(), staircase(s).as_partition()).parts());
            CHECK(structure_constants(staircase(r), staircase(s)) == expansion(Basis::SympP, {{sum, Rational(1)}}));
        }
}

TEST_CASE("coproduct constants") {
    for (int r = 0; r <= 6; ++r)
        for (int k = 0; k <= r; ++k) {
            auto d = coproduct_constants(r ? sp({r}) : sp({}), k ? sp({k}) : sp({}));
            CHECK(d == expansion(Basis::SympQ, {{r - k ? sp({r - k}) : sp({}), Rational(1)}}));
        }
    for (int r = 1; r <= 4; ++r)
        for (const auto& mu : strict_subpartitions(staircase(r))) {
            auto d = coproduct_constants(staircase(r), mu);
            CHECK(d == expansion(Basis::SympQ, {{staircase_complement(mu, r), Rational(1)}}));
        }
}

TEST_CASE("Schur P in the symplectic P basis") {
    for (int r = 1; r <= 8; ++r) CHECK(schurP_in_sympP(sp({r})) == expansion(Basis::SympP, {{sp({r}), Rational(1)}}));
    auto b = schurP_in_sympP(sp({4, 2}));
    CHECK(b == expansion(Basis::SympP, {{sp({4, 2}), Rational(1)}, {sp({3, 1}), Rational(2)}, {sp({2}), Rational(1)}}));
    for (const auto& [mu, c] : schurP_in_sympP(sp({3, 2, 1})).coeffs) {
        CHECK(c.is_integer());
        CHECK(c.sign() > 0);
    }
}

TEST_CASE("Pieri products agree with the closed formula") {
    for (const auto& mu : enumerate_strict(6))
        for (int r = 1; r <= 3; ++r) {
            auto f = structure_constants(mu, sp({r}));
            auto closed = pieri_expand(mu, r);
            CHECK(f.coeffs.size() == closed.size());
            for (const auto& [lam, c] : closed) CHECK(f.at(lam) == Rational(c));
        }
}

TEST_CASE("multiplying by one and skewing by the empty shape") {
    for (const auto& mu : enumerate_strict(6)) {
        CHECK(structure_constants(mu, sp({})) == expansion(Basis::SympP, {{mu, Rational(1)}}));
        CHECK(structure_constants(sp({}), mu) == expansion(Basis::SympP, {{mu, Rational(1)}}));
        CHECK(coproduct_constants(mu, sp({})) == expansion(Basis::SympQ, {{mu, Rational(1)}}));
    }
}
