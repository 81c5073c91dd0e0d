#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sympq/errors.hpp"
#include "sympq/laurent_models.hpp"

using namespace sympq;

namespace {

StrictPartition sp(std::vector<int> v) { return StrictPartition(std::move(v)); }

LaurentPoly x_pow(int k) { return LaurentPoly::variable(1, 0, k); }

// q_r(x, 1/x) from e = (1, x + 1/x, 1) and h_k = sum_i x^{k-2i}.
LaurentPoly one_variable_q(int r) {
    auto h = [](int k) {
        LaurentPoly s = LaurentPoly::zero(1);
        for (int i = 0; i <= k; ++i) s += x_pow(k - 2 * i);
        return k < 0 ? LaurentPoly::zero(1) : s;
    };
    return h(r) + (x_pow(1) + x_pow(-1)) * h(r - 1) + h(r - 2);
}

// Weyl dimension formula for Sp(2n), rho = (n, ..., 1).
Rational symplectic_dimension(const Partition& mu, int n) {
    std::vector<int> l(n), rho(n);
    for (int i = 0; i < n; ++i) {
        rho[i] = n - i;
        l[i] = mu[i] + rho[i];
    }
    Rational d(1);
    for (int i = 0; i < n; ++i) {
        d *= Rational(l[i], rho[i]);
        for (int j = i + 1; j < n; ++j)
            d *= Rational((l[i] - l[j]) * (l[i] + l[j]), (rho[i] - rho[j]) * (rho[i] + rho[j]));
    }
    return d;
}

}  // namespace

TEST_CASE("one-variable values") {
    CHECK(specialize(usymp_Q(sp({1})), SpecializationContext(1)).to_string() == "2*x1 + 2*x1^-1");
    CHECK(f_tilde(1) == x_pow(1) + x_pow(-1));
    CHECK(f_tilde(2) == (x_pow(1) + x_pow(-1)).pow(2));
    CHECK(f_tilde(0) == LaurentPoly::constant(1, Rational(1)));
    for (int r = 1; r <= 8; ++r) {
        CHECK(specialize(q(r), SpecializationContext(1)) == one_variable_q(r));
        CHECK(g_tilde(r) == one_variable_q(r));
    }
}

TEST_CASE("specializations are Weyl group invariant") {
    std::mt19937_64 rng(4);
    const int n = 3;
    for (const auto& lam : enumerate_strict(5)) {
        LaurentPoly f = specialize(usymp_Q(lam), SpecializationContext(n));
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> perm(n), sign(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (auto& s : sign) s = rng() % 2 ? 1 : -1;
            CHECK(f.signed_permute(perm, sign) == f);
        }
    }
}

TEST_CASE("symplectic Schur polynomials") {
    LaurentPoly x1 = LaurentPoly::variable(2, 0), x2 = LaurentPoly::variable(2, 1);
    LaurentPoly y1 = LaurentPoly::variable(2, 0, -1), y2 = LaurentPoly::variable(2, 1, -1);
    SpecializationContext two(2);
    CHECK(bialternant_SC(Partition({1}), two) == x1 + y1 + x2 + y2);
    CHECK(bialternant_SC(Partition({1, 1}), two) == x1 * x2 + x1 * y2 + y1 * x2 + y1 * y2 + LaurentPoly::constant(2, Rational(1)));
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(6, n)) {
            LaurentPoly sc = bialternant_SC(mu, SpecializationContext(n));
            CHECK(sc.eval(std::vector<Rational>(n, Rational(1))) == symplectic_dimension(mu, n));
            CHECK(specialize(usymp_schur(mu), SpecializationContext(n)) == sc);
        }
}

TEST_CASE("expansion in the symplectic Schur basis") {
    const int n = 2;
    SpecializationContext ctx(n);
    std::map<Partition, Rational> want{
        {Partition({3, 1}), Rational(2)}, {Partition({2}), Rational(-1, 3)}, {Partition(), Rational(5)}};
    LaurentPoly f = LaurentPoly::zero(n);
    for (const auto& [mu, c] : want) f += bialternant_SC(mu, ctx) * c;
    CHECK(expand_in_SC_basis(f, ctx) == want);
    for (const auto& lam : enumerate_strict(5, n)) {
        LaurentPoly p = specialize(usymp_P(lam), ctx);
        LaurentPoly back = LaurentPoly::zero(n);
        for (const auto& [mu, c] : expand_in_SC_basis(p, ctx)) back += bialternant_SC(mu, ctx) * c;
        CHECK(back == p);
    }
}

TEST_CASE("separation of variables") {
    for (const auto& lam : {sp({1}), sp({2, 1}), sp({3, 1}), sp({3, 2, 1})}) {
        CHECK(separation_check(lam, 1, 1).ok);
        CHECK(separation_check(lam, 2, 1).ok);
    }
}

TEST_CASE("Nimmo-type Pfaffian agrees with the specialization") {
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : enumerate_strict(6)) {
            SpecializationContext ctx(n);
            LaurentPoly fq = specialize(usymp_Q(lam), ctx), fp = specialize(usymp_P(lam), ctx);
            for (int k = 0; k < 3; ++k) {
                EvaluationPoint pt = random_point(n, rng);
                CHECK(nimmo_eval(lam, PQKind::Q, pt) == fq.eval(pt.values));
                CHECK(nimmo_eval(lam, PQKind::P, pt) == fp.eval(pt.values));
                if (lam.length() <= n)
                    CHECK(weyl_hall_littlewood_oracle(lam.as_partition(), Rational(-1), pt) == fp.eval(pt.values));
            }
        }
}

TEST_CASE("poles are reported") {
    EvaluationPoint zero{{Rational(0), Rational(3)}};
    CHECK_THROWS_AS(nimmo_eval(sp({1}), PQKind::Q, zero), PoleError);
    EvaluationPoint inverse{{Rational(2), Rational(1, 2)}};
    CHECK_THROWS_AS(nimmo_eval(sp({1}), PQKind::Q, inverse), PoleError);
    CHECK_THROWS_AS(nimmo_eval(sp({1}), PQKind::Q, EvaluationPoint{}), DomainError);
}

TEST_CASE("staircase and generating function identities") {
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= r; ++s) CHECK(delta_identities(r, s, SpecializationContext(3)).ok);
    CHECK(check_gf_length1(2, 6).ok);
    CHECK(check_gf_length2(2, 5).ok);
}
