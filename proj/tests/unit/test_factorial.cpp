#include <doctest.h>

#include <random>

#include "sympq/errors.hpp"
#include "sympq/factorial.hpp"
#include "sympq/tableaux.hpp"

using namespace sympq;

namespace {

StrictPartition sp(std::vector<int> v) { return StrictPartition(std::move(v)); }

// 2((x|a)^d - (1/x|a)^d)(x + 1/x)/(x - 1/x) at a number.
Rational g_fac_at(int d, const Rational& x, const std::vector<Rational>& a) {
    if (d == 0) return Rational(1);
    Rational up(1), down(1);
    for (int i = 0; i < d; ++i) {
        up *= x + a[i];
        down *= x.inverse() + a[i];
    }
    return Rational(2) * (up - down) * (x + x.inverse()) / (x - x.inverse());
}

}  // namespace

TEST_CASE("parameter lists") {
    auto a = FactorialParams::parse("0,1/2,-3");
    CHECK(a.size() == 3);
    CHECK(a.at(1) == Rational(1, 2));
    CHECK(a.to_string() == "0,1/2,-3");
    CHECK(a.slice(1, 3) == std::vector<Rational>{Rational(1, 2), Rational(-3)});
    CHECK_THROWS_AS(a.at(3), DomainError);
    CHECK_THROWS_AS(FactorialParams::parse("0,x"), ParseError);
    CHECK(elementary(2, {Rational(1), Rational(2), Rational(3)}) == Rational(11));
    CHECK(elementary(4, {Rational(1)}) == Rational(0));
}

TEST_CASE("one-row factorial values") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 4; ++trial) {
        FactorialParams a = random_params(10, rng);
        for (int d = 0; d <= 6; ++d) {
            LaurentPoly g = g_tilde_fac(d, a);
            for (const Rational x : {Rational(2), Rational(-3, 5), Rational(7, 2)})
                CHECK(g.eval({x}) == g_fac_at(d, x, a.values));
            CHECK(g_tilde_fac_from_g(d, a) == g);
        }
        CHECK(specialize(ufac_Q(sp({1}), a), SpecializationContext(1)).to_string() == "2*x1 + 2*x1^-1");
    }
}

TEST_CASE("the truncated reading of the one-row expansion breaks at r = 3") {
    FactorialParams a(std::vector<Rational>{Rational(0), Rational(1), Rational(2), Rational(5), Rational(-1)});
    for (int r = 0; r <= 2; ++r) CHECK(g_tilde_fac_from_g(r, a, FgReading::Truncated) == g_tilde_fac(r, a));
    CHECK(g_tilde_fac_from_g(3, a, FgReading::Truncated) != g_tilde_fac(3, a));
}

TEST_CASE("zero parameters give the ordinary functions") {
    auto zero = FactorialParams::zeros(12);
    for (const auto& lam : enumerate_strict(7)) CHECK(ufac_Q(lam, zero) == usymp_Q(lam));
    for (int d = 0; d <= 6; ++d) CHECK(g_tilde_fac(d, zero) == g_tilde(d));
}

TEST_CASE("elementary symmetric relation") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        FactorialParams a = random_params(10, rng);
        for (int r = 0; r <= 7; ++r)
            for (int i = 0; i <= r; ++i)
                for (int j = 0; i + j <= r; ++j) CHECK(check_rel_e(a, r, i, j));
    }
}

TEST_CASE("one-row functions in a split alphabet") {
    std::mt19937_64 rng(5);
    FactorialParams a = random_params(10, rng);
    for (int n = 1; n <= 2; ++n)
        for (int r = 0; r <= 4; ++r) CHECK(check_Q_equals_Rg(r, n, a).ok);
    CHECK_THROWS(check_Q_equals_Rg(-1, 1, a));
}

TEST_CASE("factorial tableau sums") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 2; ++trial) {
        FactorialParams a = random_params(12, rng);
        for (int n = 1; n <= 2; ++n)
            for (const auto& lam : enumerate_strict(4))
                for (const auto& mu : strict_subpartitions(lam))
                    CHECK(fac_tableau_sum(SkewShiftedShape(lam, mu), n, a) ==
                          specialize(ufac_Q_skew(lam, mu, a), SpecializationContext(n)));
    }
    FactorialParams shifted(std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    CHECK_THROWS_AS(fac_tableau_sum(SkewShiftedShape(sp({1})), 1, shifted), DomainError);
}

TEST_CASE("factorial Nimmo formula and separation") {
    std::mt19937_64 rng(7);
    FactorialParams a = random_params(12, rng);
    for (int n = 1; n <= 2; ++n)
        for (const auto& lam : enumerate_strict(5)) {
            LaurentPoly f = specialize(ufac_Q(lam, a), SpecializationContext(n));
            for (int k = 0; k < 3; ++k) {
                EvaluationPoint pt = random_point(n, rng);
                CHECK(nimmo_eval(lam, PQKind::Q, pt, &a.values) == f.eval(pt.values));
            }
        }
    for (const auto& lam : {sp({1}), sp({2, 1}), sp({3, 1})}) CHECK(check_fac_separation(lam, 1, 1, a).ok);
    EvaluationPoint pt{{Rational(2)}};
    CHECK_THROWS_AS(nimmo_eval(sp({1}), PQKind::P, pt, &a.values), DomainError);
}
