#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sympq/errors.hpp"
#include "sympq/laurent_poly.hpp"
#include "sympq/rational.hpp"
#include "sympq/ring_matrix.hpp"
#include "sympq/trunc_series.hpp"

using namespace sympq;

namespace {

// Leibniz expansion, the slow textbook definition.
Rational leibniz_det(const RingMatrix<Rational>& m) {
    const int n = m.rows();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
        Rational term(inversions % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

RingMatrix<Rational> random_skew(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
    RingMatrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = Rational(num(rng), den(rng));
            m(j, i) = -m(i, j);
        }
    return m;
}

LaurentPoly random_laurent(int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(-3, 3), c(-5, 5), terms(1, 4);
    LaurentPoly p = LaurentPoly::zero(nvars);
    for (int k = terms(rng); k > 0; --k) {
        std::vector<int> ex(nvars);
        for (auto& x : ex) x = e(rng);
        p += LaurentPoly::monomial(nvars, ex, Rational(c(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rationals are exact and canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
    LaurentPoly xi = LaurentPoly::variable(2, 0, -1);
    CHECK((x * xi) == LaurentPoly::constant(2, Rational(1)));
    CHECK((x + xi).pow(2) == x * x + LaurentPoly::constant(2, Rational(2)) + xi * xi);
    CHECK((x + y).to_string() == "x1 + x2");
    CHECK((x * Rational(2) + xi * Rational(2)).to_string() == "2*x1 + 2*x1^-1");
    CHECK((x - y).eval({Rational(3), Rational(1, 2)}) == Rational(5, 2));
}

TEST_CASE("exact division recovers factors and refuses non-divisors") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly a = random_laurent(2, rng), b = random_laurent(2, rng);
        if (b.is_zero() || a.is_zero()) continue;
        LaurentPoly p = a * b;
        CHECK(exact_divide(p, b, 0) * b == p);
    }
    LaurentPoly x = LaurentPoly::variable(1, 0);
    LaurentPoly one = LaurentPoly::constant(1, Rational(1));
    CHECK_THROWS_AS(exact_divide(x * x + one, x - one, 0), DivisibilityError);
}

TEST_CASE("truncated series multiply with truncation") {
    using S = TruncSeries<Rational>;
    S geometric(5);
    for (int k = 0; k <= 5; ++k) geometric[k] = Rational(1);
    S one_minus = S::constant(5, Rational(1)) - S::monomial(5, 1, Rational(1));
    CHECK(geometric * one_minus == S::constant(5, Rational(1)));
}

TEST_CASE("pfaffian of a 4x4 matches the three-term formula") {
    std::mt19937_64 rng(3);
    auto m = random_skew(4, rng);
    Rational want = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
    CHECK(pfaffian(m) == want);
}

TEST_CASE("pfaffian squared is the determinant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial)
        for (int n = 0; n <= 8; n += 2) {
            auto m = random_skew(n, rng);
            Rational pf = pfaffian(m);
            CHECK(pf * pf == determinant(m));
            if (n <= 6) CHECK(determinant(m) == leibniz_det(m));
        }
}

TEST_CASE("pfaffian over Laurent entries squares to the determinant") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        RingMatrix<LaurentPoly> m(4, 4, LaurentPoly::zero(2));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                m(i, j) = random_laurent(2, rng);
                m(j, i) = -m(i, j);
            }
        LaurentPoly pf = pfaffian(m);
        CHECK(pf * pf == determinant(m));
    }
}

TEST_CASE("matrix shape errors") {
    CHECK_THROWS_AS(pfaffian(RingMatrix<Rational>(3, 3)), StructuralError);
    CHECK_THROWS_AS(determinant(RingMatrix<Rational>(2, 3)), StructuralError);
    CHECK(determinant(RingMatrix<Rational>(0, 0)) == Rational(1));
}
