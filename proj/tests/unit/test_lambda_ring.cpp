#include <doctest.h>

#include <random>
#include <set>

#include "sympq/lambda_ring.hpp"
#include "sympq/ring_matrix.hpp"

using namespace sympq;

namespace {

// h_0..h_d at a point, from prod 1/(1 - x t).
std::vector<Rational> complete_values(const std::vector<Rational>& x, int d) {
    std::vector<Rational> h(d + 1, Rational(0));
    h[0] = Rational(1);
    for (const auto& xi : x)
        for (int k = 1; k <= d; ++k) h[k] += xi * h[k - 1];
    return h;
}

Rational eval_in_h(const LambdaElement& e, const std::vector<Rational>& h) {
    Rational total(0);
    for (const auto& [m, c] : e.terms()) {
        Rational term = c;
        for (int i : m) term *= i < static_cast<int>(h.size()) ? h[i] : Rational(0);
        total += term;
    }
    return total;
}

Rational bialternant(const Partition& lam, const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    RingMatrix<Rational> num(n, n), den(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            num(i, j) = x[i].pow(lam[j] + n - 1 - j);
            den(i, j) = x[i].pow(n - 1 - j);
        }
    return determinant(num) / determinant(den);
}

}  // namespace

TEST_CASE("elementary functions in terms of complete ones") {
    for (int p = 1; p <= 6; ++p) {
        LambdaElement alt = LambdaElement(0);
        for (int i = 0; i <= p; ++i) {
            LambdaElement ei = i == 0 ? LambdaElement(1) : elementary_in_h(i);
            LambdaElement hi = p - i == 0 ? LambdaElement(1) : h(p - i);
            alt += ei * hi * Rational(i % 2 ? -1 : 1);
        }
        CHECK(alt.is_zero());
    }
}

TEST_CASE("embedding is a ring map") {
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) CHECK(embed(q(r) * q(s)) == q_in_h(r) * q_in_h(s));
}

TEST_CASE("Jacobi-Trudi agrees with the bialternant") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (const auto& lam : enumerate_partitions(6, 4)) {
        std::vector<Rational> x;
        std::set<Rational> used;
        while (x.size() < 4) {
            Rational v(num(rng), den(rng));
            if (!v.is_zero() && used.insert(v).second) x.push_back(v);
        }
        CHECK(eval_in_h(schur_s(lam), complete_values(x, 12)) == bialternant(lam, x));
    }
}

TEST_CASE("one-row P in the universal symplectic Schur basis") {
    for (int r = 1; r <= 8; ++r) {
        std::map<Partition, Rational> want;
        for (const auto& mu : enumerate_partitions(r)) {
            bool hook = !mu.empty();
            for (int i = 1; i < mu.length(); ++i) hook &= mu[i] == 1;
            int w = mu.weight();
            if (hook && w == r) want[mu] = Rational(1);
            else if (hook && w % 2 == r % 2 && w < r) want[mu] = Rational(2);
            else if (mu.empty() && r % 2 == 0) want[mu] = Rational(1);
        }
        CHECK(g_tilde_expansion(StrictPartition({r})) == want);
    }
}

TEST_CASE("top-degree coefficients are the classical P-to-s ones") {
    // P_31 = s_31 + s_22 + s_211, P_32 = s_32 + s_311 + s_221, P_21 = s_21
    auto top = [](const StrictPartition& lam) {
        std::map<Partition, Rational> out;
        for (const auto& [mu, c] : g_tilde_expansion(lam))
            if (mu.weight() == lam.weight()) out[mu] = c;
        return out;
    };
    using M = std::map<Partition, Rational>;
    CHECK(top(StrictPartition({2, 1})) == M{{Partition({2, 1}), Rational(1)}});
    CHECK(top(StrictPartition({3, 1})) == M{{Partition({3, 1}), Rational(1)}, {Partition({2, 2}), Rational(1)}, {Partition({2, 1, 1}), Rational(1)}});
    CHECK(top(StrictPartition({3, 2})) ==
          M{{Partition({3, 2}), Rational(1)}, {Partition({3, 1, 1}), Rational(1)}, {Partition({2, 2, 1}), Rational(1)}});
}

TEST_CASE("staircase sums factor into symplectic Schur products") {
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= r; ++s) {
            StrictPartition sum(add(staircase(r).as_partition(), staircase(s).as_partition()).parts());
            LambdaElement lhs = embed(usymp_P(sum));
            LambdaElement rhs = usymp_schur(staircase(r).as_partition()) * usymp_schur(staircase(s).as_partition());
            CHECK(expand_in_usymp_schur(lhs) == expand_in_usymp_schur(rhs));
        }
}

TEST_CASE("universal symplectic Schur functions expand to themselves") {
    for (const auto& mu : enumerate_partitions(5))
        CHECK(expand_in_usymp_schur(usymp_schur(mu)) == std::map<Partition, Rational>{{mu, Rational(1)}});
}
