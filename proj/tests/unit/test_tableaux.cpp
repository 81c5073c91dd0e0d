#include <doctest.h>

#include <set>

#include "sympq/errors.hpp"
#include "sympq/factorial.hpp"
#include "sympq/ring_matrix.hpp"
#include "sympq/tableaux.hpp"

using namespace sympq;

namespace {

StrictPartition sp(std::vector<int> v) { return StrictPartition(std::move(v)); }

std::vector<Cell> shifted_cells(const StrictPartition& lam, const StrictPartition& mu) {
    std::vector<Cell> out;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = i + mu[i - 1]; j < i + lam[i - 1]; ++j) out.push_back({i, j});
    return out;
}

// The five conditions checked directly on codes (level = code/4 + 1,
// t = code%4: 0 k', 1 k, 2 ~k', 3 ~k).
bool satisfies_rules(const std::map<Cell, int>& f, bool primed_diagonal_allowed) {
    std::map<int, std::multiset<int>> rows, cols;
    std::set<int> diagonal_levels;
    for (const auto& [c, code] : f) {
        auto right = f.find({c.first, c.second + 1});
        if (right != f.end() && right->second < code) return false;
        auto below = f.find({c.first + 1, c.second});
        if (below != f.end() && below->second < code) return false;
        rows[c.first].insert(code);
        cols[c.second].insert(code);
        if (c.first == c.second) {
            if (!diagonal_levels.insert(code / 4).second) return false;
            if (!primed_diagonal_allowed && code % 2 == 0) return false;
        }
    }
    for (const auto& [r, s] : rows)
        for (int code : s)
            if (code % 2 == 0 && s.count(code) > 1) return false;
    for (const auto& [c, s] : cols)
        for (int code : s)
            if (code % 2 == 1 && s.count(code) > 1) return false;
    return true;
}

struct Brute {
    long count = 0;
    LaurentPoly sum;
};

Brute brute_force(const StrictPartition& lam, const StrictPartition& mu, int n, bool primed_diagonal_allowed) {
    auto cells = shifted_cells(lam, mu);
    Brute b{0, LaurentPoly::zero(n)};
    std::vector<int> codes(cells.size(), 0);
    while (true) {
        std::map<Cell, int> f;
        for (std::size_t k = 0; k < cells.size(); ++k) f[cells[k]] = codes[k];
        if (satisfies_rules(f, primed_diagonal_allowed)) {
            ++b.count;
            std::vector<int> ex(n, 0);
            for (int code : codes) ex[code / 4] += code % 4 < 2 ? 1 : -1;
            b.sum += LaurentPoly::monomial(n, ex, Rational(1));
        }
        std::size_t k = 0;
        while (k < codes.size() && ++codes[k] == 4 * n) codes[k++] = 0;
        if (k == codes.size()) break;
    }
    return b;
}

AlphabetEntry letter(const char* s) { return AlphabetEntry::parse(s); }

}  // namespace

TEST_CASE("alphabet order and text") {
    CHECK(letter("1'") < letter("1"));
    CHECK(letter("1") < letter("~1'"));
    CHECK(letter("~1") < letter("2'"));
    CHECK(letter("~3'").to_string() == "~3'");
    CHECK(AlphabetEntry::from_code(letter("~4").code()) == letter("~4"));
    CHECK_THROWS_AS(letter("x"), ParseError);
}

TEST_CASE("enumeration agrees with brute force") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& lam : enumerate_strict(5))
            for (const auto& mu : strict_subpartitions(lam)) {
                if (lam.weight() - mu.weight() > (n == 1 ? 5 : 4)) continue;
                SkewShiftedShape shape(lam, mu);
                for (bool primed : {true, false}) {
                    Brute b = brute_force(lam, mu, n, primed);
                    CHECK(tableau_count(shape, n, primed) == static_cast<std::uint64_t>(b.count));
                    CHECK(tableau_sum(shape, n, primed) == b.sum);
                    for (const auto& t : all_tableaux(shape, n, primed)) CHECK(t.is_valid(n, primed));
                }
            }
}

TEST_CASE("one box") {
    SkewShiftedShape box(sp({1}), sp({}));
    CHECK(tableau_sum(box, 1).to_string() == "2*x1 + 2*x1^-1");
    CHECK(tableau_count(box, 3, true) == 12);
    CHECK(tableau_count(box, 3, false) == 6);
}

TEST_CASE("tableau sums match the Pfaffian definition") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& lam : enumerate_strict(5))
            for (const auto& mu : strict_subpartitions(lam)) {
                SkewShiftedShape shape(lam, mu);
                auto model = specialize(ufac_Q_skew(lam, mu, FactorialParams::zeros(12)), SpecializationContext(n));
                CHECK(tableau_sum(shape, n) == model);
            }
}

TEST_CASE("single-variable sums are determinants of one-row sums") {
    auto one_row = [](int r) {
        if (r < 0) return LaurentPoly::zero(1);
        if (r == 0) return LaurentPoly::constant(1, Rational(1));
        return tableau_sum(SkewShiftedShape(sp({r}), sp({})), 1);
    };
    for (const auto& lam : enumerate_strict(7))
        for (const auto& mu : strict_subpartitions(lam)) {
            LaurentPoly got = tableau_sum(SkewShiftedShape(lam, mu), 1);
            int drop = lam.length() - mu.length();
            if (drop >= 2) {
                CHECK(got.is_zero());
                continue;
            }
            const int l = lam.length();
            RingMatrix<LaurentPoly> m(l, l, LaurentPoly::zero(1));
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j) m(i, j) = one_row(lam[i] - mu[j]);
            CHECK(got == determinant(m));
        }
}

TEST_CASE("flip of the worked example") {
    // n = 6, shape delta_5/(5,2)
    std::map<Cell, AlphabetEntry> e{
        {{2, 4}, letter("2'")}, {{2, 5}, letter("2")},   {{3, 3}, letter("1")},   {{3, 4}, letter("2'")},
        {{3, 5}, letter("~3'")}, {{4, 4}, letter("~4")}, {{4, 5}, letter("~4")}, {{5, 5}, letter("5'")}};
    Tableau t(SkewShiftedShape(staircase(5), sp({5, 2})), e);
    REQUIRE(t.is_valid(6));
    Tableau f = flip(t, 5, 6);
    CHECK(f.shape().outer() == sp({4, 3, 1}));
    CHECK(f.shape().inner().empty());
    std::map<Cell, AlphabetEntry> want{
        {{1, 1}, letter("~2")},  {{1, 2}, letter("3'")}, {{1, 3}, letter("4")},  {{1, 4}, letter("~5'")},
        {{2, 2}, letter("3'")},  {{2, 3}, letter("~5")}, {{2, 4}, letter("~5")}, {{3, 3}, letter("~6'")}};
    CHECK(f.entries() == want);
    CHECK(flip(f, 5, 6) == t);
}

TEST_CASE("flip is a weight-inverting involution") {
    const int r = 3, n = 2;
    const std::vector<int> reverse{1, 0}, invert{-1, -1};
    for (const auto& mu : strict_subpartitions(staircase(r))) {
        SkewShiftedShape shape(staircase(r), mu);
        std::set<std::map<Cell, AlphabetEntry>> images;
        for (const auto& t : all_tableaux(shape, n, true)) {
            Tableau f = flip(t, r, n);
            CHECK(f.is_valid(n));
            CHECK(f.shape().outer() == staircase_complement(mu, r));
            CHECK(flip(f, r, n) == t);
            CHECK(weight(f, SpecializationContext(n)) == weight(t, SpecializationContext(n)).signed_permute(reverse, invert));
            images.insert(f.entries());
        }
        CHECK(images.size() == tableau_count(shape, n, true));
        CHECK(tableau_count(SkewShiftedShape(staircase_complement(mu, r), sp({})), n, true) == images.size());
    }
}
