#include <doctest.h>

#include <set>

#include "sympq/errors.hpp"
#include "sympq/partitions.hpp"

using namespace sympq;

namespace {

StrictPartition sp(std::vector<int> v) { return StrictPartition(std::move(v)); }

// Number of partitions of w into distinct parts, by the usual 0/1 knapsack.
long distinct_part_count(int w) {
    std::vector<long> c(w + 1, 0);
    c[0] = 1;
    for (int part = 1; part <= w; ++part)
        for (int t = w; t >= part; --t) c[t] += c[t - part];
    return c[w];
}

// Components of the shifted skew diagram, from scratch: list the cells,
// then merge edge neighbours with a tiny union-find.
int components_oracle(const StrictPartition& lam, const StrictPartition& mu) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = i + mu[i]; j < i + lam[i]; ++j) cells.push_back({i, j});
    std::vector<int> parent(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) parent[k] = static_cast<int>(k);
    auto find = [&](int k) {
        while (parent[k] != k) k = parent[k] = parent[parent[k]];
        return k;
    };
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            int d = std::abs(cells[a].first - cells[b].first) + std::abs(cells[a].second - cells[b].second);
            if (d == 1) parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
        }
    std::set<int> roots;
    for (std::size_t k = 0; k < cells.size(); ++k) roots.insert(find(static_cast<int>(k)));
    return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("parsing") {
    CHECK(parse_strict("4,3,1") == sp({4, 3, 1}));
    CHECK(parse_strict("-").empty());
    CHECK(parse_strict("").empty());
    CHECK_THROWS_AS(parse_strict("2,2"), ParseError);
    CHECK_THROWS_AS(parse_strict("3,a"), ParseError);
    CHECK(parse_partition("2,2,1") == Partition({2, 2, 1}));
    CHECK(sp({4, 3, 1}).to_string() == "4,3,1");
}

TEST_CASE("strict enumeration") {
    auto small = enumerate_strict(3);
    std::vector<StrictPartition> want{sp({}), sp({1}), sp({2}), sp({3}), sp({2, 1})};
    CHECK(std::set<StrictPartition>(small.begin(), small.end()) == std::set<StrictPartition>(want.begin(), want.end()));
    CHECK(small.size() == want.size());
    CHECK(enumerate_strict(0) == std::vector<StrictPartition>{sp({})});
    long total = 0;
    for (int w = 0; w <= 10; ++w) total += distinct_part_count(w);
    CHECK(static_cast<long>(enumerate_strict(10).size()) == total);
    for (const auto& lam : enumerate_strict(12, 2)) CHECK(lam.length() <= 2);
}

TEST_CASE("staircase complement") {
    CHECK(staircase_complement(sp({5, 2}), 5) == sp({4, 3, 1}));
    CHECK(staircase_complement(staircase(4), 4).empty());
    CHECK(staircase_complement(sp({}), 4) == sp({4, 3, 2, 1}));
    for (int r = 1; r <= 6; ++r)
        for (const auto& lam : strict_subpartitions(staircase(r)))
            CHECK(staircase_complement(staircase_complement(lam, r), r) == lam);
}

TEST_CASE("pieri intermediate shapes") {
    CHECK(pieri_kappas(sp({4, 3, 1}), sp({4, 3, 1}), 2) == std::vector<StrictPartition>{sp({4, 2, 1}), sp({4, 3})});
    CHECK(pieri_kappas(sp({3, 1}), sp({3, 1}), 0) == std::vector<StrictPartition>{sp({3, 1})});
    CHECK(pieri_kappas(sp({3, 1}), sp({3, 1}), 1).empty());
}

TEST_CASE("component counts") {
    CHECK(components(sp({4, 3, 1}), sp({4, 2, 1})) == 1);
    CHECK(components(sp({4, 3, 1}), sp({4, 3})) == 1);
    CHECK(length_drop_indicator(sp({4, 3, 1}), sp({4, 3})) == 1);
    CHECK(length_drop_indicator(sp({4, 3, 1}), sp({4, 2, 1})) == 0);
    CHECK_THROWS_AS(components(sp({4, 3, 1}), sp({2})), DomainError);
    for (const auto& lam : enumerate_strict(12))
        for (const auto& mu : strict_subpartitions(lam)) {
            if (!interlaces(lam, mu)) continue;
            CHECK(components(lam, mu) == components_oracle(lam, mu));
            CHECK(flood_fill_components(lam, mu) == components_oracle(lam, mu));
        }
}

TEST_CASE("interlacing gives a horizontal strip") {
    for (const auto& lam : enumerate_strict(9))
        for (const auto& mu : strict_subpartitions(lam)) {
            if (!interlaces(lam, mu)) continue;
            CHECK(contains(lam, mu));
            std::set<int> cols;  // unshifted columns
            bool one_per_column = true;
            for (int i = 0; i < lam.length(); ++i)
                for (int j = mu[i]; j < lam[i]; ++j) one_per_column &= cols.insert(j).second;
            CHECK(one_per_column);
        }
}

TEST_CASE("skew shapes") {
    SkewShiftedShape s(sp({5, 4, 3, 2, 1}), sp({5, 2}));
    CHECK(s.size() == 8);
    CHECK(s.cells().front() == std::pair<int, int>{2, 4});
    CHECK_THROWS_AS(SkewShiftedShape(sp({2}), sp({3})), DomainError);
}
