#ifndef SYMPQ_PARTITIONS_HPP
#define SYMPQ_PARTITIONS_HPP

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sympq {

// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    // Throws DomainError unless weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    // i-th part, 0-based, zero past the end.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    std::string to_string() const;  // "4,3,1" or "-"
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Strictly decreasing positive parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    Partition as_partition() const { return Partition(parts_); }
    // Cells (i,j) of the shifted diagram, 1-based: i <= j <= parts[i-1]+i-1.
    std::vector<std::pair<int, int>> shifted_cells() const;

    std::string to_string() const;
    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

std::vector<int> parse_parts(std::string_view text);  // "4,3,1" / "-" / ""
Partition parse_partition(std::string_view text);
StrictPartition parse_strict(std::string_view text);

StrictPartition staircase(int r);  // (r, r-1, ..., 1)

// S(inner) is contained in S(outer).
bool contains(const StrictPartition& outer, const StrictPartition& inner);
bool contains(const Partition& outer, const Partition& inner);

class SkewShiftedShape {
public:
    SkewShiftedShape() = default;
    // Throws DomainError unless inner is contained in outer.
    SkewShiftedShape(StrictPartition outer, StrictPartition inner);
    explicit SkewShiftedShape(StrictPartition outer) : SkewShiftedShape(std::move(outer), {}) {}

    const StrictPartition& outer() const { return outer_; }
    const StrictPartition& inner() const { return inner_; }
    // Row-major list of cells of S(outer) \ S(inner), 1-based.
    std::vector<std::pair<int, int>> cells() const;
    int size() const { return outer_.weight() - inner_.weight(); }
    std::string to_string() const;
    friend bool operator==(const SkewShiftedShape&, const SkewShiftedShape&) = default;

private:
    StrictPartition outer_, inner_;
};

// lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... with zero padding.
bool interlaces(const StrictPartition& lam, const StrictPartition& mu);

// a(lam, mu): connected components of S(lam/mu) for lam > mu, by the
// counting formula. Throws DomainError if lam does not interlace mu.
int components(const StrictPartition& lam, const StrictPartition& mu);

// Edge-connected components of S(outer/inner) by flood fill.
int flood_fill_components(const StrictPartition& outer, const StrictPartition& inner);

int length_drop_indicator(const StrictPartition& mu, const StrictPartition& kappa);

// Parts of {1..r} not in lam.
StrictPartition staircase_complement(const StrictPartition& lam, int r);

// All kappa with mu > kappa, lam > kappa and (|mu|-|kappa|)+(|lam|-|kappa|) = r,
// in ascending lexicographic order.
std::vector<StrictPartition> pieri_kappas(const StrictPartition& mu, const StrictPartition& lam, int r);

// Strict partitions with weight <= max_weight and length <= max_length,
// by weight, then descending lexicographic within a weight.
std::vector<StrictPartition> enumerate_strict(int max_weight, int max_length = 1 << 30);
void for_each_strict(int max_weight, int max_length, const std::function<void(const StrictPartition&)>& f);
std::vector<StrictPartition> strict_of_weight(int weight);

// Same conventions, for ordinary partitions.
std::vector<Partition> enumerate_partitions(int max_weight, int max_length = 1 << 30);
std::vector<Partition> partitions_of_weight(int weight, int max_length = 1 << 30);

// Strict mu with S(mu) inside S(lam), ascending by weight.
std::vector<StrictPartition> strict_subpartitions(const StrictPartition& lam);

// Componentwise sum with zero padding (used for mu + delta_n).
Partition add(const Partition& a, const Partition& b);

}  // namespace sympq

#endif
