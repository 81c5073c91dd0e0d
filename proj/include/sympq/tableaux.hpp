#ifndef SYMPQ_TABLEAUX_HPP
#define SYMPQ_TABLEAUX_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sympq/laurent_models.hpp"
#include "sympq/laurent_poly.hpp"
#include "sympq/partitions.hpp"

namespace sympq {

// A letter of 1' < 1 < ~1' < ~1 < 2' < ... ; code = 4(level-1) + t with
// t = 0 (k'), 1 (k), 2 (~k'), 3 (~k). Codes compare like the letters.
struct AlphabetEntry {
    int level = 1;
    bool barred = false;
    bool primed = false;

    int code() const { return 4 * (level - 1) + (barred ? 2 : 0) + (primed ? 0 : 1); }
    static AlphabetEntry from_code(int code);
    // "3", "3'", "~3", "~3'"
    std::string to_string() const;
    static AlphabetEntry parse(const std::string& text);  // throws ParseError
    friend bool operator==(const AlphabetEntry& a, const AlphabetEntry& b) { return a.code() == b.code(); }
    friend auto operator<=>(const AlphabetEntry& a, const AlphabetEntry& b) { return a.code() <=> b.code(); }
};

using Cell = std::pair<int, int>;  // (row, column), 1-based

class Tableau {
public:
    Tableau() = default;
    Tableau(SkewShiftedShape shape, std::map<Cell, AlphabetEntry> entries);

    const SkewShiftedShape& shape() const { return shape_; }
    const std::map<Cell, AlphabetEntry>& entries() const { return entries_; }
    const AlphabetEntry& at(int row, int col) const { return entries_.at({row, col}); }

    // T1-T5, levels <= n, and (when primed_diagonal_allowed is false) no
    // primed letter on the main diagonal.
    bool is_valid(int n, bool primed_diagonal_allowed = true) const;

    // One line per row; cells of the inner shape print as ".".
    std::string render() const;
    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    SkewShiftedShape shape_;
    std::map<Cell, AlphabetEntry> entries_;
};

// Calls f on every tableau of the shape with levels <= n, each exactly
// once, in lexicographic order of the row-major code sequence.
void enumerate_tableaux(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed,
                        const std::function<void(const Tableau&)>& f);
std::vector<Tableau> all_tableaux(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed);
std::uint64_t tableau_count(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed);

// x^T: exponent of x_k is m(k') + m(k) - m(~k') - m(~k).
LaurentPoly weight(const Tableau& t, SpecializationContext ctx);

LaurentPoly tableau_sum(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed = true);

// Sum over tableaux of prod_cells cell_weight(code, row, col); the weights
// are multiplied in row-major order with shared prefixes.
LaurentPoly weighted_tableau_sum(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed,
                                 const std::function<LaurentPoly(int code, int row, int col)>& cell_weight);

// Relabel k', k, ~k', ~k to ~l, ~l', l, l' (l = n+1-k) and reflect in the
// anti-diagonal of S(delta_r). Throws DomainError unless the shape fits.
Tableau flip(const Tableau& t, int r, int n);

}  // namespace sympq

#endif
