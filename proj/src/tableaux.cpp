#include "sympq/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sympq/errors.hpp"

namespace sympq {

AlphabetEntry AlphabetEntry::from_code(int code) {
    if (code < 0) throw DomainError("negative letter code");
    AlphabetEntry e;
    e.level = code / 4 + 1;
    int t = code % 4;
    e.barred = t >= 2;
    e.primed = t % 2 == 0;
    return e;
}

std::string AlphabetEntry::to_string() const {
    return std::string(barred ? "~" : "") + std::to_string(level) + (primed ? "'" : "");
}

AlphabetEntry AlphabetEntry::parse(const std::string& text) {
    std::string s = text;
    AlphabetEntry e;
    if (!s.empty() && s.front() == '~') {
        e.barred = true;
        s.erase(0, 1);
    }
    if (!s.empty() && s.back() == '\'') {
        e.primed = true;
        s.pop_back();
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("bad tableau letter '" + text + "'");
    e.level = std::stoi(s);
    if (e.level < 1) throw ParseError("bad tableau letter '" + text + "'");
    return e;
}

Tableau::Tableau(SkewShiftedShape shape, std::map<Cell, AlphabetEntry> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    auto cells = shape_.cells();
    if (cells.size() != entries_.size()) throw DomainError("tableau entries do not match its shape");
    for (const auto& c : cells)
        if (!entries_.count(c)) throw DomainError("tableau entries do not match its shape");
}

namespace {

bool is_primed(int code) { return code % 2 == 0; }

struct Layout {
    std::vector<Cell> cells;
    std::vector<int> left, up, prev_diag;
    std::vector<char> diag;
};

Layout make_layout(const SkewShiftedShape& shape) {
    Layout L;
    L.cells = shape.cells();
    std::map<Cell, int> index;
    for (int k = 0; k < static_cast<int>(L.cells.size()); ++k) index[L.cells[k]] = k;
    int last_diag = -1;
    for (const auto& [i, j] : L.cells) {
        auto find = [&](int a, int b) {
            auto it = index.find({a, b});
            return it == index.end() ? -1 : it->second;
        };
        L.left.push_back(find(i, j - 1));
        L.up.push_back(find(i - 1, j));
        L.diag.push_back(i == j);
        L.prev_diag.push_back(i == j ? last_diag : -1);
        if (i == j) last_diag = index[{i, j}];
    }
    return L;
}

// Row-major backtracking. Only immediate neighbours are checked: rows and
// columns of a skew shifted shape are contiguous, so weak increase plus
// "no two equal primed letters side by side" is T1 and T3, and likewise
// for columns. Diagonal entries weakly increase, so T5 is a strict level
// increase between consecutive diagonal cells.
template <class Visitor>
void fill(const Layout& L, int n, bool primed_diagonal_allowed, std::vector<int>& codes, std::size_t pos,
          Visitor& v) {
    if (pos == L.cells.size()) {
        v.leaf(codes);
        return;
    }
    int lo = 0;
    if (int l = L.left[pos]; l >= 0) lo = std::max(lo, codes[l] + (is_primed(codes[l]) ? 1 : 0));
    if (int u = L.up[pos]; u >= 0) lo = std::max(lo, codes[u] + (is_primed(codes[u]) ? 0 : 1));
    if (L.diag[pos] && L.prev_diag[pos] >= 0) lo = std::max(lo, 4 * (codes[L.prev_diag[pos]] / 4 + 1));
    for (int c = lo; c < 4 * n; ++c) {
        if (L.diag[pos] && !primed_diagonal_allowed && is_primed(c)) continue;
        codes[pos] = c;
        v.enter(pos, c);
        fill(L, n, primed_diagonal_allowed, codes, pos + 1, v);
        v.leave(pos, c);
    }
}

struct CollectVisitor {
    const SkewShiftedShape& shape;
    const Layout& L;
    const std::function<void(const Tableau&)>& f;
    void enter(std::size_t, int) {}
    void leave(std::size_t, int) {}
    void leaf(const std::vector<int>& codes) {
        std::map<Cell, AlphabetEntry> e;
        for (std::size_t k = 0; k < codes.size(); ++k) e.emplace(L.cells[k], AlphabetEntry::from_code(codes[k]));
        f(Tableau(shape, std::move(e)));
    }
};

struct CountVisitor {
    std::uint64_t count = 0;
    void enter(std::size_t, int) {}
    void leave(std::size_t, int) {}
    void leaf(const std::vector<int>&) { ++count; }
};

struct WeightVisitor {
    Exponent exp{};
    std::unordered_map<Exponent, std::int64_t, ExponentHash> acc;
    static int sign(int code) { return code % 4 < 2 ? 1 : -1; }
    void enter(std::size_t, int c) { exp[c / 4] = static_cast<std::int16_t>(exp[c / 4] + sign(c)); }
    void leave(std::size_t, int c) { exp[c / 4] = static_cast<std::int16_t>(exp[c / 4] - sign(c)); }
    void leaf(const std::vector<int>&) { ++acc[exp]; }
};

struct ProductVisitor {
    const Layout& L;
    const std::function<LaurentPoly(int, int, int)>& w;
    std::vector<LaurentPoly> prefix;
    LaurentPoly total;
    void enter(std::size_t pos, int c) {
        prefix[pos + 1] = prefix[pos] * w(c, L.cells[pos].first, L.cells[pos].second);
    }
    void leave(std::size_t, int) {}
    void leaf(const std::vector<int>& codes) { total += prefix[codes.size()]; }
};

void check_levels(int n) {
    if (n < 1 || n > kMaxVars) throw DomainError("tableau level bound must be in 1.." + std::to_string(kMaxVars));
}

}  // namespace

bool Tableau::is_valid(int n, bool primed_diagonal_allowed) const {
    auto cells = shape_.cells();
    auto code_at = [&](int i, int j) -> int {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? -1 : it->second.code();
    };
    for (const auto& [i, j] : cells) {
        int c = code_at(i, j);
        if (c < 0 || c >= 4 * n) return false;
        if (int l = code_at(i, j - 1); l >= 0 && (l > c || (l == c && is_primed(c)))) return false;
        if (int u = code_at(i - 1, j); u >= 0 && (u > c || (u == c && !is_primed(c)))) return false;
        if (i == j && !primed_diagonal_allowed && is_primed(c)) return false;
    }
    // T3/T4 over whole rows and columns, T5 over the whole diagonal.
    std::map<std::pair<int, int>, int> row_count, col_count, diag_count;
    for (const auto& [cell, e] : entries_) {
        int c = e.code();
        if (is_primed(c) && ++row_count[{cell.first, c}] > 1) return false;
        if (!is_primed(c) && ++col_count[{cell.second, c}] > 1) return false;
        if (cell.first == cell.second && ++diag_count[{0, e.level}] > 1) return false;
    }
    return true;
}

std::string Tableau::render() const {
    const auto& outer = shape_.outer();
    const auto& inner = shape_.inner();
    std::ostringstream os;
    for (int i = 1; i <= outer.length(); ++i) {
        if (i > 1) os << "\n";
        for (int k = 1; k < i; ++k) os << "   ";
        for (int j = i; j <= outer[i - 1] + i - 1; ++j) {
            std::string tok = j <= inner[i - 1] + i - 1 ? "." : entries_.at({i, j}).to_string();
            os << tok;
            if (j < outer[i - 1] + i - 1) os << std::string(tok.size() < 3 ? 3 - tok.size() : 1, ' ');
        }
    }
    return os.str();
}

void enumerate_tableaux(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed,
                        const std::function<void(const Tableau&)>& f) {
    check_levels(n);
    Layout L = make_layout(shape);
    std::vector<int> codes(L.cells.size());
    CollectVisitor v{shape, L, f};
    fill(L, n, primed_diagonal_allowed, codes, 0, v);
}

std::vector<Tableau> all_tableaux(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed) {
    std::vector<Tableau> out;
    enumerate_tableaux(shape, n, primed_diagonal_allowed, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::uint64_t tableau_count(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed) {
    check_levels(n);
    Layout L = make_layout(shape);
    std::vector<int> codes(L.cells.size());
    CountVisitor v;
    fill(L, n, primed_diagonal_allowed, codes, 0, v);
    return v.count;
}

LaurentPoly weight(const Tableau& t, SpecializationContext ctx) {
    Exponent e{};
    for (const auto& [cell, a] : t.entries()) {
        if (a.level > ctx.n) throw DomainError("tableau letter exceeds the number of variables");
        e[a.level - 1] = static_cast<std::int16_t>(e[a.level - 1] + (a.barred ? -1 : 1));
    }
    return LaurentPoly::monomial(ctx.n, e);
}

LaurentPoly tableau_sum(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed) {
    check_levels(n);
    Layout L = make_layout(shape);
    std::vector<int> codes(L.cells.size());
    WeightVisitor v;
    fill(L, n, primed_diagonal_allowed, codes, 0, v);
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(v.acc.size());
    for (const auto& [e, c] : v.acc) terms.emplace_back(e, Rational(c));
    return LaurentPoly::from_terms(n, std::move(terms));
}

LaurentPoly weighted_tableau_sum(const SkewShiftedShape& shape, int n, bool primed_diagonal_allowed,
                                 const std::function<LaurentPoly(int, int, int)>& cell_weight) {
    check_levels(n);
    Layout L = make_layout(shape);
    std::vector<int> codes(L.cells.size());
    ProductVisitor v{L, cell_weight, std::vector<LaurentPoly>(L.cells.size() + 1, LaurentPoly::zero(n)),
                     LaurentPoly::zero(n)};
    v.prefix[0] = LaurentPoly::constant(n, Rational(1));
    fill(L, n, primed_diagonal_allowed, codes, 0, v);
    return v.total;
}

Tableau flip(const Tableau& t, int r, int n) {
    const auto& outer = t.shape().outer();
    const auto& inner = t.shape().inner();
    StrictPartition box = staircase(r);
    if (!contains(box, outer)) throw DomainError("shape does not fit in the staircase");
    std::map<Cell, AlphabetEntry> e;
    for (const auto& [cell, a] : t.entries()) {
        if (a.level > n) throw DomainError("tableau letter exceeds the level bound");
        e.emplace(Cell{r + 1 - cell.second, r + 1 - cell.first}, AlphabetEntry::from_code(4 * n - 1 - a.code()));
    }
    SkewShiftedShape shape(staircase_complement(inner, r), staircase_complement(outer, r));
    return Tableau(std::move(shape), std::move(e));
}

}  // namespace sympq
