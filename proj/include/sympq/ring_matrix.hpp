#ifndef SYMPQ_RING_MATRIX_HPP
#define SYMPQ_RING_MATRIX_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sympq/errors.hpp"
#include "sympq/rational.hpp"
#include "sympq/trunc_series.hpp"

namespace sympq {

template <class T>
struct RingOps {
    static T one_like(const T&) { return T(1); }
    static bool is_zero(const T& x) {
        if constexpr (requires { x.is_zero(); }) return x.is_zero();
        else return x == T(0);
    }
};

template <class T>
struct RingOps<TruncSeries<T>> {
    static TruncSeries<T> one_like(const TruncSeries<T>& s) {
        return TruncSeries<T>::constant(s.order(), T(1));
    }
    static bool is_zero(const TruncSeries<T>& s) { return s.is_zero(); }
};

template <class T>
class RingMatrix {
public:
    RingMatrix(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), fill_(fill), a_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw StructuralError("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    // The value used to fill new matrices; doubles as a typed zero.
    const T& zero() const { return fill_; }

    bool is_skew_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i) {
            if (!RingOps<T>::is_zero((*this)(i, i))) return false;
            for (int j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == -(*this)(j, i))) return false;
        }
        return true;
    }

    RingMatrix transpose() const {
        RingMatrix t(cols_, rows_, fill_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.cols_ != b.rows_) throw StructuralError("matrix product dimension mismatch");
        RingMatrix c(a.rows_, b.cols_, a.fill_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k)
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        return c;
    }

private:
    int rows_, cols_;
    T fill_;
    std::vector<T> a_;
};

// Pfaffian by expansion along the first remaining index, memoized on the
// remaining index set:  Pf(S) = sum_k (-1)^k a_{s1,sk} Pf(S \ {s1,sk}).
template <class T>
T pfaffian(const RingMatrix<T>& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw StructuralError("Pfaffian needs an even square matrix");
    if (m.rows() > 62) throw StructuralError("Pfaffian too large");
    if (!m.is_skew_symmetric()) throw StructuralError("Pfaffian of a non-skew-symmetric matrix");
    const T one = RingOps<T>::one_like(m.zero());
    if (m.rows() == 0) return one;
    std::unordered_map<std::uint64_t, T> memo;
    auto rec = [&](auto&& self, std::uint64_t set) -> T {
        if (set == 0) return one;
        if (auto it = memo.find(set); it != memo.end()) return it->second;
        int first = std::countr_zero(set);
        std::uint64_t rest = set & (set - 1);
        T total = m.zero();
        int k = 0;
        for (std::uint64_t r = rest; r; r &= r - 1, ++k) {
            int j = std::countr_zero(r);
            const T& a = m(first, j);
            if (RingOps<T>::is_zero(a)) continue;
            T sub = self(self, rest & ~(std::uint64_t{1} << j));
            if (RingOps<T>::is_zero(sub)) continue;
            if (k % 2 == 0) total += a * sub;
            else total -= a * sub;
        }
        memo.emplace(set, total);
        return total;
    };
    return rec(rec, (m.rows() == 64 ? ~0ull : ((std::uint64_t{1} << m.rows()) - 1)));
}

// Gaussian elimination over Q.
Rational determinant_field(RingMatrix<Rational> m);

// Division-free Laplace expansion along rows, memoized on the set of
// columns still available (O(n 2^n) ring operations).
template <class T>
T determinant(const RingMatrix<T>& m) {
    if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
    if constexpr (std::is_same_v<T, Rational>) {
        return determinant_field(m);
    } else {
        const int n = m.rows();
        if (n > 30) throw StructuralError("determinant too large for subset expansion");
        const T one = RingOps<T>::one_like(m.zero());
        if (n == 0) return one;
        std::unordered_map<std::uint32_t, T> memo;
        auto rec = [&](auto&& self, std::uint32_t avail) -> T {
            if (avail == 0) return one;
            if (auto it = memo.find(avail); it != memo.end()) return it->second;
            int row = n - std::popcount(avail);
            T total = m.zero();
            int idx = 0;
            for (std::uint32_t r = avail; r; r &= r - 1, ++idx) {
                int j = std::countr_zero(r);
                const T& a = m(row, j);
                if (RingOps<T>::is_zero(a)) continue;
                T sub = self(self, avail & ~(std::uint32_t{1} << j));
                if (RingOps<T>::is_zero(sub)) continue;
                if (idx % 2 == 0) total += a * sub;
                else total -= a * sub;
            }
            memo.emplace(avail, total);
            return total;
        };
        return rec(rec, n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1));
    }
}

// Exact inverse over Q; nullopt when singular.
std::optional<RingMatrix<Rational>> inverse(const RingMatrix<Rational>& m);

}  // namespace sympq

#endif
