#ifndef SYMPQ_TRUNC_SERIES_HPP
#define SYMPQ_TRUNC_SERIES_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "sympq/errors.hpp"

namespace sympq {

// Power series c_0 + c_1 z + ... + c_K z^K + O(z^{K+1}).
// Binary operations truncate to the smaller of the two orders.
template <class T>
class TruncSeries {
public:
    explicit TruncSeries(int order = 0, const T& zero = T(0)) : c_(check(order) + 1, zero) {}
    TruncSeries(int order, std::vector<T> coeffs, const T& zero = T(0)) : c_(std::move(coeffs)) {
        c_.resize(check(order) + 1, zero);
    }
    static TruncSeries constant(int order, const T& value, const T& zero = T(0)) {
        TruncSeries s(order, zero);
        s.c_[0] = value;
        return s;
    }
    // c * z^k
    static TruncSeries monomial(int order, int k, const T& c, const T& zero = T(0)) {
        TruncSeries s(order, zero);
        if (k <= order) s.c_[k] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_.at(k); }
    T& operator[](int k) { return c_.at(k); }
    const std::vector<T>& coeffs() const { return c_; }

    TruncSeries truncated(int order) const {
        if (order > this->order()) throw StructuralError("cannot extend a truncated series");
        return TruncSeries(order, std::vector<T>(c_.begin(), c_.begin() + order + 1));
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    TruncSeries operator-() const {
        TruncSeries s = *this;
        for (auto& x : s.c_) x = -x;
        return s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const int K = std::min(a.order(), b.order());
        TruncSeries s(K, a.c_[0] - a.c_[0]);
        for (int i = 0; i <= K; ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (int j = 0; i + j <= K; ++j) {
                if (is_zero_coeff(b.c_[j])) continue;
                s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return s;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    template <class S>
    TruncSeries scaled(const S& c) const {
        TruncSeries s = *this;
        for (auto& x : s.c_) x = x * c;
        return s;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const T& x) { return is_zero_coeff(x); });
    }

private:
    std::vector<T> c_;

    static int check(int order) {
        if (order < 0) throw StructuralError("negative truncation order");
        return order;
    }
    static bool is_zero_coeff(const T& x) {
        if constexpr (requires { x.is_zero(); }) return x.is_zero();
        else return x == T(0);
    }
};

}  // namespace sympq

#endif
