#include "sympq/ring_matrix.hpp"

namespace sympq {

Rational determinant_field(RingMatrix<Rational> m) {
    const int n = m.rows();
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (int j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = m(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<RingMatrix<Rational>> inverse(const RingMatrix<Rational>& m0) {
    if (m0.rows() != m0.cols()) throw StructuralError("inverse of a non-square matrix");
    const int n = m0.rows();
    RingMatrix<Rational> m = m0;
    RingMatrix<Rational> inv(n, n);
    for (int i = 0; i < n; ++i) inv(i, i) = Rational(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational piv = m(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            m(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (int j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace sympq
