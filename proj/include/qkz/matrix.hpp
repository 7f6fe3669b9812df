#pragma once
#include "qkz/ring.hpp"
#include <stdexcept>
#include <vector>

namespace qkz {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> identity_matrix(size_t n) {
    Matrix<T> m(n, std::vector<T>(n, T(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    Matrix<T> r(n, std::vector<T>(p, T(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (ring_is_zero(a[i][l])) continue;
            for (size_t j = 0; j < p; ++j) {
                if (ring_is_zero(b[l][j])) continue;
                r[i][j] += a[i][l] * b[l][j];
            }
        }
    return r;
}

// Fraction-free determinant. Sizes up to 2 are expanded directly; beyond that
// runs Bareiss elimination, whose divisions are exact over any integral domain.
template <class T>
T bareiss_det(Matrix<T> m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_det: not square");
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    bool neg = false;
    T prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && ring_is_zero(m[piv][k])) ++piv;
        if (piv == n) return T(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return neg ? T(0) - det : det;
}

} // namespace qkz
