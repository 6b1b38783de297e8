#pragma once

/// @file bareiss.hpp
/// Fraction-free (Bareiss) determinant over any commutative ring whose
/// elimination divisions are exact: integers, integer polynomials, ...

#include <cstddef>
#include <utility>
#include <vector>

namespace polymat {

/// `is_zero(x)`, `exact_div(a, b)` and the ring operations of T must be
/// available. Row swaps flip the sign.
template <class T, class IsZero, class ExactDiv>
T bareiss_determinant(std::vector<std::vector<T>> a, const T& zero, const T& one, IsZero is_zero,
                      ExactDiv exact_div) {
    const std::size_t n = a.size();
    if (n == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(a[r][k])) ++r;
            if (r == n) return zero;
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
        }
        prev = a[k][k];
    }
    T d = a[n - 1][n - 1];
    return negate ? zero - d : d;
}

}  // namespace polymat
