#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "errors.hpp"

namespace hbt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatMatrix = std::vector<std::vector<Rational>>;

inline Rational determinant(RatMatrix a) {
    std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[c].size() != n) throw input_error("determinant: matrix is not square");
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

inline int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Row rank by elimination.
inline int matrix_rank(RatMatrix a) {
    int rank = 0;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Solve a x = b for square nonsingular a.
inline std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b) {
    std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw input_error("solve: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace hbt
