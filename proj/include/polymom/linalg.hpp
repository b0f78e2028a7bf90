#pragma once
#include <optional>
#include <vector>
#include "polymom/sparse_poly.hpp"

namespace polymom {

template <class T>
using Mat = std::vector<std::vector<T>>;

// Exact determinant of a rational matrix: rows are scaled to integers, then
// fraction-free Bareiss elimination with partial pivoting.
Rat det_bareiss(const Mat<Rat>& a);

// Cofactor (Laplace) expansion; intended for polynomial matrices of size <= 5.
template <class T>
T det_cofactor(const Mat<T>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw validation_error("determinant of a non-square matrix");
    if (n == 0) throw validation_error("determinant of an empty matrix");
    if (n == 1) return a[0][0];
    T acc{};
    for (int j = 0; j < n; ++j) {
        Mat<T> minor(n - 1, std::vector<T>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        T term = a[0][j] * det_cofactor(minor);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

inline Rat exact_det(const Mat<Rat>& a) { return det_bareiss(a); }
inline SparsePoly exact_det(const Mat<SparsePoly>& a) {
    if (a.size() > 5)
        throw validation_error("polynomial determinants supported up to size 5");
    return det_cofactor(a);
}

// Reduced row echelon form in place; returns pivot column list.
std::vector<int> rref(Mat<Rat>& a);

// Basis of {v : v * m = 0} (row vectors), exact Gaussian elimination.
// Vectors are scaled to primitive integer form with first nonzero entry > 0;
// a full-row-rank matrix yields an empty basis.
std::vector<std::vector<Rat>> exact_left_kernel(const Mat<Rat>& m);

// Basis of {x : m * x = 0} (column vectors), same normalization.
std::vector<std::vector<Rat>> exact_right_kernel(const Mat<Rat>& m);

// Unique solution of a square or overdetermined consistent system A x = b;
// nullopt when inconsistent or underdetermined.
std::optional<std::vector<Rat>> solve_unique(const Mat<Rat>& A, const std::vector<Rat>& b);

} // namespace polymom
