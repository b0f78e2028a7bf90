#include "polymom/linalg.hpp"

#include <algorithm>

namespace polymom {

Rat det_bareiss(const Mat<Rat>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw validation_error("determinant of a non-square matrix");
    if (n == 0) throw validation_error("determinant of an empty matrix");

    // clear denominators row by row, tracking the removed factor
    Mat<Int> m(n, std::vector<Int>(n));
    Rat scale(1);
    for (int i = 0; i < n; ++i) {
        Int l(1);
        for (int j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rat v = a[i][j] * l;
            m[i][j] = v.get_num();  // exact integer after scaling
        }
        scale /= l;
    }

    int sign = 1;
    Int prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { p = i; break; }
            if (p < 0) return Rat(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Rat det(m[n - 1][n - 1]);
    if (sign < 0) det = -det;
    return det * scale;
}

std::vector<int> rref(Mat<Rat>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

static void normalize_primitive(std::vector<Rat>& v) {
    Int den_lcm(1), num_gcd(0);
    for (const Rat& x : v) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (num_gcd == 0) return;
    Rat f = rat_make(den_lcm, num_gcd);
    for (Rat& x : v) x *= f;
    for (const Rat& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Rat& y : v) y = -y;
        break;
    }
}

std::vector<std::vector<Rat>> exact_right_kernel(const Mat<Rat>& m) {
    if (m.empty()) return {};
    Mat<Rat> a = m;
    const int cols = static_cast<int>(a[0].size());
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -a[pr][fc];
        normalize_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rat>> exact_left_kernel(const Mat<Rat>& m) {
    if (m.empty()) return {};
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    Mat<Rat> t(cols, std::vector<Rat>(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return exact_right_kernel(t);
}

std::optional<std::vector<Rat>> solve_unique(const Mat<Rat>& A, const std::vector<Rat>& b) {
    if (A.size() != b.size()) throw validation_error("solve: row count mismatch");
    if (A.empty()) return std::nullopt;
    const int rows = static_cast<int>(A.size());
    const int cols = static_cast<int>(A[0].size());
    Mat<Rat> aug(rows, std::vector<Rat>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    // inconsistent if a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (static_cast<int>(pivots.size()) < cols) return std::nullopt;  // underdetermined
    std::vector<Rat> x(cols);
    for (int pr = 0; pr < cols; ++pr) x[pivots[pr]] = aug[pr][cols];
    return x;
}

} // namespace polymom
