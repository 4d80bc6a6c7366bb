#include "ppa/matrix.hpp"

#include <stdexcept>

namespace ppa {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

QMat mat_mul(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape mismatch");
    QMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rat& ykj = y.at(k, j);
                if (ykj != 0) z.at(i, j) += xik * ykj;
            }
        }
    return z;
}

QMat mat_add(const QMat& x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add shape mismatch");
    QMat z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

QMat mat_scale(const QMat& x, const Rat& c) {
    QMat z = x;
    for (auto& v : z.a) v *= c;
    return z;
}

QMat transpose(const QMat& x) {
    QMat z(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
    return z;
}

std::vector<Rat> mat_apply(const QMat& x, const std::vector<Rat>& v) {
    if (int(v.size()) != x.cols) throw std::invalid_argument("mat_apply shape mismatch");
    std::vector<Rat> out(x.rows);
    for (int i = 0; i < x.rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < x.cols; ++j)
            if (x.at(i, j) != 0 && v[j] != 0) s += x.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            Rat f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QMat m) { return int(rref(m).size()); }

std::vector<std::vector<Rat>> kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> out;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(int(i), free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b) {
    if (int(b.size()) != m.rows) throw std::invalid_argument("solve shape mismatch");
    QMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<Rat> x(m.cols);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(int(i), m.cols);
    return x;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (int(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

} // namespace ppa
