#pragma once
#include <optional>
#include <vector>

#include "ppa/rational.hpp"

namespace ppa {

// Dense exact-rational matrix, row major.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static QMat identity(int n);
    bool is_zero() const;
};

QMat mat_mul(const QMat& x, const QMat& y);
QMat mat_add(const QMat& x, const QMat& y);
QMat mat_scale(const QMat& x, const Rat& c);
QMat transpose(const QMat& x);
std::vector<Rat> mat_apply(const QMat& x, const std::vector<Rat>& v);

// In-place reduced row echelon form. Pivot search scans columns left to
// right, so with columns in lex order the pivots sit on the lex-smallest
// monomials. Returns the pivot column indices in order.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Basis of the right null space {v : Mv = 0}, echelonized: each vector has
// a 1 in a distinct free column and zeros in the other free columns.
std::vector<std::vector<Rat>> kernel_basis(const QMat& m);

// One solution of Mx = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const QMat& m, const std::vector<Rat>& b);

std::optional<QMat> inverse(const QMat& m);

} // namespace ppa
