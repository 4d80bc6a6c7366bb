#include "ppa/center.hpp"

#include "ppa/matrix.hpp"
#include "ppa/parser.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ppa {

namespace {

int arrow_id(const Algebra& A, int k, bool star) {
    std::string nm = "a" + std::to_string(k) + (star ? "*" : "");
    int id = A.quiver().arrow_by_name(nm);
    if (id < 0) throw std::logic_error("missing arrow " + nm);
    return id;
}

Elem word(const Algebra& A, const std::vector<std::pair<int, bool>>& letters) {
    Elem acc = A.one();
    for (const auto& [k, st] : letters) acc = A.mul(acc, A.arrow_elem(arrow_id(A, k, st)));
    return acc;
}

// Loops in the D_{n+1} algebra, all written left to right.
// b_{i,j}: walk j steps up the chain from i and back.
Elem d_b(const Algebra& A, int n, int i, int j) {
    if (j == 0) return A.idem(i);
    std::vector<std::pair<int, bool>> w;
    for (int k = i; k <= i + j - 1; ++k) w.push_back({k, true});
    for (int k = i + j - 1; k >= i; --k) w.push_back({k, false});
    return word(A, w);
}

// c_{i,j}: walk from i to the fork vertex n-1, loop j times through n-2, walk back.
Elem d_c(const Algebra& A, int n, int i, int j) {
    std::vector<std::pair<int, bool>> w;
    for (int k = i; k <= n - 2; ++k) w.push_back({k, true});
    for (int t = 0; t < j; ++t) {
        w.push_back({n - 2, false});
        w.push_back({n - 2, true});
    }
    for (int k = n - 2; k >= i; --k) w.push_back({k, false});
    if (w.empty()) return A.idem(i);
    return word(A, w);
}

// c'_i: like c_{i,i-1} but the loop visits the fork leaf n once; degree 2n-2.
Elem d_cprime(const Algebra& A, int n, int i) {
    std::vector<std::pair<int, bool>> w;
    for (int k = i; k <= n - 2; ++k) w.push_back({k, true});
    w.push_back({n - 1, true});
    w.push_back({n - 1, false});
    for (int t = 0; t < i - 1; ++t) {
        w.push_back({n - 2, false});
        w.push_back({n - 2, true});
    }
    for (int k = n - 2; k >= i; --k) w.push_back({k, false});
    return word(A, w);
}

// d_j at vertex n, d'_j at vertex n+1: alternating loops through both leaves.
Elem d_dloop(const Algebra& A, int n, int j, bool prime) {
    if (j == 0) return A.idem(prime ? n + 1 : n);
    std::vector<std::pair<int, bool>> w;
    for (int t = 0; t < j; ++t) {
        if (!prime) {
            w.push_back({n - 1, false});
            w.push_back({n, true});
            w.push_back({n, false});
            w.push_back({n - 1, true});
        } else {
            w.push_back({n, false});
            w.push_back({n - 1, true});
            w.push_back({n - 1, false});
            w.push_back({n, true});
        }
    }
    return word(A, w);
}

Elem d_center_z(const Algebra& A, int n, int deg) {
    int j = deg / 4;
    Elem z;
    for (int i = 2 * j + 1; i <= n - 1 - 2 * j; ++i) elem_axpy(z, Rat(1), d_b(A, n, i, 2 * j));
    for (int i = 0; i <= 2 * j - 1; ++i) elem_axpy(z, Rat(1), d_c(A, n, n - 1 - i, 2 * j - i));
    elem_axpy(z, Rat(1), d_dloop(A, n, j, false));
    elem_axpy(z, Rat(1), d_dloop(A, n, j, true));
    return z;
}

// Distinguished central elements of the E-type algebras, with x_i = a_i^* a_i.
const char* e_center_formula(int n, int deg) {
    if (n == 6) {
        if (deg == 6)
            return "a1 a2 x3 a2* a1* - a2 x3^2 a2* - x5 x3 x5 + a3 x2^2 a3* - a4 a3 x2 a3* a4*";
        if (deg == 8)
            return "- a2 x5 x3 x5 a2* - x5 x3^2 x5 - a3 x5 x2 x5 a3*";
    }
    if (n == 7) {
        if (deg == 8)
            return "- a1 a2 a3 x6 a3* a2* a1* - a2 a3 x4^2 a3* a2* - a3 x6 x4 x6 a3* "
                   "- x4 x3^2 x4 - a4 x4 x6 x4 a4* + a6 x4 x6 x4 a6*";
        if (deg == 12)
            return "- a3 x4 x6 x4 x6 x4 a3* - x4 x6 x4^2 x6 x4 + a4 x6 x4 x6 x4 x6 a4* "
                   "+ a6 x4 x6 x4 x6 x4 a6*";
    }
    if (n == 8) {
        if (deg == 12)
            return "a1 a2 a3 x6 x4 x6 a3* a2* a1* + a2 a3 x4 x3^2 x4 a3* a2* + a3 (x4 x6)^2 x4 a3* "
                   "+ (x3 x4 x3)^2 - a4 (x6 x4)^2 x6 a4* + a5 a4 x6 x4^2 x6 a4* a5* "
                   "- a6 (x4 x6)^2 x4 a6*";
        if (deg == 20)
            return "- a1 a2 a3 x4^2 x3^3 x4^2 a3* a2* a1* - a2 a3 (x6 x4)^2 (x4 x6)^2 a3* a2* "
                   "+ a3 (x6 x4)^4 x6 a3* - (x4 x6)^5 + (x6 x4^2)^3 x6 - (x6 x4)^5 "
                   "- a4 (x4 x6 x4)^3 a4* - a6 (x4 x6)^4 x4 a6*";
    }
    return nullptr;
}

} // namespace

Elem central_element(const Algebra& A, int k) {
    const auto& Q = A.quiver();
    if (k == 0) return A.one();
    if (Q.family == Family::D) return d_center_z(A, Q.n, k);
    if (Q.n == 8 && k == 24) {
        Elem z12 = central_element(A, 12);
        return A.mul(z12, z12);
    }
    const char* f = e_center_formula(Q.n, k);
    if (!f) throw std::invalid_argument("no central element of degree " + std::to_string(k));
    return parse_element(A, f);
}

bool is_central(const Algebra& A, const Elem& z) {
    for (const auto& a : A.quiver().arrows) {
        Elem ae = A.arrow_elem(a.id);
        if (A.mul(ae, z) != A.mul(z, ae)) return false;
    }
    return true;
}

Center compute_center(const Algebra& A) {
    const auto& rd = A.roots();
    int top = rd.h - 2, r = A.num_vertices();
    Center Z;
    Z.hilbert.assign(top + 1, 0);
    Z.hilbert_expected.assign(top + 1, 0);
    for (int m : rd.exponents)
        if (2 * m < rd.h) {
            Z.hilbert_expected[2 * m - 2] += 1;
            Z.z_degrees.push_back(2 * m - 2);
        }
    std::sort(Z.z_degrees.begin(), Z.z_degrees.end());
    Z.hilbert_expected[top] += int(rd.fixed.size());

    for (int d = 0; d <= top; ++d) {
        // columns: diagonal monomials of degree d
        std::vector<int> cols;
        for (int v = 1; v <= r; ++v)
            for (int id : A.block(d, v, v)) cols.push_back(id);
        if (cols.empty()) continue;

        // rows: for every arrow a, the coefficients of az - za in degree d+1
        std::vector<std::pair<int, int>> row_of; // (arrow id, target mono id)
        std::map<std::pair<int, int>, int> row_index;
        for (const auto& a : A.quiver().arrows)
            for (int id : A.block(d + 1, a.src, a.dst)) {
                row_index[{a.id, id}] = int(row_of.size());
                row_of.push_back({a.id, id});
            }
        QMat M(int(row_of.size()), int(cols.size()));
        for (int c = 0; c < int(cols.size()); ++c) {
            int b = cols[c];
            int v = A.mono(b).src;
            Elem be{{b, Rat(1)}};
            for (const auto& a : A.quiver().arrows) {
                if (a.dst == v)
                    for (const auto& [id, co] : A.mul(A.arrow_elem(a.id), be))
                        M.at(row_index.at({a.id, id}), c) += co;
                if (a.src == v)
                    for (const auto& [id, co] : A.mul(be, A.arrow_elem(a.id)))
                        M.at(row_index.at({a.id, id}), c) -= co;
            }
        }
        auto ker = kernel_basis(M);
        for (const auto& vvec : ker) {
            Elem e;
            for (int c = 0; c < int(cols.size()); ++c)
                if (vvec[c] != 0) e.push_back({cols[c], vvec[c]});
            std::sort(e.begin(), e.end());
            Z.basis[d].push_back(std::move(e));
        }
        Z.hilbert[d] = int(ker.size());
    }

    for (int k : Z.z_degrees) Z.z[k] = central_element(A, k);
    return Z;
}

} // namespace ppa
