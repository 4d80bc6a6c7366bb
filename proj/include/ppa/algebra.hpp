#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppa/matrix.hpp"
#include "ppa/poly.hpp"
#include "ppa/quiver.hpp"
#include "ppa/rational.hpp"

namespace ppa {

// Sparse element in the monomial basis: (basis id, coefficient), sorted by id,
// no zero coefficients. The zero element is the empty vector.
using Elem = std::vector<std::pair<int, Rat>>;

Elem elem_add(const Elem& x, const Elem& y);
Elem elem_sub(const Elem& x, const Elem& y);
Elem elem_scale(const Elem& x, const Rat& c);
void elem_axpy(Elem& x, const Rat& c, const Elem& y); // x += c*y
Rat elem_coeff(const Elem& x, int id);
inline bool elem_is_zero(const Elem& x) { return x.empty(); }

// Basis monomial: the normal-form path from src through the listed arrows.
struct Mono {
    int src = 0, dst = 0, deg = 0;
    std::vector<uint8_t> arrows;
};

// The preprojective algebra of a Dynkin quiver, with its graded monomial
// basis, normal forms, Frobenius form and dual basis. Composition is left
// to right: in xy, x is traversed first, and e_i A e_j is spanned by paths
// from i to j.
class Algebra {
public:
    explicit Algebra(const DynkinQuiver& q);

    const DynkinQuiver& quiver() const { return q_; }
    const RootData& roots() const { return rd_; }
    int top_degree() const { return rd_.h - 2; }
    int num_vertices() const { return q_.num_vertices; }

    int dim() const { return int(monos_.size()); }
    int dim_degree(int deg) const;
    const Mono& mono(int id) const { return monos_[size_t(id)]; }
    const std::vector<int>& degree_ids(int deg) const;
    const std::vector<int>& block(int deg, int i, int j) const;
    int star_count(int id) const;
    int block_star_count(int deg, int i, int j) const; // shared by the whole block
    std::string mono_str(int id) const;

    Elem one() const;
    Elem idem(int v) const { return {{v - 1, Rat(1)}}; }
    Elem arrow_elem(int arrow) const { return {{q_.num_vertices + arrow, Rat(1)}}; }
    // normal form of a path; throws std::invalid_argument on a non-composable step
    Elem path(int src, const std::vector<int>& arrow_ids) const;
    Elem mul_arrow(const Elem& x, int arrow) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem pow(const Elem& x, int k) const;

    Elem star(const Elem& x) const;
    // Nakayama automorphism: eta(a) = -abar for a in Q, +abar for starred a,
    // where abar is the arrow with both endpoints moved by nu
    Elem eta(const Elem& x) const;
    std::pair<int, int> eta_arrow(int arrow) const; // (sign, image arrow id)
    Rat eta_block_trace(int deg, int i, int j) const;

    Rat trace(const Elem& x) const; // Frobenius functional, supported in top degree
    Rat pair(const Elem& x, const Elem& y) const { return trace(mul(x, y)); }
    const Elem& dual(int id) const { return dual_[size_t(id)]; } // trace(b_p dual(b_q)) = delta_pq
    int top_mono(int v) const { return top_of_vertex_[size_t(v)]; }
    Elem omega(int v) const; // trace-normalized top element of e_v A e_{nu(v)}

    const PolyMat& hilbert() const { return hilbert_; }

    bool is_homogeneous(const Elem& x) const;
    int degree_of(const Elem& x) const; // -1 for zero, throws if mixed
    Elem component(const Elem& x, int deg) const;

    nlohmann::json elem_to_json(const Elem& x) const;
    Elem elem_from_json(const nlohmann::json& j) const;
    std::string elem_str(const Elem& x) const;
    std::string elem_latex(const Elem& x) const;

private:
    Algebra() = default;
    friend struct CacheIO;

    void build_basis();
    void build_frobenius();
    void build_dual();
    void check_hilbert() const;
    void finish_indexes();

    DynkinQuiver q_;
    RootData rd_;
    PolyMat hilbert_;
    std::vector<Mono> monos_;
    std::vector<std::vector<int>> deg_ids_;
    std::map<std::tuple<int, int, int>, std::vector<int>> blocks_;
    std::vector<std::vector<Elem>> mul_arrow_; // [id][arrow] -> normal form of mono*arrow
    std::vector<Rat> trace_;                   // trace of each basis monomial
    std::vector<int> top_of_vertex_;           // id of the top monomial in e_v A e_{nu v}
    std::vector<Elem> dual_;
};

} // namespace ppa
