#pragma once
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppa/algebra.hpp"
#include "ppa/center.hpp"
#include "ppa/matrix.hpp"

namespace ppa {

// One component of the cochain space C^i(delta). Values live in
// e_src A(m) e_dst with m = delta + offset(i). key is the arrow id for
// arrow-indexed spaces (i = 1, 4 mod 6) and the vertex for vertex-indexed
// ones; components are stored in key order.
struct Slot {
    int key = 0;
    int src = 0;
    int dst = 0;
};

using Cochain = std::vector<Elem>;

struct NamedClass {
    std::string name;
    int i = 0;     // cohomological degree
    int delta = 0; // internal degree
    Cochain val;
};

// The Hochschild cochain complex of A in value form, built on the
// 6-periodic self-injective resolution. Differentials are evaluated
// per slot; cohomology dimensions and class arithmetic stay in exact
// rationals throughout.
class Hochschild {
public:
    explicit Hochschild(const Algebra& A);

    const Algebra& algebra() const { return A_; }
    const Center& center() const { return center_; }

    // value-degree offset of C^i; period 6 with a shift of 2h
    int offset(int i) const;
    int value_degree(int i, int delta) const { return delta + offset(i); }
    const std::vector<Slot>& slots(int i) const { return slots_[size_t(i % 6)]; }
    int space_dim(int i, int delta) const;

    // coordinates w.r.t. the monomial basis of each slot block, slots in
    // order; throws std::logic_error if a component leaves its block
    std::vector<Rat> coords(int i, int delta, const Cochain& c) const;
    Cochain cochain(int i, int delta, const std::vector<Rat>& v) const;
    Cochain zero_cochain(int i) const;

    // differential C^i(delta) -> C^{i+1}(delta)
    Cochain apply_d(int i, int delta, const Cochain& c) const;
    QMat dmat(int i, int delta) const;
    int rank_d(int i, int delta) const; // cached
    bool is_cocycle(int i, int delta, const Cochain& c) const;
    bool check_dd(int i, int delta) const; // d_{i+1} after d_i kills every basis cochain

    int hh_dim(int i, int delta) const;
    std::map<int, int> hh_dims(int i) const;      // all deltas with nonzero dim
    std::map<int, int> expected_dims(int i) const; // from the structure theorem

    QMat h_one() const; // H_A(1), r x r
    QMat h_eta() const; // traces of eta on e_k A e_l, F x F
    const std::vector<int>& fixed() const { return A_.roots().fixed; }
    const std::vector<int>& quotient_reps() const { return iprime_; } // I'
    const std::vector<int>& orbit_reps() const { return oreps_; }     // {i : nu(i) > i}

    const std::vector<NamedClass>& named_classes() const { return named_; }
    bool has_named(const std::string& name) const;
    const NamedClass& named(const std::string& name) const;
    // names by degree: z<k>, w<i>; theta<k>; f<i>; h<i>; zeta<k>; psi<k>,
    // eps<i>; phi0(z<k>), phi0(w<i>); phi1(theta<k>)

    // expand a cocycle over the named classes of (i, delta) modulo
    // coboundaries; zero coefficients are dropped
    std::vector<std::pair<std::string, Rat>> express(int i, int delta, const Cochain& c) const;

    // every named class is a block-respecting cocycle and the classes of
    // each (i, delta) are independent modulo coboundaries and exactly as
    // many as hh_dim; throws std::logic_error otherwise
    void check_named() const;

    // dualities between the paired cohomology columns
    Rat pair23(const Cochain& x2, const Cochain& x3) const;
    Rat pair14(const Cochain& x1, const Cochain& x4) const;
    Rat pair56(const Cochain& x5, const Cochain& x6) const;

    // C^4 cochain from a tensor list sum c (x) u over arrows c
    Cochain c4_from_tensor(const std::vector<std::pair<int, Elem>>& terms) const;
    // diagonal cochain e_v x e_v of a central element (C^0 / C^6 shape)
    Cochain diagonal(const Elem& x) const;

private:
    void build_slots();
    void build_reps();
    void build_named();
    void add_named(std::string name, int i, int delta, Cochain val);
    Elem word(const std::vector<int>& arrow_ids) const;
    Elem eta_arrow_elem(int arrow) const;

    const Algebra& A_;
    Center center_;
    std::array<std::vector<Slot>, 6> slots_;
    std::vector<int> iprime_, oreps_;
    std::vector<NamedClass> named_;
    std::map<std::string, int> named_idx_;
    QMat hone_, heta_;
    mutable std::map<std::pair<int, int>, int> rank_cache_;
};

} // namespace ppa
