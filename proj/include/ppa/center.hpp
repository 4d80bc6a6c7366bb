#pragma once

#include "ppa/algebra.hpp"

#include <map>
#include <vector>

namespace ppa {

// Z(A), computed degree by degree as the kernel of all commutator maps
// z |-> az - za (a running over the arrows).
struct Center {
    // ascending degrees 2m-2 for exponents m < h/2; always starts with 0
    std::vector<int> z_degrees;
    // named generators, one per degree in z_degrees (z.at(0) == 1)
    std::map<int, Elem> z;
    // full kernel basis per degree, including the top slice spanned by
    // the omega_i with nu(i) = i
    std::map<int, std::vector<Elem>> basis;
    // dimension of Z(A) in each degree 0..h-2
    IPoly hilbert;
    // 1 + sum_{m<h/2} t^{2m-2} + |F| t^{h-2}, from the root data
    IPoly hilbert_expected;
};

Center compute_center(const Algebra& A);

// The distinguished central element of the given degree (formula from the
// structure of the family). Throws if k is not one of the z-degrees.
Elem central_element(const Algebra& A, int k);

// True if az = za for every arrow a.
bool is_central(const Algebra& A, const Elem& z);

} // namespace ppa
