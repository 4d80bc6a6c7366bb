#pragma once
#include <vector>

#include "ppa/quiver.hpp"

namespace ppa {

// Polynomial in t with integer coefficients, coeff[d] on t^d.
using IPoly = std::vector<long long>;
using PolyMat = std::vector<std::vector<IPoly>>;

inline long long poly_coeff(const IPoly& p, int d) {
    return (d >= 0 && d < int(p.size())) ? p[size_t(d)] : 0;
}

long long poly_eval1(const IPoly& p); // p(1)

// p(i) for i^2 = -1, as (real, imag)
std::pair<long long, long long> poly_eval_i(const IPoly& p);

IPoly poly_derivative(const IPoly& p);

// Graded dimensions of e_i A e_j from the closed form
//   H_A(t) = (1 + P t^h) (1 - C t + t^2)^{-1},
// expanded degree by degree via S_0 = 1, S_1 = C, S_d = C S_{d-1} - S_{d-2}.
// Returns the r x r matrix of polynomials of degree <= h-2; verifies
// S_{h-1} = 0 and S_{h-2} = P, throwing std::logic_error otherwise.
PolyMat hilbert_closed(const RootData& rd);

} // namespace ppa
