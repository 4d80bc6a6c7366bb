#pragma once
#include <string>
#include <vector>

#include "ppa/hochschild.hpp"
#include "ppa/products.hpp"

namespace ppa {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Reference matrices for quivers with a tabulated form; a 0 x 0 result
// means no table applies.
QMat printed_heta(const Algebra& A);
QMat printed_kappa(const Algebra& A);
QMat printed_mbeta(const Algebra& A);

// Run the whole per-quiver check battery. max_degree < 0 checks the full
// cohomology window; otherwise the dimension scan stops at that degree.
std::vector<CheckResult> verify_quiver(const Hochschild& H, int max_degree = -1);
bool all_passed(const std::vector<CheckResult>& results);

} // namespace ppa
