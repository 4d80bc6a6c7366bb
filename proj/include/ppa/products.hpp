#pragma once
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ppa/hochschild.hpp"

namespace ppa {

struct ProductTerm {
    std::string name;
    Rat coeff;
};

struct ProductRow {
    int i = 0, j = 0;
    std::string left, right;
    std::vector<ProductTerm> result;
    // chain-formula: computed on cochains and expanded in the named basis
    // associativity: forced by an identity with chain-computable products
    // degree-zero: the target group vanishes
    // paper-asserted: stated vanishing not derivable from the degree alone
    std::string provenance;
};

struct CupTables {
    QMat malpha; // orbit reps x orbit reps
    QMat kappa;  // F x F
    QMat mbeta;  // I' x I'
    std::vector<ProductRow> rows;
};

// "p/q" with the denominator always spelled out
std::string frac_str(const Rat& r);

// cup with an HH^0 class, slotwise left multiplication
Cochain cup_hh0(const Hochschild& H, const Cochain& c0, int j, const Cochain& x);
// theta_k cup a C^4 cochain
Cochain cup_theta_c4(const Hochschild& H, int k, const Cochain& x4);
// theta_0 cup a degree -h-2 C^5 cochain, Casimir contraction form
Cochain cup_theta_c5_casimir(const Hochschild& H, const Cochain& x5);
// the same product contracted from the mirror side, for cross-checking
Cochain cup_theta_c5_mirror(const Hochschild& H, const Cochain& x5);
// C^2 cup C^3, slotwise
Cochain cup_c2_c3(const Hochschild& H, const Cochain& x2, const Cochain& x3);
// theta_0 cup f_v before expansion in the h basis
Cochain theta_f_raw(const Hochschild& H, int v);

QMat malpha_matrix(const Hochschild& H);
// star-count weighted trace of eta over the F x F blocks
QMat kappa_matrix(const Hochschild& H);
QMat mbeta_matrix(const Hochschild& H);
// (h/2) (C'|_{I'})^{-1} where C'_{uv} = +-1 for a starred/plain arrow u -> v
QMat mbeta_closed_form(const Hochschild& H);

// evaluations of the Hilbert matrix at t = sqrt(-1) along tree paths
QMat h_eta_analytic(const Hochschild& H);
QMat kappa_analytic(const Hochschild& H);

CupTables compute_products(const Hochschild& H);
nlohmann::json products_to_json(const Hochschild& H, const CupTables& t);

} // namespace ppa
