#include <doctest.h>

#include "golden_hilbert.hpp"
#include "ppa/poly.hpp"

using namespace ppa;

namespace {

PolyMat hilbert_of(Family f, int n) { return hilbert_closed(root_data(build_quiver(f, n))); }

// structural facts every matrix Hilbert series must satisfy
void check_structure(Family f, int n) {
    DynkinQuiver q = build_quiver(f, n);
    RootData rd = root_data(q);
    PolyMat H = hilbert_of(f, n);
    int r = q.num_vertices;
    REQUIRE(int(H.size()) == r);

    long long total = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const IPoly& p = H[size_t(i)][size_t(j)];
            CHECK(int(p.size()) <= rd.h - 1);
            for (long long c : p) CHECK(c >= 0);
            // degree 0: the idempotents
            CHECK(poly_coeff(p, 0) == (i == j ? 1 : 0));
            // degree 1: the arrows
            CHECK(poly_coeff(p, 1) == rd.adjacency[size_t(i)][size_t(j)]);
            // top degree: the permutation matrix of nu
            CHECK(poly_coeff(p, rd.h - 2) == (rd.nu[size_t(i + 1)] == j + 1 ? 1 : 0));
            // symmetry
            CHECK(p == H[size_t(j)][size_t(i)]);
            total += poly_eval1(p);
        }
    CHECK(total == (long long)r * rd.h * (rd.h + 1) / 6);
}

} // namespace

TEST_CASE("closed form structure, all supported quivers") {
    for (int n = 3; n <= 7; ++n) check_structure(Family::D, n);
    for (int n = 6; n <= 8; ++n) check_structure(Family::E, n);
}

TEST_CASE("E6 against the frozen table") {
    PolyMat H = hilbert_of(Family::E, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int d = 0; d <= 10; ++d)
                CHECK(poly_coeff(H[size_t(i)][size_t(j)], d) == golden::e6_hilbert[i][j][d]);
}

TEST_CASE("E7 against the frozen table") {
    PolyMat H = hilbert_of(Family::E, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            for (int d = 0; d <= 16; ++d)
                CHECK(poly_coeff(H[size_t(i)][size_t(j)], d) == golden::e7_hilbert[i][j][d]);
}

TEST_CASE("E8 against the frozen table") {
    PolyMat H = hilbert_of(Family::E, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int d = 0; d <= 28; ++d)
                CHECK(poly_coeff(H[size_t(i)][size_t(j)], d) == golden::e8_hilbert[i][j][d]);
}

TEST_CASE("polynomial helpers") {
    IPoly p{1, 0, -2, 5}; // 1 - 2t^2 + 5t^3
    CHECK(poly_eval1(p) == 4);
    CHECK(poly_coeff(p, 3) == 5);
    CHECK(poly_coeff(p, 9) == 0);
    CHECK(poly_coeff(p, -1) == 0);
    CHECK(poly_derivative(p) == IPoly{0, -4, 15});
    // p(i) = 1 - 2 i^2 + 5 i^3 = 3 - 5i
    auto [re, im] = poly_eval_i(p);
    CHECK(re == 3);
    CHECK(im == -5);
}
