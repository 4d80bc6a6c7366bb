#include <doctest.h>

#include <map>

#include "ppa/center.hpp"
#include "ppa/parser.hpp"

using namespace ppa;

namespace {

struct Ctx {
    Algebra A;
    Center Z;
    explicit Ctx(const DynkinQuiver& q) : A(q), Z(compute_center(A)) {}
};

const Ctx& ctx(const char* name) {
    static std::map<std::string, std::unique_ptr<Ctx>> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, std::make_unique<Ctx>(parse_quiver_name(name))).first;
    return *it->second;
}

void check_common(const Ctx& c) {
    const Algebra& A = c.A;
    const Center& Z = c.Z;
    CHECK(Z.hilbert == Z.hilbert_expected);
    CHECK(Z.z.at(0) == A.one());
    for (int k : Z.z_degrees) {
        const Elem& z = Z.z.at(k);
        CHECK(is_central(A, z));
        CHECK(A.degree_of(z) == (k == 0 ? 0 : k));
        CHECK(A.star(z) == z);
        CHECK(A.eta(z) == z);
    }
    for (const auto& [d, vecs] : Z.basis)
        for (const Elem& b : vecs) {
            CHECK(is_central(A, b));
            CHECK(A.degree_of(b) == d);
        }
    // top slice: spanned by the omegas of the fixed vertices
    int top = A.top_degree();
    CHECK(int(Z.basis.at(top).size()) == int(A.roots().fixed.size()));
    for (int v : A.roots().fixed) CHECK(is_central(A, A.omega(v)));
}

} // namespace

TEST_CASE("type D centers") {
    for (const char* q : {"d4", "d5", "d6", "d7", "d8"}) check_common(ctx(q));
    CHECK(ctx("d4").Z.z_degrees == std::vector<int>{0});
    CHECK(ctx("d5").Z.z_degrees == std::vector<int>{0, 4});
    CHECK(ctx("d6").Z.z_degrees == std::vector<int>{0, 4});
    CHECK(ctx("d7").Z.z_degrees == std::vector<int>{0, 4, 8});
    CHECK(ctx("d8").Z.z_degrees == std::vector<int>{0, 4, 8});
}

TEST_CASE("type D center products") {
    {
        // D6: n = 5, the boundary product z_4^2 = omega_5 - omega_6
        const Ctx& c = ctx("d6");
        Elem z4 = c.Z.z.at(4);
        CHECK(c.A.mul(z4, z4) == elem_sub(c.A.omega(5), c.A.omega(6)));
    }
    {
        // D8: n = 7, z_4^2 = z_8 inside the chain, boundary z_4 z_8 = omega_7 - omega_8
        const Ctx& c = ctx("d8");
        Elem z4 = c.Z.z.at(4), z8 = c.Z.z.at(8);
        CHECK(c.A.mul(z4, z4) == z8);
        CHECK(c.A.mul(z4, z8) == elem_sub(c.A.omega(7), c.A.omega(8)));
        CHECK(c.A.mul(z8, z8).empty());
    }
    {
        // D7: n = 6 is even, z_4^2 = z_8 and everything above dies
        const Ctx& c = ctx("d7");
        Elem z4 = c.Z.z.at(4), z8 = c.Z.z.at(8);
        CHECK(c.A.mul(z4, z4) == z8);
        CHECK(c.A.mul(z4, z8).empty());
    }
    {
        // D5: n = 4, top degree is 6, z_4^2 lands in degree 8 and dies
        const Ctx& c = ctx("d5");
        Elem z4 = c.Z.z.at(4);
        CHECK(c.A.mul(z4, z4).empty());
    }
}

TEST_CASE("E6 center") {
    const Ctx& c = ctx("e6");
    check_common(c);
    CHECK(c.Z.z_degrees == std::vector<int>{0, 6, 8});
    CHECK(c.Z.hilbert_expected == IPoly{1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2});

    Elem z6 = c.Z.z.at(6), z8 = c.Z.z.at(8);
    CHECK(c.A.mul(z6, z6).empty());
    CHECK(c.A.mul(z6, z8).empty());
    CHECK(c.A.mul(z8, z8).empty());

    // normal form identities used in the centrality proofs
    const Algebra& A = c.A;
    CHECK(parse_element(A, "a5 x5 x3 x5").empty());
    CHECK(parse_element(A, "a1 a2 x3^2 a2*") == parse_element(A, "a1 a2 x5 x2 a2*"));
    CHECK(parse_element(A, "a2 x5 x3 x5") == parse_element(A, "a2 x3 x2 x5"));
    CHECK(parse_element(A, "a2 x3 x2 x5") == parse_element(A, "a2 x3 x3 x2"));
}

TEST_CASE("E7 center and z_8^2") {
    const Ctx& c = ctx("e7");
    check_common(c);
    CHECK(c.Z.z_degrees == std::vector<int>{0, 8, 12});

    Elem z8 = c.Z.z.at(8), z12 = c.Z.z.at(12);
    Elem expect = elem_sub(elem_add(c.A.omega(1), c.A.omega(3)), c.A.omega(7));
    CHECK(c.A.mul(z8, z8) == expect);
    CHECK(c.A.mul(z8, z12).empty());
    CHECK(c.A.mul(z12, z12).empty());
}
