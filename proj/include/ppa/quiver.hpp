#pragma once
#include <string>
#include <vector>

#include "json.hpp"

namespace ppa {

enum class Family { D, E };

// Arrows of the double quiver. Unstarred arrows (the chosen orientation)
// come first, ids 0..m-1; the starred partner of arrow i is i+m.
struct Arrow {
    int id = 0;
    std::string name; // "a1", "a3*", ... (E8 uses "a0".."a6")
    int src = 0;      // vertices are 1-based
    int dst = 0;
    bool starred = false;
    int partner = 0;
    int eps() const { return starred ? -1 : 1; } // sign in the preprojective relation
};

struct DynkinQuiver {
    Family family = Family::D;
    int n = 0;            // D_{n+1} is built from (D, n); E_n from (E, n)
    int num_vertices = 0; // D: n+1, E: n
    std::vector<Arrow> arrows;
    int num_unstarred = 0;

    // arrow ids leaving / entering each vertex, over the whole double quiver
    std::vector<std::vector<int>> out_arrows; // index 1..num_vertices
    std::vector<std::vector<int>> in_arrows;

    std::string name() const; // "D5", "E6", ...
    int arrow_by_name(const std::string& s) const; // -1 if absent
};

// (D, n) with n >= 3 gives D_{n+1}; (E, n) with n in {6,7,8} gives E_n.
// Throws std::invalid_argument outside the supported range.
DynkinQuiver build_quiver(Family family, int n);

// "d4".."d99", "e6", "e7", "e8" (case-insensitive); throws on anything else.
DynkinQuiver parse_quiver_name(const std::string& name);

struct RootData {
    int h = 0;                  // Coxeter number
    std::vector<int> exponents; // sorted, with multiplicity
    std::vector<int> nu;        // Nakayama permutation of vertices, index 1..r
    std::vector<std::vector<int>> adjacency; // C, 0-based r x r
    std::vector<std::vector<int>> perm;      // P, matrix of nu, 0-based
    int r_plus = 0;             // dim ker(P - 1)
    int r_minus = 0;            // dim ker(P + 1)
    std::vector<int> fixed;     // nu-fixed vertices F, sorted
    std::vector<int> ht;        // vertex height, index 1..r; ht[t(a)] = ht[s(a)] + 1 for a in Q
};

RootData root_data(const DynkinQuiver& q);

nlohmann::json quiver_to_json(const DynkinQuiver& q);

} // namespace ppa
