#include "ppa/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ppa {

std::string DynkinQuiver::name() const {
    return (family == Family::D ? "D" : "E") + std::to_string(num_vertices);
}

int DynkinQuiver::arrow_by_name(const std::string& s) const {
    for (const auto& a : arrows)
        if (a.name == s) return a.id;
    return -1;
}

static void finish(DynkinQuiver& q, const std::vector<std::pair<int, int>>& edges,
                   int first_label) {
    int m = int(edges.size());
    q.num_unstarred = m;
    q.arrows.clear();
    for (int i = 0; i < m; ++i) {
        Arrow a;
        a.id = i;
        a.name = "a" + std::to_string(first_label + i);
        a.src = edges[i].first;
        a.dst = edges[i].second;
        a.starred = false;
        a.partner = i + m;
        q.arrows.push_back(a);
    }
    for (int i = 0; i < m; ++i) {
        Arrow a;
        a.id = i + m;
        a.name = q.arrows[i].name + "*";
        a.src = edges[i].second;
        a.dst = edges[i].first;
        a.starred = true;
        a.partner = i;
        q.arrows.push_back(a);
    }
    q.out_arrows.assign(q.num_vertices + 1, {});
    q.in_arrows.assign(q.num_vertices + 1, {});
    for (const auto& a : q.arrows) {
        q.out_arrows[a.src].push_back(a.id);
        q.in_arrows[a.dst].push_back(a.id);
    }
}

DynkinQuiver build_quiver(Family family, int n) {
    DynkinQuiver q;
    q.family = family;
    q.n = n;
    std::vector<std::pair<int, int>> edges;
    if (family == Family::D) {
        if (n < 3) throw std::invalid_argument("type D needs n >= 3 (quiver D_{n+1})");
        q.num_vertices = n + 1;
        for (int i = 1; i <= n - 2; ++i) edges.push_back({i + 1, i}); // a_i
        edges.push_back({n, n - 1});                                 // a_{n-1}
        edges.push_back({n + 1, n - 1});                             // a_n
        finish(q, edges, 1);
    } else {
        if (n < 6 || n > 8) throw std::invalid_argument("type E needs n in {6,7,8}");
        q.num_vertices = n;
        if (n == 6) {
            edges = {{1, 2}, {2, 3}, {4, 3}, {5, 4}, {6, 3}};
            finish(q, edges, 1);
        } else if (n == 7) {
            edges = {{1, 2}, {2, 3}, {3, 4}, {5, 4}, {6, 5}, {7, 4}};
            finish(q, edges, 1);
        } else {
            edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 5}, {7, 6}, {8, 5}};
            finish(q, edges, 0); // E8 arrows are labelled a0..a6
        }
    }
    return q;
}

DynkinQuiver parse_quiver_name(const std::string& name) {
    std::string s;
    for (char c : name) s += char(std::tolower(unsigned(c)));
    if (s.size() < 2) throw std::invalid_argument("bad quiver name: " + name);
    char fam = s[0];
    int sub = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(unsigned(s[i]))) throw std::invalid_argument("bad quiver name: " + name);
        sub = sub * 10 + (s[i] - '0');
    }
    if (fam == 'd') {
        if (sub < 4) throw std::invalid_argument("supported D quivers start at d4");
        return build_quiver(Family::D, sub - 1);
    }
    if (fam == 'e') return build_quiver(Family::E, sub);
    throw std::invalid_argument("bad quiver name: " + name);
}

RootData root_data(const DynkinQuiver& q) {
    RootData rd;
    int r = q.num_vertices;
    rd.nu.assign(r + 1, 0);
    for (int v = 1; v <= r; ++v) rd.nu[v] = v;
    if (q.family == Family::D) {
        int n = q.n;
        rd.h = 2 * n;
        for (int k = 1; k <= n; ++k) rd.exponents.push_back(2 * k - 1);
        rd.exponents.push_back(n);
        std::sort(rd.exponents.begin(), rd.exponents.end());
        if (n % 2 == 0) {
            rd.nu[n] = n + 1;
            rd.nu[n + 1] = n;
        }
    } else if (q.n == 6) {
        rd.h = 12;
        rd.exponents = {1, 4, 5, 7, 8, 11};
        rd.nu[1] = 5; rd.nu[5] = 1;
        rd.nu[2] = 4; rd.nu[4] = 2;
    } else if (q.n == 7) {
        rd.h = 18;
        rd.exponents = {1, 5, 7, 9, 11, 13, 17};
    } else {
        rd.h = 30;
        rd.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
    }

    rd.adjacency.assign(r, std::vector<int>(r, 0));
    for (const auto& a : q.arrows)
        if (!a.starred) {
            rd.adjacency[a.src - 1][a.dst - 1] = 1;
            rd.adjacency[a.dst - 1][a.src - 1] = 1;
        }
    rd.perm.assign(r, std::vector<int>(r, 0));
    for (int v = 1; v <= r; ++v) rd.perm[rd.nu[v] - 1][v - 1] = 1;

    int moved = 0;
    for (int v = 1; v <= r; ++v) {
        if (rd.nu[v] == v) rd.fixed.push_back(v);
        else ++moved;
    }
    rd.r_minus = moved / 2;
    rd.r_plus = r - rd.r_minus;

    // heights: propagate over the underlying tree from vertex 1
    rd.ht.assign(r + 1, 0);
    std::vector<bool> seen(r + 1, false);
    seen[1] = true;
    std::vector<int> queue = {1};
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (const auto& a : q.arrows) {
            if (a.starred) continue;
            int u = -1, w = -1;
            if (a.src == v) { u = a.dst; }
            else if (a.dst == v) { w = a.src; }
            else continue;
            if (u > 0 && !seen[u]) { // a: v -> u, ht[u] = ht[v] + 1
                rd.ht[u] = rd.ht[v] + 1;
                seen[u] = true;
                queue.push_back(u);
            }
            if (w > 0 && !seen[w]) { // a: w -> v, ht[w] = ht[v] - 1
                rd.ht[w] = rd.ht[v] - 1;
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for (int v = 1; v <= r; ++v)
        if (!seen[v]) throw std::logic_error("quiver is not connected");
    return rd;
}

nlohmann::json quiver_to_json(const DynkinQuiver& q) {
    nlohmann::json j;
    j["family"] = q.family == Family::D ? "D" : "E";
    j["rank"] = q.num_vertices;
    j["vertices"] = q.num_vertices;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : q.arrows) {
        nlohmann::json ja;
        ja["id"] = a.name;
        ja["src"] = a.src;
        ja["dst"] = a.dst;
        if (a.starred) ja["star_of"] = q.arrows[a.partner].name;
        else ja["star_of"] = nullptr;
        arr.push_back(ja);
    }
    j["arrows"] = arr;
    return j;
}

} // namespace ppa
