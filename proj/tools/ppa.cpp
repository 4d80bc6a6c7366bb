#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

#include "ppa/cache.hpp"
#include "ppa/hochschild.hpp"
#include "ppa/products.hpp"
#include "ppa/verify.hpp"

using namespace ppa;

namespace {

struct Options {
    std::string quiver;
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    int max_degree = -1;
};

std::string default_cache_dir() {
    const char* home = std::getenv("HOME");
    if (home && *home) return std::string(home) + "/.cache/ppa";
    return ".ppa-cache";
}

void add_common(CLI::App* sub, Options& o, bool with_format) {
    sub->add_option("-q,--quiver,quiver", o.quiver, "quiver name: d4..d8, e6, e7, e8")->required();
    if (with_format)
        sub->add_option("-f,--format,format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--cache-dir", o.cache_dir, "basis cache directory")
        ->envname("PPA_CACHE_DIR");
    sub->add_flag("--no-cache", o.no_cache, "rebuild without touching the cache");
    sub->add_option("--max-degree", o.max_degree, "limit the degree range");
}

Algebra build(const Options& o) {
    return load_algebra(parse_quiver_name(o.quiver), o.cache_dir, o.no_cache);
}

std::string poly_str(const IPoly& p) {
    std::string s;
    for (int m = 0; m < int(p.size()); ++m) {
        long long c = p[size_t(m)];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        long long a = c > 0 ? c : -c;
        if (a != 1 || m == 0) s += std::to_string(a);
        if (m == 1) s += "t";
        if (m > 1) s += "t^" + std::to_string(m);
    }
    return s.empty() ? "0" : s;
}

std::vector<int> z_degrees_of(const RootData& rd) {
    std::vector<int> out;
    for (int m : rd.exponents)
        if (2 * m < rd.h) out.push_back(2 * m - 2);
    return out;
}

int run_info(const Options& o) {
    DynkinQuiver q = parse_quiver_name(o.quiver);
    RootData rd = root_data(q);
    long long dim = (long long)q.num_vertices * rd.h * (rd.h + 1) / 6;
    if (o.format == "json") {
        nlohmann::json j;
        j["name"] = q.name();
        j["vertices"] = q.num_vertices;
        j["h"] = rd.h;
        j["exponents"] = rd.exponents;
        j["nu"] = std::vector<int>(rd.nu.begin() + 1, rd.nu.end());
        j["fixed"] = rd.fixed;
        j["dim"] = dim;
        j["z_degrees"] = z_degrees_of(rd);
        std::cout << j.dump(1) << "\n";
        return 0;
    }
    std::cout << q.name() << ": " << q.num_vertices << " vertices, " << q.arrows.size()
              << " arrows in the double quiver\n";
    std::cout << "coxeter number h = " << rd.h << "\n";
    std::cout << "exponents:";
    for (int m : rd.exponents) std::cout << " " << m;
    std::cout << "\ndim A = " << dim << "\n";
    std::cout << "nakayama permutation:";
    for (int v = 1; v <= q.num_vertices; ++v) std::cout << " " << rd.nu[size_t(v)];
    std::cout << "\ncenter degrees:";
    for (int k : z_degrees_of(rd)) std::cout << " " << k;
    std::cout << " (top slice " << rd.h - 2 << ", dimension " << rd.fixed.size() << ")\n";
    return 0;
}

int run_basis(const Options& o) {
    Algebra A = build(o);
    int top = o.max_degree < 0 ? A.top_degree() : std::min(o.max_degree, A.top_degree());
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int d = 0; d <= top; ++d)
            for (int id : A.degree_ids(d)) {
                nlohmann::json j = A.elem_to_json({{id, Rat(1)}})["monomials"][0];
                j["id"] = id;
                j["degree"] = d;
                rows.push_back(j);
            }
        std::cout << rows.dump(1) << "\n";
        return 0;
    }
    for (int d = 0; d <= top; ++d) {
        std::cout << "degree " << d << " (" << A.dim_degree(d) << "):\n";
        for (int id : A.degree_ids(d)) {
            const Mono& m = A.mono(id);
            if (o.format == "latex")
                std::cout << "  " << A.elem_latex({{id, Rat(1)}}) << "\n";
            else
                std::cout << "  " << m.src << " -> " << m.dst << ": " << A.mono_str(id) << "\n";
        }
    }
    return 0;
}

int run_hilbert(const Options& o) {
    DynkinQuiver q = parse_quiver_name(o.quiver);
    RootData rd = root_data(q);
    PolyMat H = hilbert_closed(rd);
    int r = q.num_vertices;
    if (o.format == "json") {
        nlohmann::json j;
        j["name"] = q.name();
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < r; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < r; ++k) row.push_back(H[size_t(i)][size_t(k)]);
            rows.push_back(row);
        }
        j["hilbert"] = rows;
        std::cout << j.dump(1) << "\n";
        return 0;
    }
    if (o.format == "latex") {
        for (int j = 0; j < r; ++j) {
            std::cout << "% column " << j + 1 << "\n\\begin{pmatrix}\n";
            for (int i = 0; i < r; ++i) {
                std::string p = poly_str(H[size_t(i)][size_t(j)]);
                std::cout << "  " << p << (i + 1 < r ? " \\\\" : "") << "\n";
            }
            std::cout << "\\end{pmatrix}\n";
        }
        return 0;
    }
    for (int j = 0; j < r; ++j) {
        std::cout << "column " << j + 1 << ":\n";
        for (int i = 0; i < r; ++i)
            std::cout << "  [" << i + 1 << "] " << poly_str(H[size_t(i)][size_t(j)]) << "\n";
    }
    return 0;
}

// expand a central element over the distinguished generators of its degree
std::vector<std::pair<std::string, Rat>> express_central(const Algebra& A, const Center& C,
                                                         const Elem& x) {
    if (x.empty()) return {};
    int d = A.degree_of(x);
    std::vector<std::pair<std::string, Elem>> gens;
    if (C.z.count(d)) gens.emplace_back("z" + std::to_string(d), C.z.at(d));
    if (d == A.top_degree())
        for (int v : A.roots().fixed)
            gens.emplace_back("w" + std::to_string(v), A.omega(v));
    const std::vector<int>& ids = A.degree_ids(d);
    std::map<int, int> pos;
    for (int k = 0; k < int(ids.size()); ++k) pos[ids[size_t(k)]] = k;
    QMat M(int(ids.size()), int(gens.size()));
    for (int g = 0; g < int(gens.size()); ++g)
        for (const auto& [id, c] : gens[size_t(g)].second) M.at(pos.at(id), g) = c;
    std::vector<Rat> b(ids.size());
    for (const auto& [id, c] : x) b[size_t(pos.at(id))] = c;
    auto sol = solve(M, b);
    if (!sol) throw std::logic_error("central element outside the generator span");
    std::vector<std::pair<std::string, Rat>> out;
    for (int g = 0; g < int(gens.size()); ++g)
        if ((*sol)[size_t(g)] != 0) out.emplace_back(gens[size_t(g)].first, (*sol)[size_t(g)]);
    return out;
}

int run_center(const Options& o) {
    Algebra A = build(o);
    Center C = compute_center(A);
    std::vector<std::pair<std::string, Elem>> gens;
    for (int k : C.z_degrees)
        if (k > 0) gens.emplace_back("z" + std::to_string(k), C.z.at(k));
    for (int v : A.roots().fixed) gens.emplace_back("w" + std::to_string(v), A.omega(v));
    auto degree_of = [&](const Elem& e) { return A.degree_of(e); };
    if (o.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [name, elem] : gens) {
            nlohmann::json j;
            j["degree"] = degree_of(elem);
            j["name"] = name;
            j["element"] = A.elem_to_json(elem);
            nlohmann::json prods = nlohmann::json::array();
            for (const auto& [name2, elem2] : gens) {
                nlohmann::json p;
                p["with"] = name2;
                nlohmann::json terms = nlohmann::json::array();
                for (const auto& [n, c] : express_central(A, C, A.mul(elem, elem2)))
                    terms.push_back({{"name", n}, {"coeff", frac_str(c)}});
                p["result"] = terms;
                prods.push_back(p);
            }
            j["products"] = prods;
            out.push_back(j);
        }
        std::cout << out.dump(1) << "\n";
        return 0;
    }
    for (const auto& [name, elem] : gens) {
        std::cout << name << " (degree " << degree_of(elem) << ") = "
                  << (o.format == "latex" ? A.elem_latex(elem) : A.elem_str(elem)) << "\n";
    }
    std::cout << "products:\n";
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a; b < gens.size(); ++b) {
            auto expr = express_central(A, C, A.mul(gens[a].second, gens[b].second));
            std::cout << "  " << gens[a].first << " " << gens[b].first << " =";
            if (expr.empty()) std::cout << " 0";
            for (const auto& [n, c] : expr) {
                std::cout << " ";
                if (c != 1) std::cout << rat_str(c) << " ";
                std::cout << n;
            }
            std::cout << "\n";
        }
    return 0;
}

int run_hh(const Options& o) {
    Algebra A = build(o);
    Hochschild H(A);
    int top = o.max_degree < 0 ? 6 : o.max_degree;
    std::map<std::pair<int, int>, std::vector<std::string>> names;
    for (const NamedClass& n : H.named_classes()) names[{n.i, n.delta}].push_back(n.name);
    if (o.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (int i = 0; i <= top; ++i) {
            nlohmann::json ji;
            ji["i"] = i;
            nlohmann::json buckets = nlohmann::json::array();
            for (auto [delta, dim] : H.hh_dims(i)) {
                nlohmann::json b;
                b["delta"] = delta;
                b["dim"] = dim;
                auto it = names.find({i, delta});
                b["classes"] = it == names.end() ? std::vector<std::string>{} : it->second;
                buckets.push_back(b);
            }
            ji["buckets"] = buckets;
            out.push_back(ji);
        }
        std::cout << out.dump(1) << "\n";
        return 0;
    }
    for (int i = 0; i <= top; ++i) {
        std::cout << "HH^" << i << ":";
        auto dims = H.hh_dims(i);
        if (dims.empty()) std::cout << " 0";
        std::cout << "\n";
        for (auto [delta, dim] : dims) {
            std::cout << "  degree " << delta << ": dim " << dim;
            auto it = names.find({i, delta});
            if (it != names.end()) {
                std::cout << " (";
                for (size_t k = 0; k < it->second.size(); ++k)
                    std::cout << (k ? ", " : "") << it->second[k];
                std::cout << ")";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

void print_matrix(const std::string& name, const QMat& m, bool latex) {
    if (m.rows == 0) return;
    if (latex) {
        std::cout << name << " = \\begin{pmatrix}\n";
        for (int i = 0; i < m.rows; ++i) {
            std::cout << "  ";
            for (int j = 0; j < m.cols; ++j)
                std::cout << rat_str(m.at(i, j)) << (j + 1 < m.cols ? " & " : "");
            std::cout << (i + 1 < m.rows ? " \\\\" : "") << "\n";
        }
        std::cout << "\\end{pmatrix}\n";
        return;
    }
    std::cout << name << ":\n";
    for (int i = 0; i < m.rows; ++i) {
        std::cout << "  [";
        for (int j = 0; j < m.cols; ++j) std::cout << (j ? " " : "") << rat_str(m.at(i, j));
        std::cout << "]\n";
    }
}

int run_products(const Options& o) {
    Algebra A = build(o);
    Hochschild H(A);
    CupTables t = compute_products(H);
    if (o.format == "json") {
        std::cout << products_to_json(H, t).dump(1) << "\n";
        return 0;
    }
    bool latex = o.format == "latex";
    print_matrix(latex ? "M_\\alpha" : "M_alpha", t.malpha, latex);
    print_matrix(latex ? "\\kappa" : "kappa", t.kappa, latex);
    print_matrix(latex ? "M_\\beta" : "M_beta", t.mbeta, latex);
    for (const ProductRow& row : t.rows) {
        std::cout << row.left << " " << row.right << " =";
        if (row.result.empty()) std::cout << " 0";
        for (const ProductTerm& term : row.result)
            std::cout << " " << frac_str(term.coeff) << " " << term.name;
        std::cout << "  [" << row.provenance << "]\n";
    }
    return 0;
}

int run_verify(const Options& o) {
    Algebra A = build(o);
    Hochschild H(A);
    auto results = verify_quiver(H, o.max_degree);
    for (const CheckResult& c : results) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    if (o.max_degree >= 0)
        std::cout << "partial: cohomology scan limited to degree " << o.max_degree << "\n";
    return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"preprojective algebra calculator"};
    app.require_subcommand(1);
    Options o;
    o.cache_dir = default_cache_dir();

    CLI::App* info = app.add_subcommand("info", "quiver and root data");
    CLI::App* basis = app.add_subcommand("basis", "monomial basis of the algebra");
    CLI::App* hilbert = app.add_subcommand("hilbert", "matrix Hilbert series");
    CLI::App* center = app.add_subcommand("center", "center generators and products");
    CLI::App* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions");
    CLI::App* products = app.add_subcommand("products", "cup product tables");
    CLI::App* verify = app.add_subcommand("verify", "run the check battery");
    for (CLI::App* sub : {info, basis, hilbert, center, hh, products, verify})
        add_common(sub, o, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(info)) return run_info(o);
        if (app.got_subcommand(basis)) return run_basis(o);
        if (app.got_subcommand(hilbert)) return run_hilbert(o);
        if (app.got_subcommand(center)) return run_center(o);
        if (app.got_subcommand(hh)) return run_hh(o);
        if (app.got_subcommand(products)) return run_products(o);
        if (app.got_subcommand(verify)) return run_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
