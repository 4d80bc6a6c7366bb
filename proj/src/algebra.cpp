#include "ppa/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ppa {

Rat elem_coeff(const Elem& x, int id) {
    auto it = std::lower_bound(x.begin(), x.end(), id,
                               [](const auto& p, int v) { return p.first < v; });
    if (it != x.end() && it->first == id) return it->second;
    return Rat(0);
}

void elem_axpy(Elem& x, const Rat& c, const Elem& y) {
    if (c == 0 || y.empty()) return;
    Elem out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            out.push_back({y[j].first, c * y[j].second});
            ++j;
        } else {
            Rat s = x[i].second + c * y[j].second;
            if (s != 0) out.push_back({x[i].first, s});
            ++i;
            ++j;
        }
    }
    x = std::move(out);
}

Elem elem_add(const Elem& x, const Elem& y) {
    Elem out = x;
    elem_axpy(out, Rat(1), y);
    return out;
}

Elem elem_sub(const Elem& x, const Elem& y) {
    Elem out = x;
    elem_axpy(out, Rat(-1), y);
    return out;
}

Elem elem_scale(const Elem& x, const Rat& c) {
    if (c == 0) return {};
    Elem out = x;
    for (auto& t : out) t.second *= c;
    return out;
}

Algebra::Algebra(const DynkinQuiver& q) : q_(q), rd_(root_data(q)) {
    hilbert_ = hilbert_closed(rd_);
    build_basis();
    finish_indexes();
    check_hilbert();
    build_frobenius();
    build_dual();
}

void Algebra::build_basis() {
    int r = q_.num_vertices;
    int na = int(q_.arrows.size());
    int top = top_degree();

    for (int v = 1; v <= r; ++v) {
        Mono m;
        m.src = m.dst = v;
        m.deg = 0;
        monos_.push_back(m);
        mul_arrow_.push_back(std::vector<Elem>(na));
    }

    int prev2_begin = 0, prev2_end = 0; // id range of degree d-2
    int prev_begin = 0, prev_end = r;   // id range of degree d-1

    for (int d = 1; d <= top; ++d) {
        // spanning monomials: basis(d-1) extended by one arrow, in lex order
        std::vector<std::pair<int, int>> cands;
        if (d == 1) {
            for (int a = 0; a < na; ++a) cands.push_back({q_.arrows[a].src - 1, a});
        } else {
            for (int p = prev_begin; p < prev_end; ++p)
                for (int a = 0; a < na; ++a)
                    if (monos_[p].dst == q_.arrows[a].src) cands.push_back({p, a});
        }
        int ncols = int(cands.size());
        std::vector<int> colof(size_t(prev_end - prev_begin) * na, -1);
        for (int c = 0; c < ncols; ++c)
            colof[size_t(cands[c].first - prev_begin) * na + cands[c].second] = c;

        // relation rows: b * rho_{t(b)} over basis(d-2), coordinatized on cands
        std::vector<std::vector<Rat>> rows;
        for (int b = prev2_begin; b < prev2_end && d >= 2; ++b) {
            int v = monos_[b].dst;
            std::vector<Rat> row(ncols);
            bool nonzero = false;
            for (int a : q_.out_arrows[v]) {
                int eps = q_.arrows[a].eps();
                int astar = q_.arrows[a].partner;
                for (const auto& [p, c] : mul_arrow_[b][a]) {
                    int col = colof[size_t(p - prev_begin) * na + astar];
                    if (col < 0) throw std::logic_error("missing spanning column");
                    row[col] += Rat(eps) * c;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }

        QMat m(int(rows.size()), ncols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < ncols; ++j) m.at(int(i), j) = rows[i][j];
        std::vector<int> pivots = rref(m);
        std::vector<bool> is_pivot(ncols, false);
        for (int c : pivots) is_pivot[c] = true;

        int d_begin = int(monos_.size());
        std::vector<int> newid(ncols, -1);
        for (int c = 0; c < ncols; ++c) {
            if (is_pivot[c]) continue;
            int id = int(monos_.size());
            newid[c] = id;
            const Mono& pm = monos_[cands[c].first];
            Mono nm;
            nm.src = pm.src;
            nm.dst = q_.arrows[cands[c].second].dst;
            nm.deg = d;
            nm.arrows = pm.arrows;
            nm.arrows.push_back(uint8_t(cands[c].second));
            monos_.push_back(nm);
            mul_arrow_.push_back(std::vector<Elem>(na));
        }

        std::vector<Elem> rewrite(pivots.size());
        for (size_t rr = 0; rr < pivots.size(); ++rr) {
            Elem e;
            for (int c = pivots[rr] + 1; c < ncols; ++c) {
                if (is_pivot[c]) continue;
                const Rat& v = m.at(int(rr), c);
                if (v != 0) e.push_back({newid[c], -v});
            }
            rewrite[rr] = std::move(e);
        }
        std::vector<int> pivot_row(ncols, -1);
        for (size_t rr = 0; rr < pivots.size(); ++rr) pivot_row[pivots[rr]] = int(rr);

        for (int c = 0; c < ncols; ++c) {
            auto [p, a] = cands[c];
            mul_arrow_[p][a] =
                is_pivot[c] ? rewrite[pivot_row[c]] : Elem{{newid[c], Rat(1)}};
        }

        prev2_begin = prev_begin;
        prev2_end = prev_end;
        prev_begin = d_begin;
        prev_end = int(monos_.size());
    }
}

void Algebra::finish_indexes() {
    deg_ids_.assign(top_degree() + 1, {});
    blocks_.clear();
    for (int id = 0; id < int(monos_.size()); ++id) {
        const Mono& m = monos_[size_t(id)];
        deg_ids_[m.deg].push_back(id);
        blocks_[{m.deg, m.src, m.dst}].push_back(id);
    }
}

void Algebra::check_hilbert() const {
    int r = q_.num_vertices;
    for (int d = 0; d <= top_degree(); ++d)
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                auto it = blocks_.find({d, i, j});
                long long got = it == blocks_.end() ? 0 : (long long)it->second.size();
                if (got != hilbert_[i - 1][j - 1][d])
                    throw std::logic_error("basis dimensions disagree with the Hilbert series at " +
                                           std::to_string(d));
            }
}

static const std::vector<int> kEmptyIds;

int Algebra::dim_degree(int deg) const {
    if (deg < 0 || deg > top_degree()) return 0;
    return int(deg_ids_[size_t(deg)].size());
}

const std::vector<int>& Algebra::degree_ids(int deg) const {
    if (deg < 0 || deg > top_degree()) return kEmptyIds;
    return deg_ids_[size_t(deg)];
}

const std::vector<int>& Algebra::block(int deg, int i, int j) const {
    auto it = blocks_.find({deg, i, j});
    return it == blocks_.end() ? kEmptyIds : it->second;
}

int Algebra::star_count(int id) const {
    int s = 0;
    for (uint8_t a : monos_[size_t(id)].arrows)
        if (q_.arrows[a].starred) ++s;
    return s;
}

int Algebra::block_star_count(int deg, int i, int j) const {
    const auto& b = block(deg, i, j);
    if (b.empty()) return 0;
    int s = star_count(b[0]);
    for (int id : b)
        if (star_count(id) != s)
            throw std::logic_error("star count is not constant on a block");
    return s;
}

std::string Algebra::mono_str(int id) const {
    const Mono& m = monos_[size_t(id)];
    if (m.arrows.empty()) return "e" + std::to_string(m.src);
    std::string s;
    for (size_t i = 0; i < m.arrows.size(); ++i) {
        if (i) s += " ";
        s += q_.arrows[m.arrows[i]].name;
    }
    return s;
}

Elem Algebra::one() const {
    Elem e;
    for (int v = 0; v < q_.num_vertices; ++v) e.push_back({v, Rat(1)});
    return e;
}

Elem Algebra::path(int src, const std::vector<int>& arrow_ids) const {
    int at = src;
    for (size_t i = 0; i < arrow_ids.size(); ++i) {
        const Arrow& a = q_.arrows[size_t(arrow_ids[i])];
        if (a.src != at)
            throw std::invalid_argument("non-composable path: step " + std::to_string(i + 1) +
                                        " (" + a.name + ") starts at vertex " +
                                        std::to_string(a.src) + ", not " + std::to_string(at));
        at = a.dst;
    }
    Elem cur = idem(src);
    for (int a : arrow_ids) {
        cur = mul_arrow(cur, a);
        if (cur.empty()) return cur;
    }
    return cur;
}

Elem Algebra::mul_arrow(const Elem& x, int arrow) const {
    Elem out;
    int need = q_.arrows[size_t(arrow)].src;
    for (const auto& [id, c] : x) {
        if (monos_[size_t(id)].dst != need) continue;
        elem_axpy(out, c, mul_arrow_[size_t(id)][size_t(arrow)]);
    }
    return out;
}

Elem Algebra::mul(const Elem& x, const Elem& y) const {
    Elem out;
    for (const auto& [qid, c] : y) {
        const Mono& m = monos_[size_t(qid)];
        Elem cur;
        for (const auto& [p, cx] : x)
            if (monos_[size_t(p)].dst == m.src) cur.push_back({p, cx});
        for (uint8_t a : m.arrows) {
            if (cur.empty()) break;
            cur = mul_arrow(cur, a);
        }
        elem_axpy(out, c, cur);
    }
    return out;
}

Elem Algebra::pow(const Elem& x, int k) const {
    Elem out = one();
    for (int i = 0; i < k; ++i) out = mul(out, x);
    return out;
}

Elem Algebra::star(const Elem& x) const {
    Elem out;
    for (const auto& [id, c] : x) {
        const Mono& m = monos_[size_t(id)];
        std::vector<int> rev;
        for (auto it = m.arrows.rbegin(); it != m.arrows.rend(); ++it)
            rev.push_back(q_.arrows[*it].partner);
        elem_axpy(out, c, path(m.dst, rev));
    }
    return out;
}

std::pair<int, int> Algebra::eta_arrow(int arrow) const {
    const Arrow& a = q_.arrows[size_t(arrow)];
    int s = rd_.nu[a.src], t = rd_.nu[a.dst];
    for (const auto& b : q_.arrows)
        if (b.src == s && b.dst == t && b.starred == a.starred)
            return {a.starred ? 1 : -1, b.id};
    throw std::logic_error("nu does not act on the arrows");
}

Elem Algebra::eta(const Elem& x) const {
    Elem out;
    for (const auto& [id, c] : x) {
        const Mono& m = monos_[size_t(id)];
        std::vector<int> img;
        int sign = 1;
        for (uint8_t a : m.arrows) {
            auto [sg, b] = eta_arrow(a);
            sign *= sg;
            img.push_back(b);
        }
        elem_axpy(out, c * sign, path(rd_.nu[m.src], img));
    }
    return out;
}

Rat Algebra::eta_block_trace(int deg, int i, int j) const {
    Rat t = 0;
    for (int id : block(deg, i, j)) t += elem_coeff(eta(Elem{{id, Rat(1)}}), id);
    return t;
}

void Algebra::build_frobenius() {
    int r = q_.num_vertices;
    int top = top_degree();
    top_of_vertex_.assign(size_t(r) + 1, -1);
    for (int v = 1; v <= r; ++v) {
        const auto& b = block(top, v, rd_.nu[v]);
        if (b.size() != 1) throw std::logic_error("top block is not one-dimensional");
        top_of_vertex_[size_t(v)] = b[0];
    }

    // anchor element with trace 1
    int v0;
    std::vector<int> anchor;
    auto id_of = [&](const std::string& n) {
        int a = q_.arrow_by_name(n);
        if (a < 0) throw std::logic_error("missing arrow " + n);
        return a;
    };
    if (q_.family == Family::D) {
        int n = q_.n;
        v0 = 1;
        for (int i = 1; i <= n - 1; ++i) anchor.push_back(id_of("a" + std::to_string(i) + "*"));
        for (int i = n - 1; i >= 1; --i) anchor.push_back(id_of("a" + std::to_string(i)));
    } else if (q_.n == 6) {
        v0 = 3;
        anchor = {id_of("a3*"), id_of("a3")};
        for (int k = 0; k < 2; ++k) {
            anchor.push_back(id_of("a2*"));
            anchor.push_back(id_of("a2"));
            anchor.push_back(id_of("a3*"));
            anchor.push_back(id_of("a3"));
        }
    } else if (q_.n == 7) {
        v0 = 4;
        for (int k = 0; k < 4; ++k) {
            anchor.push_back(id_of("a4*"));
            anchor.push_back(id_of("a4"));
            anchor.push_back(id_of("a3*"));
            anchor.push_back(id_of("a3"));
        }
    } else {
        v0 = 5;
        for (int k = 0; k < 7; ++k) {
            anchor.push_back(id_of("a4*"));
            anchor.push_back(id_of("a4"));
            anchor.push_back(id_of("a3*"));
            anchor.push_back(id_of("a3"));
        }
    }
    Elem ae = path(v0, anchor);
    if (ae.size() != 1 || ae[0].first != top_of_vertex_[size_t(v0)])
        throw std::logic_error("anchor element did not reduce to the top monomial");

    std::vector<Rat> t(size_t(r) + 1);
    std::vector<bool> known(size_t(r) + 1, false);
    t[size_t(v0)] = Rat(1) / ae[0].second;
    known[size_t(v0)] = true;

    // propagate with (x, y) = (y, eta(x)) for x an arrow
    struct Eq {
        int u, w;
        Rat alpha, beta; // alpha * t_u = beta * t_w
    };
    std::vector<Eq> eqs;
    for (const auto& a : q_.arrows) {
        int u = a.src, w = a.dst;
        auto [sg, abar] = eta_arrow(a.id);
        for (int y : block(top - 1, w, rd_.nu[u])) {
            Elem ye{{y, Rat(1)}};
            Rat alpha = elem_coeff(mul(arrow_elem(a.id), ye), top_of_vertex_[size_t(u)]);
            Rat beta = Rat(sg) * elem_coeff(mul_arrow(ye, abar), top_of_vertex_[size_t(w)]);
            if (alpha == 0 && beta == 0) continue;
            eqs.push_back({u, w, alpha, beta});
        }
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& e : eqs) {
            if (e.alpha == 0 || e.beta == 0) continue;
            if (known[size_t(e.u)] && !known[size_t(e.w)]) {
                t[size_t(e.w)] = e.alpha * t[size_t(e.u)] / e.beta;
                known[size_t(e.w)] = true;
                progress = true;
            } else if (known[size_t(e.w)] && !known[size_t(e.u)]) {
                t[size_t(e.u)] = e.beta * t[size_t(e.w)] / e.alpha;
                known[size_t(e.u)] = true;
                progress = true;
            }
        }
    }
    for (int v = 1; v <= r; ++v)
        if (!known[size_t(v)]) throw std::logic_error("Frobenius normalization not determined");
    for (const auto& e : eqs)
        if (e.alpha * t[size_t(e.u)] != e.beta * t[size_t(e.w)])
            throw std::logic_error("Frobenius form is not eta-symmetric");

    trace_.assign(monos_.size(), Rat(0));
    for (int v = 1; v <= r; ++v) trace_[size_t(top_of_vertex_[size_t(v)])] = t[size_t(v)];
}

Rat Algebra::trace(const Elem& x) const {
    Rat s = 0;
    for (const auto& [id, c] : x) s += c * trace_[size_t(id)];
    return s;
}

Elem Algebra::omega(int v) const {
    int id = top_of_vertex_[size_t(v)];
    return {{id, Rat(1) / trace_[size_t(id)]}};
}

void Algebra::build_dual() {
    dual_.assign(monos_.size(), Elem{});
    int top = top_degree();
    for (const auto& [key, bids] : blocks_) {
        auto [d, l, m] = key;
        const auto& cids = block(top - d, m, rd_.nu[l]);
        if (cids.size() != bids.size())
            throw std::logic_error("dual block dimensions disagree");
        int nb = int(bids.size());
        QMat g(nb, nb);
        for (int p = 0; p < nb; ++p) {
            Elem bp{{bids[size_t(p)], Rat(1)}};
            for (int qq = 0; qq < nb; ++qq)
                g.at(p, qq) = trace(mul(bp, Elem{{cids[size_t(qq)], Rat(1)}}));
        }
        auto gi = inverse(g);
        if (!gi) throw std::logic_error("Frobenius form degenerate on a block");
        for (int p = 0; p < nb; ++p) {
            Elem dp;
            for (int qq = 0; qq < nb; ++qq) {
                const Rat& c = gi->at(qq, p);
                if (c != 0) dp.push_back({cids[size_t(qq)], c});
            }
            std::sort(dp.begin(), dp.end());
            dual_[size_t(bids[size_t(p)])] = std::move(dp);
        }
    }
}

bool Algebra::is_homogeneous(const Elem& x) const {
    if (x.empty()) return true;
    int d = monos_[size_t(x[0].first)].deg;
    for (const auto& [id, c] : x)
        if (monos_[size_t(id)].deg != d) return false;
    return true;
}

int Algebra::degree_of(const Elem& x) const {
    if (x.empty()) return -1;
    if (!is_homogeneous(x)) throw std::invalid_argument("inhomogeneous element");
    return monos_[size_t(x[0].first)].deg;
}

Elem Algebra::component(const Elem& x, int deg) const {
    Elem out;
    for (const auto& [id, c] : x)
        if (monos_[size_t(id)].deg == deg) out.push_back({id, c});
    return out;
}

nlohmann::json Algebra::elem_to_json(const Elem& x) const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [id, c] : x) {
        const Mono& m = monos_[size_t(id)];
        nlohmann::json t;
        t["coeff"] = rat_str(c);
        t["src"] = m.src;
        t["dst"] = m.dst;
        nlohmann::json p = nlohmann::json::array();
        for (uint8_t a : m.arrows) p.push_back(q_.arrows[a].name);
        t["path"] = p;
        terms.push_back(t);
    }
    return nlohmann::json{{"monomials", terms}};
}

Elem Algebra::elem_from_json(const nlohmann::json& j) const {
    Elem out;
    for (const auto& t : j.at("monomials")) {
        Rat c = rat_parse(t.at("coeff").get<std::string>());
        int src = t.at("src").get<int>();
        std::vector<int> arrows;
        for (const auto& nm : t.at("path")) {
            int a = q_.arrow_by_name(nm.get<std::string>());
            if (a < 0) throw std::invalid_argument("unknown arrow in element");
            arrows.push_back(a);
        }
        elem_axpy(out, c, path(src, arrows));
    }
    return out;
}

std::string Algebra::elem_str(const Elem& x) const {
    if (x.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [id, c] : x) {
        Rat a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) s += rat_str(a) + " ";
        s += mono_str(id);
    }
    return s;
}

std::string Algebra::elem_latex(const Elem& x) const {
    if (x.empty()) return "0";
    auto mono_tex = [&](int id) {
        const Mono& m = monos_[size_t(id)];
        if (m.arrows.empty()) return "e_{" + std::to_string(m.src) + "}";
        std::string s;
        for (uint8_t a : m.arrows) {
            const Arrow& ar = q_.arrows[a];
            std::string base = ar.name.substr(0, ar.name.size() - (ar.starred ? 1 : 0));
            s += base.substr(0, 1) + "_{" + base.substr(1) + "}";
            if (ar.starred) s += "^{*}";
        }
        return s;
    };
    std::string s;
    bool first = true;
    for (const auto& [id, c] : x) {
        Rat a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) {
            if (denominator(a) == 1) s += numerator(a).str() + " ";
            else s += "\\tfrac{" + numerator(a).str() + "}{" + denominator(a).str() + "} ";
        }
        s += mono_tex(id);
    }
    return s;
}

} // namespace ppa
