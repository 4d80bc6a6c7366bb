#include "ppa/verify.hpp"

#include <random>
#include <sstream>

namespace ppa {

QMat printed_heta(const Algebra& A) {
    const DynkinQuiver& q = A.quiver();
    const std::vector<int>& F = A.roots().fixed;
    int m = int(F.size());
    QMat H(m, m);
    if (q.family == Family::D && q.n % 2 == 1) {
        int n = q.n;
        auto entry = [&](int k, int l) -> Rat {
            if (k > l) std::swap(k, l);
            if (l <= n - 1) return (k % 2 == 1 && l % 2 == 1) ? Rat(2) : Rat(0);
            if (k <= n - 1) return (k % 2 == 1) ? Rat(1) : Rat(0);
            if (k == l) return Rat(n + 1, 2);
            return Rat(-(n - 1), 2);
        };
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) H.at(i, j) = entry(F[size_t(i)], F[size_t(j)]);
    } else if (q.family == Family::D) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (F[size_t(i)] % 2 == 1 && F[size_t(j)] % 2 == 1) H.at(i, j) = Rat(2);
    } else if (q.n == 7) {
        const int row13[7] = {3, 0, 3, 0, 0, 0, -3};
        for (int j = 0; j < 7; ++j) {
            H.at(0, j) = Rat(row13[j]);
            H.at(2, j) = Rat(row13[j]);
            H.at(6, j) = Rat(-row13[j]);
        }
    }
    // E6 and E8: zero
    return H;
}

QMat printed_kappa(const Algebra& A) {
    const DynkinQuiver& q = A.quiver();
    if (q.family == Family::D) {
        int n = q.n;
        const std::vector<int>& F = A.roots().fixed;
        int m = int(F.size());
        auto entry = [&](int k, int l) -> Rat {
            if (k <= n - 1 && l <= n - 1) {
                bool ko = k % 2 == 1, lo = l % 2 == 1;
                if (ko && lo) return Rat(n - k + l - 1);
                if (k <= l) {
                    if (ko) return Rat(l - n); // l even
                    if (lo) return Rat(-k);    // k even
                    return Rat(0);
                }
                if (ko) return Rat(l);     // l even
                if (lo) return Rat(n - k); // k even
                return Rat(0);
            }
            if (k <= n - 1) // l in {n, n+1}
                return (k % 2 == 1) ? Rat(n) - Rat(k + 1, 2) : Rat(-k, 2);
            if (l <= n - 1) // k in {n, n+1}
                return (l % 2 == 1) ? Rat(n) - Rat(l - 1, 2) : Rat(l, 2);
            if (k == l) return Rat(n * n - 1, 4);
            return -Rat((n - 1) * (n - 1), 4);
        };
        QMat K(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) K.at(i, j) = entry(F[size_t(i)], F[size_t(j)]);
        return K;
    }
    if (q.n == 7) {
        const int k7[7][7] = {{12, 6, 9, 3, 0, 3, -9},   {-6, 0, 3, 0, 0, 0, -3},
                              {15, -3, 12, 3, 0, 3, -12}, {-3, 0, -3, 0, 0, 0, -6},
                              {0, 0, 0, 0, 0, -9, 0},     {-3, 0, -3, 0, 9, 0, -6},
                              {-15, 3, -12, 6, 0, 6, 12}};
        QMat K(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) K.at(i, j) = Rat(k7[i][j]);
        return K;
    }
    return QMat(0, 0);
}

QMat printed_mbeta(const Algebra& A) {
    const DynkinQuiver& q = A.quiver();
    int n = q.n;
    if (q.family == Family::D && n % 2 == 1) {
        QMat M(n - 1, n - 1); // I' = {2..n}
        auto idx = [](int v) { return v - 2; };
        for (int i = 2; i <= n; ++i) {
            if (i == n) {
                for (int j = 2; j <= n - 1; j += 2) M.at(idx(j), idx(i)) = Rat(-n);
            } else if (i % 2 == 1) {
                for (int j = 2; j <= i - 1; j += 2) M.at(idx(j), idx(i)) = Rat(-n);
            } else {
                for (int j = i + 1; j <= n - 2; j += 2) M.at(idx(j), idx(i)) = Rat(n);
                M.at(idx(n), idx(i)) = Rat(n);
            }
        }
        return M;
    }
    if (q.family == Family::D) {
        QMat M(n - 2, n - 2); // I' = {2..n-1}
        auto idx = [](int v) { return v - 2; };
        for (int i = 2; i <= n - 1; ++i) {
            if (i % 2 == 1)
                for (int j = 2; j <= i - 1; j += 2) M.at(idx(j), idx(i)) = Rat(-n);
            else
                for (int j = i + 1; j <= n - 1; j += 2) M.at(idx(j), idx(i)) = Rat(n);
        }
        return M;
    }
    if (n == 6) {
        QMat M(2, 2);
        M.at(0, 1) = Rat(-6);
        M.at(1, 0) = Rat(6);
        return M;
    }
    if (n == 7) {
        const int m7[6][6] = {{0, 9, 0, 9, 0, 9},    {-9, 0, 0, 0, 0, 0}, {0, 0, 0, 9, 0, 9},
                              {-9, 0, -9, 0, 0, 0},  {0, 0, 0, 0, 0, -9}, {-9, 0, -9, 0, 9, 0}};
        QMat M(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) M.at(i, j) = Rat(m7[i][j]);
        return M;
    }
    const int m8[8][8] = {{0, 15, 0, 15, 0, 0, 0, -15}, {-15, 0, 0, 0, 0, 0, 0, 0},
                          {0, 0, 0, 15, 0, 0, 0, -15},  {-15, 0, -15, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 0, -15},   {0, 0, 0, 0, 0, 0, -15, 0},
                          {0, 0, 0, 0, 0, 15, 0, -15},  {15, 0, 15, 0, 15, 0, 15, 0}};
    QMat M(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) M.at(i, j) = Rat(m8[i][j]);
    return M;
}

namespace {

bool same_mat(const QMat& x, const QMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

std::string dims_str(const std::map<int, int>& d) {
    std::ostringstream out;
    for (auto [k, v] : d) out << " " << k << ":" << v;
    return out.str();
}

Elem random_elem(const Algebra& A, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, A.dim() - 1);
    std::uniform_int_distribution<int> coef(-4, 4);
    Elem x;
    for (int t = 0; t < 3; ++t) {
        int c = coef(rng);
        if (c != 0) x = elem_add(x, elem_scale({{pick(rng), Rat(1)}}, Rat(c)));
    }
    return x;
}

} // namespace

std::vector<CheckResult> verify_quiver(const Hochschild& H, int max_degree) {
    const Algebra& A = H.algebra();
    const DynkinQuiver& q = A.quiver();
    int h = A.roots().h;
    int r = A.num_vertices();
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, detail});
    };

    {
        long long expect = (long long)r * h * (h + 1) / 6;
        add("dimension formula", A.dim() == expect,
            "dim A = " + std::to_string(A.dim()) + ", r h (h+1)/6 = " + std::to_string(expect));
    }

    {
        std::mt19937 rng(7);
        bool ok = true;
        for (const Arrow& a : q.arrows) {
            Elem e = A.eta(A.eta(A.arrow_elem(a.id)));
            ok &= (e == A.arrow_elem(a.id));
        }
        for (int t = 0; t < 50 && ok; ++t) {
            Elem x = random_elem(A, rng), y = random_elem(A, rng);
            ok &= (A.pair(x, y) == A.pair(y, A.eta(x)));
        }
        for (int t = 0; t < 50 && ok; ++t) {
            int p = std::uniform_int_distribution<int>(0, A.dim() - 1)(rng);
            int s = std::uniform_int_distribution<int>(0, A.dim() - 1)(rng);
            Rat expect((p == s) ? 1 : 0);
            ok &= (A.pair({{p, Rat(1)}}, A.dual(s)) == expect);
        }
        add("frobenius pairing", ok);
    }

    {
        const Center& C = H.center();
        bool ok = C.hilbert == C.hilbert_expected;
        for (const auto& [k, z] : C.z) ok &= is_central(A, z) && (k == 0 || A.degree_of(z) == k);
        add("center", ok, "degrees" + dims_str([&] {
                std::map<int, int> d;
                for (int k : C.z_degrees) d[k] = 1;
                return d;
            }()));
    }

    {
        bool ok = true;
        std::string bad;
        int top = (max_degree < 0) ? 6 : max_degree;
        for (int i = 0; i <= top && ok; ++i) {
            auto got = H.hh_dims(i), want = H.expected_dims(i);
            if (got != want) {
                ok = false;
                bad = "HH^" + std::to_string(i) + " got" + dims_str(got) + " want" + dims_str(want);
            }
        }
        add("cohomology dimensions", ok, bad);
    }

    {
        bool ok = true;
        for (int i = 0; i <= 6 && ok; ++i) {
            int lo = -H.offset(i), hi = A.top_degree() - H.offset(i);
            for (int delta = lo; delta <= hi && ok; ++delta) ok = H.check_dd(i, delta);
        }
        add("d squared zero", ok);
    }

    {
        bool ok = true;
        std::string detail;
        try {
            H.check_named();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        add("named classes", ok, detail);
    }

    {
        bool ok = true;
        for (int k : H.center().z_degrees) {
            ok &= H.pair14(H.named("theta" + std::to_string(k)).val,
                           H.named("zeta" + std::to_string(k)).val) == Rat(1);
        }
        ok &= H.pair56(H.named("psi0").val, H.named("phi0(z0)").val) == Rat(1);
        for (int i : H.quotient_reps())
            for (int j : H.quotient_reps())
                ok &= H.pair56(H.named("eps" + std::to_string(i)).val,
                               H.named("phi0(w" + std::to_string(j) + ")").val) ==
                      Rat(i == j ? 1 : 0);
        for (int i : H.orbit_reps())
            for (int j : H.orbit_reps())
                ok &= H.pair23(H.named("f" + std::to_string(j)).val,
                               H.named("h" + std::to_string(i)).val) == Rat(i == j ? 1 : 0);
        add("duality normalizations", ok);
    }

    {
        QMat he = H.h_eta();
        QMat pr = printed_heta(A);
        bool ok = (pr.rows == 0) || same_mat(he, pr);
        QMat ka = kappa_matrix(H);
        QMat kp = printed_kappa(A);
        ok &= (kp.rows == 0) || same_mat(ka, kp);
        if (q.family == Family::E && q.n >= 7) {
            ok &= same_mat(h_eta_analytic(H), he);
            ok &= same_mat(kappa_analytic(H), ka);
        }
        add("eta trace matrices", ok);
    }

    {
        CupTables t = compute_products(H);
        bool ok = true;
        std::string detail;
        int rm = int(H.orbit_reps().size());
        if (rm > 0) {
            ok &= same_mat(t.malpha, transpose(t.malpha));
            ok &= rank(t.malpha) == rm;
            for (int k : H.center().z_degrees)
                if (k > 0)
                    for (int v : H.orbit_reps()) {
                        auto prod = cup_hh0(H, H.named("z" + std::to_string(k)).val, 3,
                                            theta_f_raw(H, v));
                        for (const Elem& c : prod) ok &= c.empty();
                    }
        }
        ok &= same_mat(t.mbeta, mat_scale(transpose(t.mbeta), Rat(-1)));
        ok &= rank(t.mbeta) == t.mbeta.rows;
        ok &= same_mat(t.mbeta, mbeta_closed_form(H));
        QMat mp = printed_mbeta(A);
        ok &= (mp.rows == 0) || same_mat(t.mbeta, mp);
        size_t chains = 0;
        for (const ProductRow& row : t.rows) {
            if (row.provenance == "chain-formula") ++chains;
            ok &= (row.provenance == "chain-formula" || row.provenance == "associativity" ||
                   row.provenance == "degree-zero" || row.provenance == "paper-asserted");
        }
        if (!ok) detail = "product table inconsistency";
        add("cup products", ok,
            detail.empty() ? std::to_string(t.rows.size()) + " pairs, " +
                                 std::to_string(chains) + " chain-computed"
                           : detail);
    }

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& c : results)
        if (!c.pass) return false;
    return true;
}

} // namespace ppa
