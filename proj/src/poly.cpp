#include "ppa/poly.hpp"

#include <stdexcept>

namespace ppa {

long long poly_eval1(const IPoly& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
}

std::pair<long long, long long> poly_eval_i(const IPoly& p) {
    // i^d cycles 1, i, -1, -i
    long long re = 0, im = 0;
    for (size_t d = 0; d < p.size(); ++d) {
        switch (d % 4) {
            case 0: re += p[d]; break;
            case 1: im += p[d]; break;
            case 2: re -= p[d]; break;
            case 3: im -= p[d]; break;
        }
    }
    return {re, im};
}

IPoly poly_derivative(const IPoly& p) {
    IPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back((long long)k * p[k]);
    return d;
}

PolyMat hilbert_closed(const RootData& rd) {
    int r = int(rd.adjacency.size());
    int h = rd.h;
    using IMat = std::vector<std::vector<long long>>;
    IMat prev(r, std::vector<long long>(r, 0)), cur(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) prev[i][i] = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cur[i][j] = rd.adjacency[i][j];

    PolyMat H(r, std::vector<IPoly>(r, IPoly(h - 1, 0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) H[i][j][0] = prev[i][j];

    for (int d = 1; d <= h - 1; ++d) {
        if (d <= h - 2)
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) H[i][j][d] = cur[i][j];
        // advance: next = C*cur - prev
        IMat next(r, std::vector<long long>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                long long s = -prev[i][j];
                for (int k = 0; k < r; ++k) s += (long long)rd.adjacency[i][k] * cur[k][j];
                next[i][j] = s;
            }
        prev = cur;
        cur = next;
        if (d == h - 2) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (prev[i][j] != rd.perm[i][j])
                        throw std::logic_error("Hilbert series: S_{h-2} != P");
        }
        if (d == h - 1) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (prev[i][j] != 0)
                        throw std::logic_error("Hilbert series: S_{h-1} != 0");
        }
    }
    return H;
}

} // namespace ppa
