#include "ppa/parser.hpp"

#include <cctype>

namespace ppa {

namespace {

struct Parser {
    const Algebra& A;
    const std::string& s;
    size_t p = 0;

    Parser(const Algebra& a, const std::string& text) : A(a), s(text) {}

    void skip() {
        while (p < s.size() && std::isspace(unsigned(s[p]))) ++p;
    }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }
    char peek() {
        skip();
        return p < s.size() ? s[p] : '\0';
    }

    long long digits() {
        skip();
        if (p >= s.size() || !std::isdigit(unsigned(s[p]))) throw ParseError("expected a number", p);
        long long v = 0;
        while (p < s.size() && std::isdigit(unsigned(s[p]))) v = v * 10 + (s[p++] - '0');
        return v;
    }

    Elem expr() {
        Elem acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        elem_axpy(acc, Rat(neg ? -1 : 1), term());
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++p;
                elem_axpy(acc, Rat(c == '-' ? -1 : 1), term());
            } else {
                break;
            }
        }
        return acc;
    }

    static bool single_mono(const Elem& e) { return e.size() == 1 && e[0].second == 1; }

    Elem term() {
        size_t fpos = p;
        Elem acc = factor();
        for (;;) {
            char c = peek();
            if (c == '\0' || c == '+' || c == '-' || c == ')') break;
            size_t gpos = p;
            Elem f = factor();
            if (single_mono(acc) && single_mono(f)) {
                const Mono& l = A.mono(acc[0].first);
                const Mono& r = A.mono(f[0].first);
                if (l.dst != r.src)
                    throw ParseError("non-composable juxtaposition: factor ending at vertex " +
                                         std::to_string(l.dst) + " followed by one starting at vertex " +
                                         std::to_string(r.src),
                                     gpos);
            }
            acc = A.mul(acc, f);
            fpos = gpos;
        }
        (void)fpos;
        return acc;
    }

    Elem factor() {
        Elem base = atom();
        if (peek() == '^') {
            ++p;
            long long k = digits();
            Elem out = A.one();
            for (long long i = 0; i < k; ++i) out = A.mul(out, base);
            return out;
        }
        return base;
    }

    Elem atom() {
        skip();
        if (p >= s.size()) throw ParseError("unexpected end of input", p);
        size_t at = p;
        char c = s[p];
        if (c == '(') {
            ++p;
            Elem e = expr();
            if (!eat(')')) throw ParseError("missing )", p);
            return e;
        }
        if (std::isdigit(unsigned(c))) {
            long long num = digits();
            if (p < s.size() && s[p] == '/') {
                ++p;
                long long den = digits();
                if (den == 0) throw ParseError("division by zero", at);
                return elem_scale(A.one(), Rat(num) / den);
            }
            return elem_scale(A.one(), Rat(num));
        }
        if (c == 'e' || c == 'a' || c == 'x' || c == 'w') {
            ++p;
            long long k = digits();
            if (c == 'a') {
                std::string name = "a" + std::to_string(k);
                if (p < s.size() && s[p] == '*') {
                    ++p;
                    name += "*";
                }
                int id = A.quiver().arrow_by_name(name);
                if (id < 0) throw ParseError("unknown arrow " + name, at);
                return A.arrow_elem(id);
            }
            if (c == 'x') {
                std::string n1 = "a" + std::to_string(k) + "*", n2 = "a" + std::to_string(k);
                int i1 = A.quiver().arrow_by_name(n1), i2 = A.quiver().arrow_by_name(n2);
                if (i1 < 0 || i2 < 0) throw ParseError("unknown arrow a" + std::to_string(k), at);
                return A.mul(A.arrow_elem(i1), A.arrow_elem(i2));
            }
            if (k < 1 || k > A.num_vertices())
                throw ParseError("vertex out of range", at);
            if (c == 'e') return A.idem(int(k));
            return A.omega(int(k));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", p);
    }
};

} // namespace

Elem parse_element(const Algebra& A, const std::string& text) {
    Parser pr(A, text);
    Elem e = pr.expr();
    pr.skip();
    if (pr.p != text.size()) throw ParseError("trailing input", pr.p);
    return e;
}

} // namespace ppa
