#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ppa {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p" or "p/q", always in lowest terms with q > 0.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

} // namespace ppa
