#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace osp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

inline bool is_positive_integer(const Rat& r) { return is_integer(r) && r > 0; }

// membership in 2N = {0,2,4,...}
inline bool is_even_nonneg_integer(const Rat& r) {
    return is_integer(r) && r >= 0 && numerator(r) % 2 == 0;
}

// membership in 2N+1 = {1,3,5,...}
inline bool is_odd_positive_integer(const Rat& r) {
    return is_integer(r) && r > 0 && numerator(r) % 2 != 0;
}

// membership in -N+ = {-1,-2,...}
inline bool is_negative_integer(const Rat& r) { return is_integer(r) && r < 0; }

// membership in -2N-1 = {-1,-3,-5,...}
inline bool is_negative_odd_integer(const Rat& r) {
    return is_integer(r) && r < 0 && numerator(r) % 2 != 0;
}

inline std::string to_string(const Rat& r) { return r.str(); }

inline std::string to_string(const Int& n) { return n.str(); }

// Parses "p", "-p" or "p/q". Floats and anything else are rejected.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto bad = [&]() { throw std::invalid_argument("malformed rational literal: \"" + s + "\""); };
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '-') {
            if (i != 0 && (slash == std::string::npos || i != slash + 1)) bad();
        } else if (c == '/') {
            if (slash != std::string::npos || i == 0 || i + 1 == s.size()) bad();
            slash = i;
        } else if (c < '0' || c > '9') {
            bad();
        }
    }
    if (s == "-" || s.back() == '-') bad();
    Int num, den = 1;
    if (slash == std::string::npos) {
        num = Int(s);
    } else {
        num = Int(s.substr(0, slash));
        den = Int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
    }
    return Rat(num, den);
}

}  // namespace osp
