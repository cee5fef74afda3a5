#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace reyn {

// Exact rational scalar with unbounded integer parts. Always kept reduced,
// denominator positive; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Accepts an optionally signed integer or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("bad rational: \"" + text + "\""); };
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(text)) bad();
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) bad();
    Integer d(den);
    if (d == 0) bad();
    return Rational(Integer(num), d);
}

}  // namespace reyn
