#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace booktri {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor of p/q toward minus infinity (cpp_int division truncates toward zero).
inline Int floor_div(const Int& p, const Int& q) {
    Int quo = p / q, rem = p % q;
    if (rem != 0 && ((rem < 0) != (q < 0))) --quo;
    return quo;
}

inline Int rfloor(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

// Renders "p" for integers, "p/q" otherwise.
inline std::string rational_str(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

// Accepts "12", "-7/2", "0.6", "3.25e0" is NOT supported; plain decimal or fraction only.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto bad = std::nullopt;
    size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) return bad;
            return Rational(num, den);
        }
        size_t dot = text.find('.');
        if (dot == std::string::npos) return Rational(Int(text));
        std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.empty()) return bad;
        for (char c : frac)
            if (c < '0' || c > '9') return bad;
        bool neg = !whole.empty() && whole[0] == '-';
        if (whole == "-" || whole.empty()) whole = neg ? "-0" : "0";
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational r = Rational(Int(whole));
        Rational f = Rational(Int(frac), scale);
        return neg ? Rational(r - f) : Rational(r + f);
    } catch (const std::exception&) {
        return bad;
    }
}

inline int64_t to_int64(const Int& x) { return static_cast<int64_t>(x); }

// Conversion for rationals known to be integers; throws otherwise.
inline int64_t to_int64(const Rational& x) {
    if (!is_integer(x)) throw std::invalid_argument("expected an integer value");
    return to_int64(numerator(x));
}

}  // namespace booktri
