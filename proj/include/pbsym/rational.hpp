#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pbsym/errors.hpp"

namespace pbsym {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// (2m-1)!! with the empty product equal to 1.
inline Integer double_factorial_odd(unsigned m) {
    Integer f = 1;
    for (unsigned k = 1; k <= m; ++k) f *= 2 * k - 1;
    return f;
}

inline Rational pow_rational(const Rational& r, long k) {
    if (k == 0) return Rational(1);
    if (r == 0 && k < 0) throw value_error("zero raised to a negative power");
    Rational base = k > 0 ? r : Rational(1) / r;
    Rational out  = 1;
    for (long i = 0; i < (k > 0 ? k : -k); ++i) out *= base;
    return out;
}

// Parses "p", "-p", "p/q" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw value_error("not a rational literal: '" + text + "'"); };
    std::string s = text;
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer p(s.substr(0, slash));
        Integer q(s.substr(slash + 1));
        if (q == 0) throw value_error("zero denominator in '" + text + "'");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return 0;  // unreachable
}

inline std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (!is_integer(r)) s += "/" + den(r).str();
    return s;
}

}
