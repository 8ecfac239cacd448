#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mrb {

/// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0)
            throw std::invalid_argument("nonpositive denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    }
}

} // namespace mrb
