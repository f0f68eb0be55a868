/**
 * Exact rational scalars.
 *
 * Every length, threshold, and coordinate in this library is an exact
 * rational number; no floating point appears anywhere in the core.  The
 * scalar type is boost::multiprecision::cpp_rational, which keeps values
 * in lowest terms with a positive denominator and provides an exact total
 * order.  This header adds the "p/q" string conversions used by all of the
 * external (JSON / report) formats.
 */

#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace starph {

typedef boost::multiprecision::cpp_int Integer;
typedef boost::multiprecision::cpp_rational Rational;

/**
 * Render a rational as a string: "p/q" when the denominator is not one,
 * plain "p" otherwise.  Never a decimal expansion.
 *
 * @param x Value to render.
 * @returns String form of `x`.
 */
inline std::string rational_to_string(const Rational& x)
{
    return x.str();
}

/**
 * Parse a rational from a "p" or "p/q" string.
 *
 * Whitespace is not tolerated; the denominator must be a nonzero integer.
 *
 * @param s Input text.
 * @returns The parsed value, or std::nullopt if `s` is malformed (including
 *          a zero denominator).
 */
inline std::optional<Rational> parse_rational(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    const auto slash = s.find('/');
    try
    {
        if (slash == std::string::npos)
        {
            return Rational(Integer(s));
        }
        if (slash == 0 || slash + 1 >= s.size())
            return std::nullopt;
        Integer p(s.substr(0, slash));
        Integer q(s.substr(slash + 1));
        if (q == 0)
            return std::nullopt;
        return Rational(p, q);
    }
    catch (const std::exception&)
    {
        return std::nullopt;
    }
}

}   // namespace starph
