#ifndef FRDS_RATIONAL_HPP
#define FRDS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace frds {

// Exact arithmetic for the span metrics. Scores are kept as rationals end to
// end and only turned into decimals when a report is written.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Renders r as a fixed-point decimal with `places` fraction digits,
// rounding half away from zero. No floating point involved.
std::string format_fixed(const Rational& r, int places = 6);

// Parses a non-negative decimal literal such as "0.25" into an exact
// rational (1/4). Throws ValidationError on anything else.
Rational rational_from_decimal(const std::string& text);

}  // namespace frds

#endif
