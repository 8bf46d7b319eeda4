#include "frds/rational.hpp"

#include <cctype>

#include "frds/errors.hpp"

namespace frds {

std::string format_fixed(const Rational& r, int places) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);  // > 0 by cpp_rational invariant
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  BigInt rem = scaled % den;
  if (rem * 2 >= den) q += 1;  // half away from zero

  BigInt whole = q / scale;
  BigInt frac = q % scale;

  std::string out;
  if (negative && q != 0) out += '-';
  out += whole.str();
  if (places > 0) {
    std::string f = frac.str();
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - f.size(), '0');
    out += f;
  }
  return out;
}

Rational rational_from_decimal(const std::string& text) {
  if (text.empty()) throw ValidationError("empty decimal literal");
  std::size_t i = 0;
  BigInt whole = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    whole = whole * 10 + (text[i] - '0');
    any_digit = true;
    ++i;
  }
  BigInt frac = 0;
  BigInt den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac = frac * 10 + (text[i] - '0');
      den *= 10;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit || i != text.size())
    throw ValidationError("not a decimal literal: '" + text + "'");
  return Rational(whole * den + frac, den);
}

}  // namespace frds
