#include "twcech/coefficients.hpp"

#include <algorithm>
#include <cctype>

namespace twcech {

Integer floor(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

std::ostream& operator<<(std::ostream& os, const Circle& c) {
  return os << to_string(c);
}

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::string to_string(const Circle& c) {
  return to_string(c.value()) + " mod 1";
}

Rational parse_rational(const std::string& text) {
  std::string t = text;
  const auto mod = t.find("mod");
  if (mod != std::string::npos) t = t.substr(0, mod);
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](unsigned char ch) { return std::isspace(ch); }),
          t.end());
  if (t.empty()) throw SchemaError("empty rational literal '" + text + "'");
  const auto slash = t.find('/');
  auto parse_int = [&](const std::string& digits) {
    std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (start == digits.size() ||
        !std::all_of(digits.begin() + start, digits.end(),
                     [](unsigned char ch) { return std::isdigit(ch); }))
      throw SchemaError("malformed rational literal '" + text + "'");
    return Integer(digits[0] == '+' ? digits.substr(1) : digits);
  };
  if (slash == std::string::npos) return Rational(parse_int(t));
  const Integer num = parse_int(t.substr(0, slash));
  const Integer den = parse_int(t.substr(slash + 1));
  if (den == 0) throw SchemaError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace twcech
