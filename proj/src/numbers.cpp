#include "spherical/numbers.hpp"

#include <cctype>

namespace spherical {

std::string to_string(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) throw InvalidInput("bad rational: " + text);
    BigInt den(b);
    if (den == 0) throw InvalidInput("zero denominator: " + text);
    out = Rational(BigInt(a), den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string a = s.substr(0, dot), b = s.substr(dot + 1);
    if (a.empty()) a = "0";
    if (!all_digits(a) || (!b.empty() && !all_digits(b)))
      throw InvalidInput("bad rational: " + text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < b.size(); ++i) scale *= 10;
    out = Rational(BigInt(a + b), scale);
  } else {
    if (!all_digits(s)) throw InvalidInput("bad rational: " + text);
    out = Rational(BigInt(s));
  }
  return neg ? Rational(-out) : out;
}

}  // namespace spherical
