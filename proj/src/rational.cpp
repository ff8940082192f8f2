#include "pricing/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pricing {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
      throw ParseError("malformed rational literal: " + s);
    }
    Integer p(num), q(den);
    if (q == 0) throw ParseError("zero denominator in rational literal: " + s);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    if (frac.empty()) frac = "0";
    if (!is_integer_token(whole) || !is_integer_token(frac) || frac[0] == '-' ||
        frac[0] == '+') {
      throw ParseError("malformed decimal literal: " + s);
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w(whole), f(frac);
    Integer p = w * scale + (negative ? -f : f);
    Rational r(p, scale);
    r.canonicalize();
    return r;
  }

  if (!is_integer_token(s)) throw ParseError("malformed rational literal: " + s);
  return Rational(Integer(s));
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string decimal_string(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round(|r| * scale), half away from zero
  Integer num = abs(r.get_num()) * scale;
  const Integer& den = r.get_den();
  Integer q = num / den;
  Integer rem = num % den;
  if (2 * rem >= den) q += 1;
  Integer whole = q / scale;
  Integer frac = q % scale;
  std::string out;
  if (sgn(r) < 0 && (whole != 0 || frac != 0)) out += "-";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Rational checked_div(const Rational& a, const Rational& b) {
  if (b == 0) throw ParseError("division by zero");
  return a / b;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  bool invert = exponent < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exponent)
                           : static_cast<unsigned long>(exponent);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  if (invert) {
    if (r == 0) throw ParseError("zero base with negative exponent");
    return Rational(1) / r;
  }
  return r;
}

std::string join_rationals(const std::vector<Rational>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << to_string(v[i]);
  }
  return os.str();
}

}  // namespace pricing
