#include "qes/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "qes/errors.hpp"

namespace qes {

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ParameterError("cannot represent a non-finite value as a rational");
  Rational q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) throw ParameterError("malformed exponent");
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw ParameterError("malformed decimal");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw ParameterError("malformed number");
    digits = std::string(s);
  }
  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(mantissa * ten_power) : Rational(mantissa, ten_power);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParameterError("empty rational literal");
  try {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      std::string_view num = trim(s.substr(0, slash));
      std::string_view den = trim(s.substr(slash + 1));
      std::string_view num_digits = num;
      if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
        num_digits.remove_prefix(1);
      if (!all_digits(num_digits) || !all_digits(den))
        throw ParameterError("malformed rational '" + std::string(text) + "'");
      mpz_class p(std::string(num_digits), 10);
      mpz_class q(std::string(den), 10);
      if (q == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
      if (num.front() == '-') p = -p;
      Rational r(p, q);
      r.canonicalize();
      return r;
    }
    return parse_decimal(s);
  } catch (const ParameterError&) {
    throw;
  } catch (const std::exception&) {
    throw ParameterError("malformed rational '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace qes
