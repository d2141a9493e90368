#include "cookie/number.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace cookie {

namespace {

double checked(double v) {
  if (!std::isfinite(v)) throw NumericError("non-finite float result");
  return v;
}

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Parses [+-]digits[.digits][(e|E)[+-]digits] into an exact rational.
mpq_class parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw NumericError("malformed exponent in number");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw NumericError("malformed decimal number");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw NumericError("malformed number");
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return canonical(mpq_class(mantissa * scale, 1));
  return canonical(mpq_class(mantissa, scale));
}

}  // namespace

Number::Number(double v) : value_(checked(v)) {}

Number::Number(mpq_class q) : value_(canonical(std::move(q))) {}

Number Number::exact(long long num, long long den) {
  if (den == 0) throw NumericError("zero denominator");
  mpz_class n, d;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
  mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
  return Number(mpq_class(n, d));
}

Number Number::exact(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw NumericError("zero denominator");
  return Number(mpq_class(num, den));
}

Number Number::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw NumericError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_decimal(text.substr(0, slash));
    mpq_class den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw NumericError("zero denominator");
    return Number(mpq_class(num / den));
  }
  return Number(parse_decimal(text));
}

double Number::to_double() const {
  if (auto d = std::get_if<double>(&value_)) return *d;
  return std::get<mpq_class>(value_).get_d();
}

mpq_class Number::to_rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::get<double>(value_));
  if (ec != std::errc()) throw NumericError("float to text conversion failed");
  return parse_decimal(std::string_view(buf.data(), static_cast<std::size_t>(end - buf.data())));
}

Number Number::to_mode(NumericMode m) const {
  if (m == mode()) return *this;
  if (m == NumericMode::Float) return Number(to_double());
  return Number(to_rational());
}

std::string Number::str() const { return str(17); }

std::string Number::str(int digits) const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", digits, std::get<double>(value_));
  return buf.data();
}

bool Number::is_integer() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_den() == 1;
  double d = std::get<double>(value_);
  return std::floor(d) == d;
}

bool Number::is_zero() const { return sign() == 0; }

int Number::sign() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

Number Number::floor() const {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
    return Number(mpq_class(f));
  }
  return Number(std::floor(std::get<double>(value_)));
}

Number Number::ceil() const {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
    return Number(mpq_class(c));
  }
  return Number(std::ceil(std::get<double>(value_)));
}

long long Number::to_integer() const {
  if (!is_integer()) throw NumericError("value is not an integer: " + str());
  if (auto q = std::get_if<mpq_class>(&value_)) {
    if (!q->get_num().fits_slong_p()) throw NumericError("integer out of range: " + str());
    return q->get_num().get_si();
  }
  double d = std::get<double>(value_);
  if (std::fabs(d) > 9.0e18) throw NumericError("integer out of range: " + str());
  return static_cast<long long>(d);
}

Number Number::operator-() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return Number(mpq_class(-*q));
  return Number(-std::get<double>(value_));
}

#define COOKIE_NUMBER_OP(OP)                                                  \
  Number& Number::operator OP##=(const Number& o) {                           \
    if (is_exact() && o.is_exact()) {                                         \
      auto& a = std::get<mpq_class>(value_);                                  \
      a OP##= std::get<mpq_class>(o.value_);                                  \
    } else {                                                                  \
      value_ = checked(to_double() OP o.to_double());                         \
    }                                                                         \
    return *this;                                                             \
  }

COOKIE_NUMBER_OP(+)
COOKIE_NUMBER_OP(-)
COOKIE_NUMBER_OP(*)
#undef COOKIE_NUMBER_OP

Number& Number::operator/=(const Number& o) {
  if (o.is_zero()) throw NumericError("division by zero");
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  } else {
    value_ = checked(to_double() / o.to_double());
  }
  return *this;
}

int compare(const Number& a, const Number& b) {
  auto qa = a.rational_ptr();
  auto qb = b.rational_ptr();
  if (qa && qb) return cmp(*qa, *qb);
  if (!qa && !qb) {
    double x = a.to_double(), y = b.to_double();
    return (x > y) - (x < y);
  }
  // Exact comparison of a double against a rational.
  mpq_class fa = qa ? *qa : mpq_class(a.to_double());
  mpq_class fb = qb ? *qb : mpq_class(b.to_double());
  return cmp(fa, fb);
}

Number pow_int(const Number& base, std::size_t n) {
  if (auto q = base.rational_ptr()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q->get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), q->get_den_mpz_t(), n);
    return Number::exact(num, den);
  }
  return Number(std::pow(base.to_double(), static_cast<double>(n)));
}

Number min(const Number& a, const Number& b) { return b < a ? b : a; }
Number max(const Number& a, const Number& b) { return a < b ? b : a; }
Number abs(const Number& a) { return a.sign() < 0 ? -a : a; }

int compare_tol(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return compare(a, b);
  double x = a.to_double(), y = b.to_double();
  double tol = std::max(kAbsTol, kRelTol * std::max(std::fabs(x), std::fabs(y)));
  if (x < y - tol) return -1;
  if (x > y + tol) return 1;
  return 0;
}

std::string to_string(NumericMode m) { return m == NumericMode::Exact ? "exact" : "float"; }

}  // namespace cookie
