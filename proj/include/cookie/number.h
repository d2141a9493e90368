#pragma once

// Dual numeric tower: every quantity is either an exact rational (GMP mpq)
// or a finite IEEE double. Mixed arithmetic degrades to double.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace cookie {

enum class NumericMode { Float, Exact };

// Relative/absolute tolerance used for every float-mode ordering decision.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Number {
 public:
  Number() : value_(0.0) {}
  Number(double v);  // NOLINT(google-explicit-constructor)
  Number(int v) : Number(static_cast<double>(v)) {}  // NOLINT
  explicit Number(mpq_class q);

  static Number exact(long long num, long long den = 1);
  static Number exact(const mpz_class& num, const mpz_class& den = 1);
  // Accepts "p", "p/q", decimal "1.25" or "1e3". Always exact.
  static Number parse(std::string_view text);

  NumericMode mode() const {
    return std::holds_alternative<double>(value_) ? NumericMode::Float
                                                  : NumericMode::Exact;
  }
  bool is_exact() const { return mode() == NumericMode::Exact; }

  double to_double() const;
  // Exact value; a float is converted through its shortest round-trip
  // decimal so 1.2 becomes 6/5 rather than the binary expansion.
  mpq_class to_rational() const;
  Number to_mode(NumericMode m) const;

  // Exact mode: "p" or "p/q". Float mode: 17 significant digits.
  std::string str() const;
  // Same as str() but floats use `digits` significant digits.
  std::string str(int digits) const;

  bool is_integer() const;
  bool is_zero() const;
  int sign() const;

  Number floor() const;
  Number ceil() const;
  // Only valid for integral values that fit.
  long long to_integer() const;

  Number operator-() const;
  Number& operator+=(const Number& o);
  Number& operator-=(const Number& o);
  Number& operator*=(const Number& o);
  Number& operator/=(const Number& o);

  friend Number operator+(Number a, const Number& b) { return a += b; }
  friend Number operator-(Number a, const Number& b) { return a -= b; }
  friend Number operator*(Number a, const Number& b) { return a *= b; }
  friend Number operator/(Number a, const Number& b) { return a /= b; }

  // Exact comparison, no tolerance. Float vs rational compares exact values.
  friend int compare(const Number& a, const Number& b);
  friend bool operator==(const Number& a, const Number& b) { return compare(a, b) == 0; }
  friend bool operator<(const Number& a, const Number& b) { return compare(a, b) < 0; }
  friend bool operator>(const Number& a, const Number& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Number& a, const Number& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Number& a, const Number& b) { return compare(a, b) >= 0; }

  const mpq_class* rational_ptr() const { return std::get_if<mpq_class>(&value_); }

 private:
  std::variant<double, mpq_class> value_;
};

Number pow_int(const Number& base, std::size_t n);
Number min(const Number& a, const Number& b);
Number max(const Number& a, const Number& b);
Number abs(const Number& a);

// Tolerance-aware three-way comparison: exact when both sides are exact,
// otherwise |a-b| <= max(kAbsTol, kRelTol*max(|a|,|b|)) counts as equal.
int compare_tol(const Number& a, const Number& b);
inline bool definitely_less(const Number& a, const Number& b) { return compare_tol(a, b) < 0; }
inline bool approx_equal(const Number& a, const Number& b) { return compare_tol(a, b) == 0; }
inline bool less_or_equal_tol(const Number& a, const Number& b) { return compare_tol(a, b) <= 0; }

std::string to_string(NumericMode m);

}  // namespace cookie
