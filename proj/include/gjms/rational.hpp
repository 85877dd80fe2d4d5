// Exact rational scalar type. Everything spectral in this library is a
// Rational; nothing is ever rounded.
#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gjms {

/// Arbitrary-precision integer (multiplicities, binomial coefficients).
using Integer = mpz_class;

/// Exact rational number in canonical form: reduced to lowest terms with a
/// positive denominator. Arithmetic is exact; division by zero throws.
/// Immutable in spirit: every operation returns a fresh value, so instances
/// can be shared freely across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den) { init(Integer(num), Integer(den)); }
  Rational(Integer num, Integer den) { init(std::move(num), std::move(den)); }

  /// Parses "num", "num/den", optionally signed. Throws std::invalid_argument
  /// on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// "5", "-3/7": denominator omitted when it is 1.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// "5/1", "-3/7": denominator always present (spectrum table format).
  std::string fraction_str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  void init(Integer num, Integer den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();  // lowest terms, denominator > 0
  }

  mpq_class v_;
};

/// r^e for e >= 0 (0^0 = 1).
inline Rational pow(const Rational& r, int e) {
  if (e < 0) throw std::invalid_argument("pow(Rational): negative exponent");
  Rational acc(1);
  for (int i = 0; i < e; ++i) acc *= r;
  return acc;
}

inline Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty input");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)), Integer(1));
    }
    Integer num(std::string(trim(text.substr(0, slash))));
    Integer den(std::string(trim(text.substr(slash + 1))));
    return Rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed rational '" +
                                std::string(text) + "'");
  }
}

}  // namespace gjms
