#pragma once
//------------------------------------------------------------------------------
// Exact rational scalar. Thin value wrapper over GMP's mpq_class that keeps
// every value canonical (lowest terms, positive denominator) and adds the
// "p/q" literal syntax used by all file formats.
//------------------------------------------------------------------------------
#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace sunlab {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);

  // Parses "p" or "p/q" with optional sign, arbitrary precision. Returns
  // nullopt on malformed input or zero denominator.
  static std::optional<Rational> parse(std::string_view s);

  // Canonical rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  int sign() const { return sgn(v_); }
  Rational abs() const;
  bool is_integer() const { return v_.get_den() == 1; }
  Rational floor() const;
  Rational ceil() const;

  const mpq_class& raw() const { return v_; }
  static Rational from_mpq(mpq_class q);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return from_mpq(-a.v_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sunlab
