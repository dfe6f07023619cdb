#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace fracdef {

/// Exact rational number: always in lowest terms, denominator > 0.
/// All arithmetic is exact; there is no rounding anywhere in this class.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long value) : v_(value) {}  // NOLINT: implicit by design
  Rational(long num, long den);

  /// Accepts "p", "p/q", with optional sign. Rejects q = 0.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double (binary expansion, no rounding).
  static Rational from_double_exact(double x);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  const mpz_class numerator() const { return v_.get_num(); }
  const mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  friend Rational abs(const Rational& r) { return Rational(mpq_class(abs(r.v_))); }
  friend const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
  friend const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}

  friend Rational snap_to_rational(double x, long max_denominator);

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Closest fraction to x with denominator <= max_denominator.
/// Ties go to the smaller denominator, then to the smaller value.
/// Requires x in [0, 1] and max_denominator >= 1.
Rational snap_to_rational(double x, long max_denominator);

}  // namespace fracdef
