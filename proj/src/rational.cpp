#include "rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace fracdef {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: denominator must be nonzero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  // strip surrounding whitespace
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("rational: empty string");

  auto is_int = [](const std::string& t) {
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("rational: malformed value '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading '+'
  if (den[0] == '+') den.erase(0, 1);

  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational: denominator must be nonzero");
  mpq_class q(n);
  q /= mpq_class(d);
  return Rational(std::move(q));
}

Rational Rational::from_double_exact(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational snap_to_rational(double x, long max_denominator) {
  if (max_denominator < 1)
    throw std::invalid_argument("snap_to_rational: max_denominator must be >= 1");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("snap_to_rational: value must lie in [0, 1]");

  const Rational target = Rational::from_double_exact(x);
  const mpz_class N(max_denominator);

  mpz_class n = target.numerator(), d = target.denominator();
  if (d <= N) return target;

  // Continued-fraction walk: p0/q0 and p1/q1 are consecutive convergents.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  while (true) {
    mpz_class a = n / d;
    mpz_class q2 = q0 + a * q1;
    if (q2 > N) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpz_class r = n - a * d;
    n = d; d = r;
    // d cannot hit zero here: that would mean target's denominator <= N.
  }

  // Best semiconvergent beside the last convergent within the bound.
  mpz_class k = (N - q0) / q1;
  mpq_class semi(p0 + k * p1, q0 + k * q1);
  semi.canonicalize();
  mpq_class conv(p1, q1);
  conv.canonicalize();

  Rational a(std::move(semi));
  Rational b(std::move(conv));
  Rational da = abs(a - target), db = abs(b - target);
  if (da != db) return da < db ? a : b;
  // tie: smaller denominator first, then smaller value
  if (a.denominator() != b.denominator())
    return a.denominator() < b.denominator() ? a : b;
  return min(a, b);
}

}  // namespace fracdef
