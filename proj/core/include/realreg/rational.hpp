#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace realreg {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading '-').
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  double to_double() const { return q_.get_d(); }
  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
/// base^exponent for any integer exponent (base nonzero when exponent < 0).
Rational pow(const Rational& base, long exponent);
/// r^{-n} for n >= 0.
Rational inverse_power(long base, long n);

/// Point of [0,1]^m; one rational per coordinate.
using RationalVec = std::vector<Rational>;

bool is_zero(const RationalVec& v);
RationalVec operator+(const RationalVec& a, const RationalVec& b);
RationalVec operator-(const RationalVec& a, const RationalVec& b);
RationalVec operator*(const Rational& s, const RationalVec& v);

/// Single rational for m = 1, otherwise "(a,b,...)".
std::string to_string(const RationalVec& v);
/// Accepts "p/q", or "(p/q,...)" / "p/q,p/q" for vectors.
RationalVec parse_rational_vec(std::string_view text);

BigInt lcm(const BigInt& a, const BigInt& b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// If q = base^e for some integer e, returns e.
bool power_of(const Rational& q, long base, long* exponent);

}  // namespace realreg

template <>
struct std::hash<realreg::Rational> {
  std::size_t operator()(const realreg::Rational& q) const noexcept;
};
