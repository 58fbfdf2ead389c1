#include "realreg/rational.hpp"

#include <numeric>
#include <ostream>

#include "realreg/error.hpp"

namespace realreg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::EmptyLanguage: return "EmptyLanguage";
    case ErrorKind::NotTrim: return "NotTrim";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OmegaArity: return "OmegaArityError";
    case ErrorKind::NotSparse: return "NotSparse";
    case ErrorKind::NoCantor: return "NoCantor";
    case ErrorKind::InteriorPresent: return "InteriorPresent";
    case ErrorKind::FiniteSet: return "FiniteSet";
    case ErrorKind::NotUnary: return "NotUnary";
    case ErrorKind::DependentBases: return "DependentBases";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Error";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::Domain, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw ParseError(0, "malformed integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = strip(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-')
    throw ParseError(0, "negative denominator in '" + std::string(text) + "'");
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::Domain, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, long exponent) {
  const bool invert = exponent < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return invert ? Rational(den, num) : Rational(num, den);
}

Rational inverse_power(long base, long n) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(n));
  return Rational(BigInt(1), den);
}

bool is_zero(const RationalVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RationalVec operator+(const RationalVec& a, const RationalVec& b) {
  RationalVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVec operator-(const RationalVec& a, const RationalVec& b) {
  RationalVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVec operator*(const Rational& s, const RationalVec& v) {
  RationalVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::string to_string(const RationalVec& v) {
  if (v.size() == 1) return v.front().str();
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out + ")";
}

RationalVec parse_rational_vec(std::string_view text) {
  text = strip(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError(0, "unbalanced parentheses in '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  RationalVec out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(Rational::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

bool power_of(const Rational& q, long base, long* exponent) {
  if (q.sign() <= 0) return false;
  BigInt num = q.numerator();
  BigInt den = q.denominator();
  long e = 0;
  while (num % base == 0) { num /= base; ++e; }
  while (den % base == 0) { den /= base; --e; }
  if (num != 1 || den != 1) return false;
  if (exponent) *exponent = e;
  return true;
}

}  // namespace realreg

std::size_t std::hash<realreg::Rational>::operator()(const realreg::Rational& q) const noexcept {
  const std::string s = q.str();
  return std::hash<std::string>{}(s);
}
