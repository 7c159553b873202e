#include "wvd/exact.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace wvd {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(BigInt numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  if (exp_ > 0) {
    const unsigned tz = mp::lsb(num_.sign() < 0 ? BigInt(-num_) : num_);
    const unsigned shift = tz < exp_ ? tz : exp_;
    if (shift > 0) {
      num_ >>= shift;
      exp_ -= shift;
    }
  }
}

Dyadic Dyadic::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  if (v == 0.0) return Dyadic();
  int e2 = 0;
  const double fr = std::frexp(v, &e2);
  const auto mant = static_cast<long long>(std::ldexp(fr, 53));  // exact
  const int s = e2 - 53;
  if (s >= 0) return Dyadic(BigInt(mant) << s, 0);
  return Dyadic(BigInt(mant), static_cast<unsigned>(-s));
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
  return Dyadic((num_ << (e - exp_)) + (o.num_ << (e - o.exp_)), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
  return Dyadic((num_ << (e - exp_)) - (o.num_ << (e - o.exp_)), e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::mul_pow2(int s) const {
  if (is_zero()) return Dyadic();
  if (s >= 0) {
    const unsigned u = static_cast<unsigned>(s);
    if (exp_ >= u) {
      Dyadic r;
      r.num_ = num_;
      r.exp_ = exp_ - u;
      return r;
    }
    Dyadic r;
    r.num_ = num_ << (u - exp_);
    r.exp_ = 0;
    return r;
  }
  Dyadic r;
  r.num_ = num_;
  r.exp_ = exp_ + static_cast<unsigned>(-s);
  return r;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  const int cl = sign(), cr = o.sign();
  if (cl != cr) return cl <=> cr;
  const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
  const BigInt lhs = num_ << (e - exp_);
  const BigInt rhs = o.num_ << (e - o.exp_);
  const int c = lhs.compare(rhs);
  return c <=> 0;
}

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
}

std::string Dyadic::to_fraction() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

namespace {

// Splits "p", "p/q" or "p/2^e"; returns {num_str, den_str_or_empty, exp, has_caret}.
struct ParsedFraction {
  std::string num;
  std::string den;
  unsigned exp = 0;
  bool has_caret = false;
  bool has_den = false;
};

ParsedFraction split_fraction(std::string_view s) {
  ParsedFraction out;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    out.num = std::string(s);
    return out;
  }
  out.num = std::string(s.substr(0, slash));
  std::string_view d = s.substr(slash + 1);
  out.has_den = true;
  if (d.size() >= 2 && d[0] == '2' && d[1] == '^') {
    out.has_caret = true;
    const std::string es(d.substr(2));
    if (es.empty()) throw std::invalid_argument("missing exponent");
    std::size_t pos = 0;
    const unsigned long e = std::stoul(es, &pos);
    if (pos != es.size()) throw std::invalid_argument("bad exponent");
    out.exp = static_cast<unsigned>(e);
  } else {
    out.den = std::string(d);
  }
  return out;
}

BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bare sign");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer: " + s);
  return s[0] == '+' ? BigInt(s.substr(1)) : BigInt(s);
}

}  // namespace

Dyadic Dyadic::parse(std::string_view s) {
  const ParsedFraction f = split_fraction(s);
  const BigInt n = parse_bigint(f.num);
  if (!f.has_den) return Dyadic(n, 0);
  if (!f.has_caret)
    throw std::invalid_argument("dyadic denominator must be written 2^e");
  return Dyadic(n, f.exp);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
  return os << d.to_fraction();
}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  if (denominator.sign() < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  v_ = mp::cpp_rational(std::move(numerator), std::move(denominator));
}

Rational::Rational(const Dyadic& d)
    : v_(d.num(), BigInt(1) << d.exp()) {}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  Rational r;
  r.v_ = v_ + o.v_;
  return r;
}

Rational Rational::operator-(const Rational& o) const {
  Rational r;
  r.v_ = v_ - o.v_;
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  Rational r;
  r.v_ = v_ * o.v_;
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational r;
  r.v_ = v_ / o.v_;
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const int c = v_.compare(o.v_);
  return c <=> 0;
}

bool Rational::is_dyadic() const {
  const BigInt d = den();
  const BigInt masked = d & (d - 1);
  return masked.is_zero();
}

Dyadic Rational::to_dyadic() const {
  if (!is_dyadic()) throw std::domain_error("not a dyadic rational");
  const BigInt d = den();
  const unsigned e = d == 1 ? 0u : mp::msb(d);
  return Dyadic(num(), e);
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::to_fraction() const {
  const BigInt d = den();
  if (d == 1) return num().str();
  return num().str() + "/" + d.str();
}

Rational Rational::parse(std::string_view s) {
  const ParsedFraction f = split_fraction(s);
  const BigInt n = parse_bigint(f.num);
  if (!f.has_den) return Rational(n, 1);
  if (f.has_caret) return Rational(Dyadic(n, f.exp));
  const BigInt d = parse_bigint(f.den);
  return Rational(n, d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Dyadic abs(const Dyadic& d) { return d.sign() < 0 ? -d : d; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_fraction();
}

std::string render_decimal(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  const bool neg = r.sign() < 0;
  BigInt a = neg ? BigInt(-r.num()) : r.num();
  const BigInt d = r.den();
  BigInt pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  a *= pow10;
  BigInt q = a / d;
  const BigInt rem = a % d;
  const BigInt twice = rem << 1;
  if (twice > d || (twice == d && mp::bit_test(q, 0))) ++q;
  const BigInt ip = q / pow10;
  const BigInt fp = q % pow10;
  std::string frac = fp.str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = (neg && !q.is_zero()) ? "-" : "";
  out += ip.str();
  out += '.';
  out += frac;
  return out;
}

std::string render_decimal(const Dyadic& d, int digits) {
  return render_decimal(Rational(d), digits);
}

}  // namespace wvd
