#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_floor(const Rational& x) {
  Integer num = numerator(x);
  Integer den = denominator(x);  // den > 0 by normalization
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Serializes as "p/q" with q >= 1, e.g. "-3/4", "1/1".
inline std::string format_rational(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
inline Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + std::string(s) + "': " + e.what());
  }
}

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long long r) : re(r) {}
  GaussianRational(long long r, long long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    Rational n = y.norm();
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
  GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }

  // lexicographic on (re, im); used for canonical orderings, not a field order
  friend bool operator<(const GaussianRational& x, const GaussianRational& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  }
};

inline GaussianRational gaussian_i() { return {Rational(0), Rational(1)}; }

/// Serializes as "p/q+r/si" (or "p/q-r/si" for negative imaginary part).
inline std::string format_gaussian(const GaussianRational& z) {
  std::string out = format_rational(z.re);
  out += (z.im < 0) ? "-" : "+";
  out += format_rational(z.im < 0 ? Rational(-z.im) : z.im);
  out += "i";
  return out;
}

/// Accepts "p/q+r/si", "p/q", "r/si" and integer shorthands ("2", "-2i", "1+2i").
inline GaussianRational parse_gaussian(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational literal");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  std::string_view body = s.substr(0, s.size() - 1);
  // split before the imaginary term: last '+'/'-' that is not a leading sign
  // and not part of a denominator ("/ -" never occurs in our grammar)
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos)
    return {Rational(0), parse_rational(body)};  // pure imaginary, sign included
  Rational re = parse_rational(body.substr(0, split));
  Rational im_mag = parse_rational(body.substr(split + 1));
  return {re, body[split] == '-' ? Rational(-im_mag) : im_mag};
}

}  // namespace bdom
