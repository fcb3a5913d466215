#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "bdom/rational.hpp"

namespace bdom {

inline std::complex<double> to_complex(const GaussianRational& z) {
  return {to_double(z.re), to_double(z.im)};
}

/// Point [v1 : v2] of the complex projective line, stored in canonical form:
/// v2 = 1 when v2 != 0, otherwise [1 : 0].
struct ProjectivePoint {
  GaussianRational v1;
  GaussianRational v2;

  static ProjectivePoint from(GaussianRational a, GaussianRational b) {
    if (a.is_zero() && b.is_zero())
      throw std::invalid_argument("projective point needs a nonzero representative");
    if (!b.is_zero()) return {a / b, GaussianRational(1)};
    return {GaussianRational(1), GaussianRational(0)};
  }

  bool at_infinity() const { return v2.is_zero(); }

  friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.v1 == q.v1 && p.v2 == q.v2;
  }
  friend bool operator!=(const ProjectivePoint& p, const ProjectivePoint& q) { return !(p == q); }
  friend bool operator<(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.v1 != q.v1) return p.v1 < q.v1;
    return p.v2 < q.v2;
  }
};

/// Linear form z -> a*z1 + b*z2, canonical: first nonzero coefficient is 1.
struct LinearForm {
  GaussianRational a;
  GaussianRational b;

  static LinearForm canonical(GaussianRational a, GaussianRational b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("zero linear form");
    if (!a.is_zero()) return {GaussianRational(1), b / a};
    return {GaussianRational(0), GaussianRational(1)};
  }

  std::complex<double> evaluate(std::complex<double> z1, std::complex<double> z2) const {
    return to_complex(a) * z1 + to_complex(b) * z2;
  }

  /// The unique [v] with a*v1 + b*v2 = 0.
  ProjectivePoint zero_point() const {
    return ProjectivePoint::from(-b, a);
  }

  friend bool operator==(const LinearForm& f, const LinearForm& g) { return f.a == g.a && f.b == g.b; }
  friend bool operator!=(const LinearForm& f, const LinearForm& g) { return !(f == g); }
  friend bool operator<(const LinearForm& f, const LinearForm& g) {
    if (f.a != g.a) return f.a < g.a;
    return f.b < g.b;
  }
};

/// a1*b2 - a2*b1; zero iff the forms are proportional.
inline GaussianRational cross_product(const LinearForm& f, const LinearForm& g) {
  return f.a * g.b - g.a * f.b;
}

inline bool proportional(const LinearForm& f, const LinearForm& g) {
  return cross_product(f, g).is_zero();
}

struct WeightedFactor {
  LinearForm form;
  Rational weight;  // > 0
};

/// Balanced domain D = {h < 1} with h(z) = prod |form_j(z)|^{t_j}, sum t_j = 1.
/// Factors are canonical, pairwise non-proportional and sorted; immutable.
class ElementaryDomainSpec {
 public:
  /// Merges proportional forms (weights added), sorts factors, checks sum = 1.
  static ElementaryDomainSpec canonicalize(std::vector<std::pair<LinearForm, Rational>> raw);

  const std::vector<WeightedFactor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }

  /// prod |form_j(z)|^{t_j}; 0 when any factor vanishes.
  double evaluate_h(std::complex<double> z1, std::complex<double> z2) const;

  friend bool operator==(const ElementaryDomainSpec& s, const ElementaryDomainSpec& t);

 private:
  std::vector<WeightedFactor> factors_;
};

inline ElementaryDomainSpec canonicalize_spec(std::vector<std::pair<LinearForm, Rational>> raw) {
  return ElementaryDomainSpec::canonicalize(std::move(raw));
}

/// Binary form Q(z) = sum_k coeffs[k] * z1^k * z2^(d-k); the zero polynomial
/// is represented at its declared degree with all-zero coefficients.
class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial(int degree, std::vector<GaussianRational> coeffs);

  static HomogeneousPolynomial zero(int degree);
  static HomogeneousPolynomial constant(GaussianRational c);
  static HomogeneousPolynomial from_form(const LinearForm& f);  // degree 1

  int degree() const { return degree_; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  const GaussianRational& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  bool is_zero() const;

  std::complex<double> evaluate(std::complex<double> z1, std::complex<double> z2) const;

  /// Coefficients of Q(lambda, 1) in ascending powers of lambda.
  std::vector<GaussianRational> chart_z2() const { return coeffs_; }
  /// Coefficients of Q(1, lambda) in ascending powers of lambda.
  std::vector<GaussianRational> chart_z1() const {
    return {coeffs_.rbegin(), coeffs_.rend()};
  }

  friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q);
  friend HomogeneousPolynomial operator-(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q);
  friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q);
  HomogeneousPolynomial scaled(const GaussianRational& c) const;

  friend bool operator==(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q) {
    return p.degree_ == q.degree_ && p.coeffs_ == q.coeffs_;
  }

 private:
  int degree_;
  std::vector<GaussianRational> coeffs_;
};

HomogeneousPolynomial pow(const HomogeneousPolynomial& p, int e);

}  // namespace bdom
