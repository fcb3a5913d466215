#include "bdom/domain.hpp"

#include <algorithm>
#include <cmath>

namespace bdom {

ElementaryDomainSpec ElementaryDomainSpec::canonicalize(
    std::vector<std::pair<LinearForm, Rational>> raw) {
  if (raw.empty()) throw std::invalid_argument("domain spec needs at least one factor");

  std::vector<WeightedFactor> merged;
  Rational sum = 0;
  for (auto& [form, weight] : raw) {
    if (weight <= 0) throw std::invalid_argument("factor weight must be positive");
    sum += weight;
    LinearForm canon = LinearForm::canonical(form.a, form.b);
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const WeightedFactor& f) { return f.form == canon; });
    if (it != merged.end())
      it->weight += weight;
    else
      merged.push_back({canon, weight});
  }
  if (sum != 1)
    throw std::invalid_argument("factor weights must sum to 1, got " + format_rational(sum));

  std::sort(merged.begin(), merged.end(),
            [](const WeightedFactor& f, const WeightedFactor& g) { return f.form < g.form; });

  ElementaryDomainSpec spec;
  spec.factors_ = std::move(merged);
  return spec;
}

double ElementaryDomainSpec::evaluate_h(std::complex<double> z1, std::complex<double> z2) const {
  // log-space product; any vanishing factor forces h = 0
  double log_h = 0.0;
  for (const auto& f : factors_) {
    double mag = std::abs(f.form.evaluate(z1, z2));
    if (mag == 0.0) return 0.0;
    log_h += to_double(f.weight) * std::log(mag);
  }
  return std::exp(log_h);
}

bool operator==(const ElementaryDomainSpec& s, const ElementaryDomainSpec& t) {
  if (s.factors_.size() != t.factors_.size()) return false;
  for (std::size_t i = 0; i < s.factors_.size(); ++i)
    if (s.factors_[i].form != t.factors_[i].form || s.factors_[i].weight != t.factors_[i].weight)
      return false;
  return true;
}

HomogeneousPolynomial::HomogeneousPolynomial(int degree, std::vector<GaussianRational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 0) throw std::invalid_argument("negative degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
    throw std::invalid_argument("homogeneous polynomial of degree d needs d+1 coefficients");
}

HomogeneousPolynomial HomogeneousPolynomial::zero(int degree) {
  return {degree, std::vector<GaussianRational>(static_cast<std::size_t>(degree) + 1)};
}

HomogeneousPolynomial HomogeneousPolynomial::constant(GaussianRational c) {
  return {0, {std::move(c)}};
}

HomogeneousPolynomial HomogeneousPolynomial::from_form(const LinearForm& f) {
  return {1, {f.b, f.a}};  // b*z2 + a*z1
}

bool HomogeneousPolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const GaussianRational& c) { return c.is_zero(); });
}

std::complex<double> HomogeneousPolynomial::evaluate(std::complex<double> z1,
                                                     std::complex<double> z2) const {
  // Horner in the chart of the larger coordinate for stability.
  if (degree_ == 0) return to_complex(coeffs_[0]);
  if (std::abs(z1) <= std::abs(z2)) {
    if (z2 == 0.0) return 0.0;  // both coordinates vanish, degree >= 1
    std::complex<double> w = z1 / z2;
    std::complex<double> acc = 0.0;
    for (int k = degree_; k >= 0; --k) acc = acc * w + to_complex(coeffs_[static_cast<std::size_t>(k)]);
    return acc * std::pow(z2, degree_);
  }
  std::complex<double> w = z2 / z1;
  std::complex<double> acc = 0.0;
  for (int k = 0; k <= degree_; ++k) acc = acc * w + to_complex(coeffs_[static_cast<std::size_t>(k)]);
  return acc * std::pow(z1, degree_);
}

HomogeneousPolynomial operator+(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q) {
  if (p.degree_ != q.degree_) throw std::invalid_argument("degree mismatch in polynomial sum");
  std::vector<GaussianRational> c(p.coeffs_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += q.coeffs_[k];
  return {p.degree_, std::move(c)};
}

HomogeneousPolynomial operator-(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q) {
  if (p.degree_ != q.degree_) throw std::invalid_argument("degree mismatch in polynomial difference");
  std::vector<GaussianRational> c(p.coeffs_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= q.coeffs_[k];
  return {p.degree_, std::move(c)};
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q) {
  int d = p.degree_ + q.degree_;
  std::vector<GaussianRational> c(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return {d, std::move(c)};
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(const GaussianRational& c) const {
  std::vector<GaussianRational> out(coeffs_);
  for (auto& x : out) x *= c;
  return {degree_, std::move(out)};
}

HomogeneousPolynomial pow(const HomogeneousPolynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  HomogeneousPolynomial acc = HomogeneousPolynomial::constant(GaussianRational(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace bdom
