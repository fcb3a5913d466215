#include "bdom/algebraic.hpp"

#include <algorithm>
#include <numeric>

namespace bdom {

std::pair<ProjectivePoint, Rational> LelongSpectrum::max_entry() const {
  if (entries_.empty()) throw std::logic_error("empty Lelong spectrum");
  auto best = entries_.begin();
  for (auto it = std::next(entries_.begin()); it != entries_.end(); ++it)
    if (it->second > best->second) best = it;
  return {best->first, best->second};
}

LelongSpectrum lelong_spectrum(const ElementaryDomainSpec& spec) {
  // log|linear form| has Lelong number 1 at its zero; canonical factors have
  // pairwise distinct zero points, so each point carries exactly one weight.
  LelongSpectrum::Map entries;
  for (const auto& f : spec.factors()) entries[f.form.zero_point()] += f.weight;
  return LelongSpectrum(std::move(entries));
}

Rational lelong_at(const ElementaryDomainSpec& spec, const ProjectivePoint& v) {
  return lelong_spectrum(spec).at(v);
}

ElementaryDomainSpec blend(const ElementaryDomainSpec& s1, const ElementaryDomainSpec& s2,
                           const Rational& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("blend parameter must lie in [0,1]");
  std::vector<std::pair<LinearForm, Rational>> raw;
  if (t > 0)
    for (const auto& f : s1.factors()) raw.emplace_back(f.form, t * f.weight);
  if (t < 1)
    for (const auto& f : s2.factors()) raw.emplace_back(f.form, (1 - t) * f.weight);
  return ElementaryDomainSpec::canonicalize(std::move(raw));
}

namespace {

// Order of the zero of p (ascending coefficients) at alpha, by synthetic
// division; p must not be identically zero.
int zero_order_at(std::vector<GaussianRational> p, const GaussianRational& alpha) {
  int order = 0;
  while (true) {
    // divide p by (x - alpha): remainder = p(alpha)
    std::vector<GaussianRational> quotient(p.size() > 1 ? p.size() - 1 : 0);
    GaussianRational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) {
      acc = acc * alpha + p[k];
      if (k > 0) quotient[k - 1] = acc;
    }
    if (!acc.is_zero()) return order;
    ++order;
    if (quotient.empty()) throw std::logic_error("zero polynomial in zero_order_at");
    p = std::move(quotient);
    // a nonzero polynomial cannot vanish to infinite order; the loop ends
    // because the degree strictly drops
  }
}

}  // namespace

int multiplicity(const HomogeneousPolynomial& q, const ProjectivePoint& v) {
  if (q.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial is undefined");
  // chart with the larger-modulus coordinate
  if (v.v1.norm() > v.v2.norm()) {
    // p(lambda) = Q(v1, lambda), order at lambda = v2
    std::vector<GaussianRational> p(static_cast<std::size_t>(q.degree()) + 1);
    GaussianRational power(1);
    for (int k = 0; k <= q.degree(); ++k) {
      p[static_cast<std::size_t>(q.degree() - k)] = q.coeff(k) * power;
      power *= v.v1;
    }
    return zero_order_at(std::move(p), v.v2);
  }
  // p(lambda) = Q(lambda, v2), order at lambda = v1
  std::vector<GaussianRational> p(static_cast<std::size_t>(q.degree()) + 1);
  GaussianRational power(1);
  for (int k = q.degree(); k >= 0; --k) {
    p[static_cast<std::size_t>(k)] = q.coeff(k) * power;
    power *= v.v2;
  }
  return zero_order_at(std::move(p), v.v1);
}

int required_multiplicity(const Rational& nu, int degree) {
  if (nu < 0 || nu > 1) throw std::invalid_argument("Lelong number outside [0,1]");
  Rational bound = nu * (degree + 2) - 1;
  Integer m = rational_floor(bound) + 1;  // smallest integer strictly above
  if (m < 0) return 0;
  return m.convert_to<int>();
}

bool is_square_integrable(const HomogeneousPolynomial& q, const ElementaryDomainSpec& spec) {
  if (q.is_zero()) throw std::invalid_argument("membership query for the zero polynomial");
  LelongSpectrum spectrum = lelong_spectrum(spec);
  for (const auto& [v, nu] : spectrum.entries())
    if (multiplicity(q, v) < required_multiplicity(nu, q.degree())) return false;
  return true;  // points outside the support need nothing: nu = 0 there
}

std::uint64_t hilbert_dimension(const ElementaryDomainSpec& spec, std::uint64_t degree) {
  // Prescribing a zero of order mu_v at distinct projective points factors out
  // prod l_v^{mu_v} and leaves an arbitrary form of the remaining degree.
  Rational dplus2 = Rational(degree) + 2;
  Integer required_total = 0;
  for (const auto& f : spec.factors()) {
    Rational bound = f.weight * dplus2 - 1;
    Integer m = rational_floor(bound) + 1;
    if (m > 0) required_total += m;
  }
  Integer dim = Integer(degree) + 1 - required_total;
  if (dim < 0) return 0;
  return dim.convert_to<std::uint64_t>();
}

bool kernel_positive(const ElementaryDomainSpec& spec) {
  for (const auto& f : spec.factors())
    if (f.weight >= Rational(1, 2)) return false;
  return true;
}

bool admits_bergman_metric(const ElementaryDomainSpec& spec) {
  for (const auto& f : spec.factors())
    if (f.weight >= Rational(1, 3)) return false;
  return true;
}

AllPolynomialsVerdict contains_all_polynomials(const ElementaryDomainSpec& spec) {
  // spectrum sums to 1, so a positive value always exists
  auto [v, nu] = lelong_spectrum(spec).max_entry();
  return {false, v, nu};
}

BergmanClassification classify_bergman_space(const ElementaryDomainSpec& spec) {
  LelongSpectrum spectrum = lelong_spectrum(spec);
  if (spectrum.support_size() <= 2) return {BergmanClassification::Kind::Trivial, std::nullopt};

  // dim H^d depends on d only through (d+2) mod lcm(weight denominators), so
  // a witness shows up within a few periods if it exists at all.
  Integer lcm = 1;
  for (const auto& f : spectrum.entries())
    lcm = boost::multiprecision::lcm(lcm, denominator(f.second));
  std::uint64_t bound = 3 * lcm.convert_to<std::uint64_t>() + 6;
  for (std::uint64_t d = 0; d <= bound; ++d)
    if (hilbert_dimension(spec, d) > 0)
      return {BergmanClassification::Kind::InfiniteDimensional, d};
  throw std::logic_error("no witness degree within the search bound for a >=3-point spectrum");
}

ElementaryDomainSpec siciak_approximant(std::size_t count,
                                        std::span<const GaussianRational> points,
                                        std::span<const Rational> decay) {
  if (count == 0) throw std::invalid_argument("approximant needs at least one point");
  if (points.size() < count || decay.size() < count)
    throw std::invalid_argument("point sequence and decay schedule must cover the requested count");
  Rational total = 0;
  for (std::size_t j = 0; j < count; ++j) {
    if (decay[j] <= 0) throw std::invalid_argument("decay weights must be positive");
    total += decay[j];
  }
  std::vector<std::pair<LinearForm, Rational>> raw;
  raw.reserve(count);
  for (std::size_t j = 0; j < count; ++j)
    raw.emplace_back(LinearForm{GaussianRational(1), -points[j]}, decay[j] / total);
  return ElementaryDomainSpec::canonicalize(std::move(raw));
}

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer coefficient_height(const Rational& x) {
  return std::max(abs_int(numerator(x)), denominator(x));
}

}  // namespace

std::vector<GaussianRational> default_dense_sequence(std::size_t count) {
  std::vector<GaussianRational> out;
  for (long h = 1; out.size() < count; ++h) {
    // rationals of coefficient height <= h, where height(p/q) = max(|p|, q)
    std::vector<Rational> parts;
    for (long den = 1; den <= h; ++den)
      for (long num = -h; num <= h; ++num) parts.emplace_back(num, den);
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

    std::vector<GaussianRational> bucket;
    for (const Rational& re : parts)
      for (const Rational& im : parts)
        if (std::max(coefficient_height(re), coefficient_height(im)) == h)
          bucket.push_back({re, im});
    std::sort(bucket.begin(), bucket.end(),
              [](const GaussianRational& x, const GaussianRational& y) {
                Rational nx = x.norm(), ny = y.norm();
                if (nx != ny) return nx < ny;
                Rational ax = x.im < 0 ? Rational(-x.im) : x.im;
                Rational ay = y.im < 0 ? Rational(-y.im) : y.im;
                if (ax != ay) return ax < ay;
                if (x.im != y.im) return x.im < y.im;
                return x.re < y.re;
              });
    for (const auto& z : bucket) {
      if (out.size() == count) break;
      out.push_back(z);
    }
  }
  return out;
}

std::vector<Rational> uniform_decay(std::size_t count) {
  return std::vector<Rational>(count, Rational(1));
}

std::vector<Rational> geometric_decay(std::size_t count) {
  std::vector<Rational> out;
  Rational w = 1;
  for (std::size_t j = 0; j < count; ++j, w /= 2) out.push_back(w);
  return out;
}

}  // namespace bdom
