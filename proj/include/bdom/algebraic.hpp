#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bdom/domain.hpp"

namespace bdom {

/// nu(log h, [v]) as a finite map over the support; for an elementary spec the
/// values are the factor weights attached to each form's zero point and they
/// sum to 1 exactly.
class LelongSpectrum {
 public:
  using Map = std::map<ProjectivePoint, Rational>;

  explicit LelongSpectrum(Map entries) : entries_(std::move(entries)) {}

  const Map& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  /// 0 outside the support.
  Rational at(const ProjectivePoint& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  Rational sum() const {
    Rational s = 0;
    for (const auto& [v, nu] : entries_) s += nu;
    return s;
  }

  /// Largest value; ties broken by the canonical point order.
  std::pair<ProjectivePoint, Rational> max_entry() const;

 private:
  Map entries_;
};

LelongSpectrum lelong_spectrum(const ElementaryDomainSpec& spec);
Rational lelong_at(const ElementaryDomainSpec& spec, const ProjectivePoint& v);

/// Spec of the domain with h = h1^t * h2^(1-t); Lelong numbers blend affinely.
ElementaryDomainSpec blend(const ElementaryDomainSpec& s1, const ElementaryDomainSpec& s2,
                           const Rational& t);

/// Order of vanishing of a nonzero binary form at [v]; evaluated in the chart
/// of the larger-modulus coordinate by exact Taylor shift.
int multiplicity(const HomogeneousPolynomial& q, const ProjectivePoint& v);

/// Smallest integer strictly greater than nu*(d+2) - 1 (never negative).
/// The strict inequality makes the integer boundary case fail on purpose.
int required_multiplicity(const Rational& nu, int degree);

/// Membership of Q in the Bergman space of the domain: at every support point
/// the vanishing order must reach the required multiplicity.
bool is_square_integrable(const HomogeneousPolynomial& q, const ElementaryDomainSpec& spec);

/// dim of the degree-d slice of the Bergman space:
/// max(0, d + 1 - sum over support of required multiplicities).
std::uint64_t hilbert_dimension(const ElementaryDomainSpec& spec, std::uint64_t degree);

/// K_D(0) > 0, equivalently finite volume: every Lelong value < 1/2.
bool kernel_positive(const ElementaryDomainSpec& spec);

/// z1 and z2 are both square integrable: every Lelong value < 1/3.
bool admits_bergman_metric(const ElementaryDomainSpec& spec);

struct AllPolynomialsVerdict {
  bool contains_all;           // always false for elementary specs
  ProjectivePoint witness;     // a point with positive Lelong number
  Rational witness_nu;
};

AllPolynomialsVerdict contains_all_polynomials(const ElementaryDomainSpec& spec);

struct BergmanClassification {
  enum class Kind { Trivial, InfiniteDimensional };
  Kind kind;
  std::optional<std::uint64_t> witness_degree;  // minimal d with dim > 0
};

/// Trivial iff the spectrum support has at most two points; otherwise searches
/// the minimal witness degree. Exhausting the search bound is an internal
/// error, never a Trivial verdict.
BergmanClassification classify_bergman_space(const ElementaryDomainSpec& spec);

/// Spec with factors z1 - a_j*z2 over the first `count` entries of the point
/// sequence, weights renormalized to sum 1. Duplicate points merge.
ElementaryDomainSpec siciak_approximant(std::size_t count,
                                        std::span<const GaussianRational> points,
                                        std::span<const Rational> decay);

/// Deterministic enumeration of Gaussian rationals, dense in C: buckets of
/// increasing coefficient height, each sorted by (|z|^2, |im|, im, re).
/// Starts 0, -1, 1, -i, i, ...
std::vector<GaussianRational> default_dense_sequence(std::size_t count);

std::vector<Rational> uniform_decay(std::size_t count);
std::vector<Rational> geometric_decay(std::size_t count);

}  // namespace bdom
