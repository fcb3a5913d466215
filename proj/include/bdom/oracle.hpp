#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "bdom/algebraic.hpp"

namespace bdom {

struct QuadratureBudget {
  std::uint64_t total_samples = 1'000'000;  // stratified Monte Carlo budget
  int annuli_per_decade = 12;
  int ladder_decades = 4;
  int theta_nodes = 64;       // angular nodes per ladder annulus
  int radial_subnodes = 4;    // radial nodes per ladder annulus
  double margin = 0.05;       // exponent band around 0 treated as undecidable
};

enum class QuadratureStrategy { AdaptivePolar, StratifiedMonteCarlo, Hybrid };

struct SingularLocus {
  ProjectivePoint point;
  bool at_infinity = false;
  GaussianRational w_exact;       // finite-chart position (unused at infinity)
  std::complex<double> w{};       // double image of w_exact
  Rational nu;                    // Lelong number carried by the locus
};

/// The Hartogs-reduction slice of a balanced domain: phi(w) = log h(w, 1).
/// The point at infinity of the w-chart is tracked as a locus of its own.
class HartogsSlice {
 public:
  explicit HartogsSlice(ElementaryDomainSpec spec);

  const ElementaryDomainSpec& spec() const { return spec_; }

  /// sum_j t_j log|a_j w + b_j|; -inf at singular points.
  double phi(std::complex<double> w) const;

  /// limsup of phi(w) - log|w| as |w| -> inf; equals log h(1,0), may be -inf.
  double class_l_bound() const;

  const std::vector<SingularLocus>& singular_points() const { return singular_; }
  const SingularLocus& infinity_locus() const { return infinity_; }

  struct FactorD {
    std::complex<double> a, b;
    double t;
  };
  const std::vector<FactorD>& factors_d() const { return factors_d_; }

 private:
  ElementaryDomainSpec spec_;
  std::vector<FactorD> factors_d_;
  std::vector<SingularLocus> singular_;
  SingularLocus infinity_;
};

struct IntegralVerdict {
  enum class Kind { Finite, Divergent, Inconclusive };
  Kind kind;
  std::optional<double> value;
  std::optional<double> std_error;
  std::optional<ProjectivePoint> divergence_locus;  // set for Divergent and Inconclusive
  std::optional<double> local_exponent;             // fitted annulus-mass slope there
};

/// Reference to a ladder center: a finite w-chart point or the point at
/// infinity.
struct LocusRef {
  bool at_infinity = false;
  std::complex<double> w{};

  static LocusRef at(std::complex<double> w) { return {false, w}; }
  static LocusRef infinity() { return {true, {}}; }
};

/// |Q(w,1)|^2 exp(-2(d+2) phi(w)). Overflow reports +inf, never NaN; exactly
/// at a singular point the value is the radial limit (0, finite, or +inf
/// depending on how strongly Q vanishes there).
double radial_norm_integrand(const HomogeneousPolynomial& q, const HartogsSlice& slice,
                             std::complex<double> w);

/// log of the above, without the singular-point snap (-inf where Q vanishes).
double log_radial_norm_integrand(const HomogeneousPolynomial& q, const HartogsSlice& slice,
                                 std::complex<double> w);

/// Least-squares slope of log(annulus mass) against log(radius) over a
/// geometric ladder around the center (shrinking annuli; expanding ones at
/// infinity, regressed against -log R). Mass near an integrable center decays
/// like r^s with s > 0; s <= 0 signals divergence.
double local_exponent(const HomogeneousPolynomial& q, const HartogsSlice& slice,
                      const LocusRef& center, const QuadratureBudget& budget = {});

/// Full-plane verdict: exponent screening at every singular locus and at
/// infinity, then adaptive integration. value = pi/(d+2) * plane integral.
/// Deterministic for fixed (inputs, seed, budget, strategy).
IntegralVerdict radial_integral(const HomogeneousPolynomial& q, const HartogsSlice& slice,
                                const QuadratureBudget& budget = {}, std::uint64_t seed = 0,
                                QuadratureStrategy strategy = QuadratureStrategy::Hybrid);

/// radial_integral with Q = 1; a Finite value estimates the volume of D.
IntegralVerdict volume_estimate(const ElementaryDomainSpec& spec,
                                const QuadratureBudget& budget = {}, std::uint64_t seed = 0,
                                QuadratureStrategy strategy = QuadratureStrategy::Hybrid);

}  // namespace bdom
