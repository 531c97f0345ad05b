#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scpool {

// Explicit small-instance values that replace the derived ones verbatim.
struct Overrides {
  std::optional<std::int64_t> ell;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> gamma;

  bool any() const { return ell || s || m || gamma; }
  bool all() const { return ell && s && m && gamma; }
};

// Problem inputs: n items, per-weight counts k_1..k_d, design exponent and
// measurement-rate constant (either c directly or a slack delta over the
// minimum feasible constant).
struct DesignParams {
  std::int64_t n = 0;
  std::vector<std::int64_t> counts;  // k_1..k_d
  double eps_design = 0.05;
  std::optional<double> c;
  std::optional<double> delta;
  std::uint64_t rng_seed = 0;
  Overrides overrides;

  std::int64_t k() const;
  int d() const { return static_cast<int>(counts.size()); }
  std::int64_t total_weight() const;  // W = sum w * k_w
  double weight_fraction(int w) const;  // eps_w = k_w / k
  double sum_w2_eps() const;            // sum_w w^2 eps_w

  // Throws std::invalid_argument on any violated precondition.
  void validate() const;
};

struct DerivedParams {
  double theta = 0.0;  // ln k / ln n
  std::int64_t ell = 0;
  std::int64_t s = 0;
  std::int64_t m = 0;
  std::int64_t gamma = 0;
  double alpha = 0.0;  // sqrt(theta) / (1 + sqrt(theta))
  double c = 0.0;      // effective rate: m / (2 (1-theta) k / theta)

  std::int64_t window_count() const { return ell + s - 1; }
  std::int64_t pools_per_compartment() const { return m / window_count(); }
  std::int64_t slots_per_compartment() const { return gamma / s; }
};

DerivedParams derive_params(const DesignParams& params);

// Minimum rate constant for which the first-threshold skew window is nonempty.
double rate_constant_min(double theta, double eps_design, double sum_w2_eps);

// Rate exponent f; decoding succeeds w.h.p. when f > 1.
double rate_exponent(double c, double theta, double eps_design,
                     double sum_w2_eps);

struct FeasibilityReport {
  double c_min = 0.0;
  bool c_ok = false;
  double f = 0.0;
  bool f_ok = false;
  double delta_over_s = 0.0;       // sqrt(m) / ell
  double s2_over_ell = 0.0;        // s^2 / ell
  double exp_delta_over_s = 0.0;   // base-n exponent of sqrt(m)/ell
  double exp_s2_over_ell = 0.0;    // base-n exponent of s^2/ell
  bool density_ok = false;         // exp_delta_over_s > 0.01 and exp_s2_over_ell < -0.01
};

FeasibilityReport feasibility_report(const DerivedParams& derived,
                                     const DesignParams& params);

}  // namespace scpool
