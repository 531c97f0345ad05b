#include "scpool/params.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace scpool {

std::int64_t DesignParams::k() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t DesignParams::total_weight() const {
  std::int64_t w_total = 0;
  for (int w = 1; w <= d(); ++w) w_total += w * counts[w - 1];
  return w_total;
}

double DesignParams::weight_fraction(int w) const {
  const std::int64_t kk = k();
  if (kk == 0) return 0.0;
  return static_cast<double>(counts[w - 1]) / static_cast<double>(kk);
}

double DesignParams::sum_w2_eps() const {
  double acc = 0.0;
  for (int w = 1; w <= d(); ++w)
    acc += static_cast<double>(w) * w * weight_fraction(w);
  return acc;
}

void DesignParams::validate() const {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  if (counts.empty()) throw std::invalid_argument("counts must be non-empty");
  for (auto v : counts)
    if (v < 0) throw std::invalid_argument("counts must be non-negative");
  const std::int64_t kk = k();
  if (!overrides.all()) {
    if (kk < 2) throw std::invalid_argument("k too small (need k >= 2)");
    if (kk >= n) throw std::invalid_argument("k must be smaller than n");
    const double theta = std::log(static_cast<double>(kk)) /
                         std::log(static_cast<double>(n));
    if (!(theta > 0.0 && theta < 1.0))
      throw std::invalid_argument("theta = ln k / ln n must lie in (0,1)");
  }
  if (!(eps_design > 0.0 && eps_design < 0.25))
    throw std::invalid_argument("eps_design must lie in (0, 1/4)");
  if (c && delta)
    throw std::invalid_argument("give either c or delta, not both");
  if (c && !(*c > 0.0)) throw std::invalid_argument("c must be positive");
  if (delta && !(*delta > 0.0))
    throw std::invalid_argument("delta must be positive");
  if (!c && !delta && !overrides.m)
    throw std::invalid_argument("either c, delta or an m override is required");
  if (overrides.ell && *overrides.ell < 1)
    throw std::invalid_argument("ell override must be >= 1");
  if (overrides.s && *overrides.s < 1)
    throw std::invalid_argument("s override must be >= 1");
}

namespace {

double theta_of(std::int64_t n, std::int64_t k) {
  if (k < 2) return std::numeric_limits<double>::quiet_NaN();
  return std::log(static_cast<double>(k)) / std::log(static_cast<double>(n));
}

std::int64_t round_up_to_multiple(std::int64_t v, std::int64_t q) {
  return ((v + q - 1) / q) * q;
}

}  // namespace

DerivedParams derive_params(const DesignParams& params) {
  params.validate();
  const std::int64_t k = params.k();
  const double kd = static_cast<double>(k);

  DerivedParams out;
  out.theta = theta_of(params.n, k);

  if (params.overrides.ell) {
    out.ell = *params.overrides.ell;
  } else {
    out.ell = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(
               std::ceil(std::pow(kd, 0.5 - params.eps_design))));
  }
  if (params.overrides.s) {
    out.s = *params.overrides.s;
  } else {
    out.s = std::max<std::int64_t>(
        2, static_cast<std::int64_t>(
               std::ceil(std::pow(kd, 0.25 - params.eps_design))));
  }
  const std::int64_t window = out.ell + out.s - 1;

  if (params.overrides.m) {
    out.m = *params.overrides.m;
  } else {
    double c_in;
    if (params.c) {
      c_in = *params.c;
    } else {
      const double rt = std::sqrt(out.theta);
      c_in = (4.0 + *params.delta) * (1.0 + rt) / (1.0 - rt) *
             params.sum_w2_eps();
    }
    const double m_raw = 2.0 * c_in * (1.0 - out.theta) * kd / out.theta;
    out.m = round_up_to_multiple(
        static_cast<std::int64_t>(std::ceil(m_raw)), window);
  }
  if (out.m < window || out.m % window != 0)
    throw std::invalid_argument("m must be a positive multiple of ell+s-1");

  if (params.overrides.gamma) {
    out.gamma = *params.overrides.gamma;
  } else {
    const double per_window = static_cast<double>(params.n) /
                              (std::sqrt(static_cast<double>(out.m)) *
                               static_cast<double>(window));
    out.gamma =
        out.s * std::max<std::int64_t>(
                    1, static_cast<std::int64_t>(std::llround(per_window)));
  }
  if (out.gamma < out.s || out.gamma % out.s != 0)
    throw std::invalid_argument("gamma must be a multiple of s, at least s");

  if (std::isnan(out.theta)) {
    out.alpha = std::numeric_limits<double>::quiet_NaN();
    out.c = k == 0 ? std::numeric_limits<double>::infinity()
                   : std::numeric_limits<double>::quiet_NaN();
  } else {
    const double rt = std::sqrt(out.theta);
    out.alpha = rt / (1.0 + rt);
    out.c = static_cast<double>(out.m) * out.theta /
            (2.0 * (1.0 - out.theta) * kd);
  }
  return out;
}

double rate_constant_min(double theta, double eps_design, double sum_w2_eps) {
  const double rt = std::sqrt(theta);
  return (1.0 + rt) / (1.0 - rt) * sum_w2_eps / (0.25 - eps_design);
}

double rate_exponent(double c, double theta, double eps_design,
                     double sum_w2_eps) {
  const double rt = std::sqrt(theta);
  return c * (0.25 - eps_design) * (1.0 - rt) / ((1.0 + rt) * sum_w2_eps);
}

FeasibilityReport feasibility_report(const DerivedParams& derived,
                                     const DesignParams& params) {
  FeasibilityReport rep;
  const double theta = derived.theta;
  const double sw2 = params.sum_w2_eps();
  rep.c_min = rate_constant_min(theta, params.eps_design, sw2);
  rep.c_ok = derived.c >= rep.c_min;
  rep.f = rate_exponent(derived.c, theta, params.eps_design, sw2);
  rep.f_ok = rep.f > 1.0;

  const double ln_n = std::log(static_cast<double>(params.n));
  rep.delta_over_s = std::sqrt(static_cast<double>(derived.m)) /
                     static_cast<double>(derived.ell);
  rep.s2_over_ell = static_cast<double>(derived.s) *
                    static_cast<double>(derived.s) /
                    static_cast<double>(derived.ell);
  rep.exp_delta_over_s = std::log(rep.delta_over_s) / ln_n;
  rep.exp_s2_over_ell = std::log(rep.s2_over_ell) / ln_n;
  rep.density_ok =
      rep.exp_delta_over_s > 0.01 && rep.exp_s2_over_ell < -0.01;
  return rep;
}

}  // namespace scpool
