#ifndef RISKBANDITS_DISTRIBUTIONS_HPP
#define RISKBANDITS_DISTRIBUTIONS_HPP

#include <cmath>
#include <string>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "riskbandits/common.hpp"
#include "riskbandits/random.hpp"

namespace riskbandits {

enum class DistKind { uniform, truncated_normal, truncated_gamma, bernoulli_scaled };

inline const char* dist_kind_name(DistKind k) {
  switch (k) {
    case DistKind::uniform: return "uniform";
    case DistKind::truncated_normal: return "truncated_normal";
    case DistKind::truncated_gamma: return "truncated_gamma";
    case DistKind::bernoulli_scaled: return "bernoulli_scaled";
  }
  return "?";
}

// First four raw moments of a reward law.
struct RawMoments {
  double m1 = 0, m2 = 0, m3 = 0, m4 = 0;

  double variance() const { return m2 - m1 * m1; }
  double fourth_central() const {
    return m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
  }
};

// True per-arm quantities used for gap accounting and bound overlays.
struct ArmTruth {
  double mean = 0;
  double variance = 0;
  double fourth_central_moment = 0;
  double fourth_raw_moment = 0;
  double sr = 0;       // mean / (L + sd)
  double rssr = 0;     // mean^2 / (L + variance)
  double sr_like = 0;  // mean / (L + variance)
};

inline ArmTruth make_truth(const RawMoments& rm, double L) {
  if (!(L > 0)) throw ConfigError("regularizer L must satisfy L > 0");
  ArmTruth t;
  t.mean = rm.m1;
  t.variance = rm.variance();
  if (t.variance < 0 && t.variance > -1e-12) t.variance = 0;
  t.fourth_central_moment = rm.fourth_central();
  t.fourth_raw_moment = rm.m4;
  t.sr = t.mean / (L + std::sqrt(t.variance));
  t.rssr = t.mean * t.mean / (L + t.variance);
  t.sr_like = t.mean / (L + t.variance);
  return t;
}

// Sampleable reward law with bounded support. Immutable once constructed;
// safe to share across threads.
class BoundedDistribution {
 public:
  static BoundedDistribution uniform(double lower, double upper) {
    if (!(lower <= upper) || !std::isfinite(lower) || !std::isfinite(upper))
      throw ConfigError("uniform: need finite lower <= upper");
    BoundedDistribution d;
    d.kind_ = DistKind::uniform;
    d.p_[0] = lower;
    d.p_[1] = upper;
    d.lo_ = lower;
    d.hi_ = upper;
    return d;
  }

  static BoundedDistribution truncated_normal(double loc, double var, double t_lo,
                                              double t_hi) {
    if (!(var > 0)) throw ConfigError("truncated_normal: scale^2 must be > 0");
    if (!(t_lo < t_hi)) throw ConfigError("truncated_normal: need t_l < t_u");
    BoundedDistribution d;
    d.kind_ = DistKind::truncated_normal;
    d.p_[0] = loc;
    d.p_[1] = var;
    d.p_[2] = t_lo;
    d.p_[3] = t_hi;
    d.lo_ = t_lo;
    d.hi_ = t_hi;
    const boost::math::normal_distribution<> base(loc, std::sqrt(var));
    d.cdf_lo_ = boost::math::cdf(base, t_lo);
    d.cdf_hi_ = boost::math::cdf(base, t_hi);
    if (!(d.cdf_hi_ > d.cdf_lo_))
      throw ConfigError("truncated_normal: truncation window has no mass");
    return d;
  }

  static BoundedDistribution truncated_gamma(double shape, double scale, double t_lo,
                                             double t_hi) {
    if (!(shape > 0) || !(scale > 0))
      throw ConfigError("truncated_gamma: shape and scale must be > 0");
    if (!(t_lo < t_hi) || t_lo < 0)
      throw ConfigError("truncated_gamma: need 0 <= t_l < t_u");
    BoundedDistribution d;
    d.kind_ = DistKind::truncated_gamma;
    d.p_[0] = shape;
    d.p_[1] = scale;
    d.p_[2] = t_lo;
    d.p_[3] = t_hi;
    d.lo_ = t_lo;
    d.hi_ = t_hi;
    const boost::math::gamma_distribution<> base(shape, scale);
    d.cdf_lo_ = boost::math::cdf(base, t_lo);
    d.cdf_hi_ = boost::math::cdf(base, t_hi);
    if (!(d.cdf_hi_ > d.cdf_lo_))
      throw ConfigError("truncated_gamma: truncation window has no mass");
    return d;
  }

  // Two-point law on {lo, hi} with P(hi) = p. Not part of the experiment
  // presets; exists for analytic oracles in tests.
  static BoundedDistribution bernoulli_scaled(double p, double lo, double hi) {
    if (!(p >= 0 && p <= 1)) throw ConfigError("bernoulli_scaled: p in [0,1] required");
    if (!(lo <= hi)) throw ConfigError("bernoulli_scaled: need lo <= hi");
    BoundedDistribution d;
    d.kind_ = DistKind::bernoulli_scaled;
    d.p_[0] = p;
    d.p_[1] = lo;
    d.p_[2] = hi;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
  }

  DistKind kind() const { return kind_; }
  double param(int i) const { return p_[i]; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }

  double sample(RandomStream& rng) const {
    const double v = draw(rng);
    // Inverse-CDF transforms can land a hair outside the window.
    return v < lo_ ? lo_ : (v > hi_ ? hi_ : v);
  }

  // Exact closed forms for uniform/bernoulli_scaled; adaptive Gauss-Kronrod
  // quadrature over the truncated density for the truncated kinds, so that
  // regret accounting is deterministic.
  RawMoments raw_moments() const {
    RawMoments rm;
    switch (kind_) {
      case DistKind::uniform: {
        const double l = p_[0], u = p_[1];
        rm.m1 = 0.5 * (l + u);
        rm.m2 = power_mean(l, u, 2);
        rm.m3 = power_mean(l, u, 3);
        rm.m4 = power_mean(l, u, 4);
        return rm;
      }
      case DistKind::bernoulli_scaled: {
        const double p = p_[0], lo = p_[1], hi = p_[2];
        auto mom = [&](int k) {
          return (1 - p) * std::pow(lo, k) + p * std::pow(hi, k);
        };
        rm.m1 = mom(1);
        rm.m2 = mom(2);
        rm.m3 = mom(3);
        rm.m4 = mom(4);
        return rm;
      }
      case DistKind::truncated_normal: {
        const boost::math::normal_distribution<> base(p_[0], std::sqrt(p_[1]));
        return quadrature_moments([&](double x) { return boost::math::pdf(base, x); });
      }
      case DistKind::truncated_gamma: {
        const boost::math::gamma_distribution<> base(p_[0], p_[1]);
        return quadrature_moments([&](double x) { return boost::math::pdf(base, x); });
      }
    }
    throw NumericError("unreachable distribution kind");
  }

 private:
  BoundedDistribution() = default;

  double draw(RandomStream& rng) const {
    const double u01 = rng.next_double();
    switch (kind_) {
      case DistKind::uniform:
        return p_[0] + (p_[1] - p_[0]) * u01;
      case DistKind::bernoulli_scaled:
        return u01 < p_[0] ? p_[2] : p_[1];
      case DistKind::truncated_normal: {
        const boost::math::normal_distribution<> base(p_[0], std::sqrt(p_[1]));
        const double p = clamp01(cdf_lo_ + u01 * (cdf_hi_ - cdf_lo_));
        return boost::math::quantile(base, p);
      }
      case DistKind::truncated_gamma: {
        const boost::math::gamma_distribution<> base(p_[0], p_[1]);
        const double p = clamp01(cdf_lo_ + u01 * (cdf_hi_ - cdf_lo_));
        return boost::math::quantile(base, p);
      }
    }
    throw NumericError("unreachable distribution kind");
  }

  static double clamp01(double p) {
    const double eps = 1e-15;
    return p < eps ? eps : (p > 1 - eps ? 1 - eps : p);
  }

  // (1/(u-l)) * \int_l^u x^k dx, written to stay stable when u ~ l.
  static double power_mean(double l, double u, int k) {
    if (u == l) return std::pow(l, k);
    double acc = 0;  // (u^{k+1} - l^{k+1}) / ((k+1)(u-l)) = sum_j u^j l^{k-j} / (k+1)
    for (int j = 0; j <= k; ++j) acc += std::pow(u, j) * std::pow(l, k - j);
    return acc / (k + 1);
  }

  template <typename Pdf>
  RawMoments quadrature_moments(const Pdf& pdf) const {
    using boost::math::quadrature::gauss_kronrod;
    const double tol = 1e-10;
    double err = 0;
    auto integrate = [&](auto f) {
      const double v =
          gauss_kronrod<double, 61>::integrate(f, lo_, hi_, 15, tol, &err);
      if (!std::isfinite(v) || (std::abs(v) > 1e-12 && err / std::abs(v) > 1e-8))
        throw NumericError("moment quadrature did not converge for " +
                           std::string(dist_kind_name(kind_)));
      return v;
    };
    const double z = integrate([&](double x) { return pdf(x); });
    if (!(z > 0)) throw NumericError("truncated density has zero mass");
    RawMoments rm;
    rm.m1 = integrate([&](double x) { return x * pdf(x); }) / z;
    rm.m2 = integrate([&](double x) { return x * x * pdf(x); }) / z;
    rm.m3 = integrate([&](double x) { return x * x * x * pdf(x); }) / z;
    rm.m4 = integrate([&](double x) { return x * x * x * x * pdf(x); }) / z;
    return rm;
  }

  DistKind kind_ = DistKind::uniform;
  double p_[4] = {0, 0, 0, 0};
  double lo_ = 0, hi_ = 0;
  double cdf_lo_ = 0, cdf_hi_ = 1;
};

}  // namespace riskbandits

#endif
