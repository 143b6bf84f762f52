#ifndef RISKBANDITS_CONFIDENCE_HPP
#define RISKBANDITS_CONFIDENCE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "riskbandits/streaming_moments.hpp"

namespace riskbandits {

// Hoeffding/McDiarmid deviation scale sqrt(2 log t / s), natural log.
inline double confidence_radius(std::int64_t s, std::int64_t t) {
  if (s < 1) throw std::logic_error("confidence radius requested before first pull");
  if (t < 1) throw std::logic_error("confidence radius needs t >= 1");
  return std::sqrt(2.0 * std::log(static_cast<double>(t)) / static_cast<double>(s));
}

// Path-dependent confidence term. Infeasible means L + V - 3*eps <= 0, in
// which case the arm must be explored and the consuming index is +infinity.
struct ConfidenceTerm {
  double radius = 0;
  double value = 0;
  bool feasible = true;
};

namespace detail {
inline ConfidenceTerm ratio_confidence(double numerator_stat, double variance,
                                       double eps, double L) {
  ConfidenceTerm c;
  c.radius = eps;
  const double denom_gap = L + variance - 3.0 * eps;
  if (denom_gap <= 0) {
    c.feasible = false;
    return c;
  }
  c.value = (variance + numerator_stat + 2.0 * eps + L) * eps /
            ((L + variance) * denom_gap);
  return c;
}
}  // namespace detail

// RSSR confidence: ((V + X~ + 2e + L) e) / ((L+V)(L+V-3e)).
inline ConfidenceTerm rssr_confidence(const StreamingMoments& m, double eps, double L) {
  return detail::ratio_confidence(m.second_raw_moment(), m.variance(), eps, L);
}

// SR-like confidence: same shape with the sample mean in the numerator.
inline ConfidenceTerm srlike_confidence(const StreamingMoments& m, double eps,
                                        double L) {
  return detail::ratio_confidence(m.mean(), m.variance(), eps, L);
}

struct Estimates {
  double rssr = 0;
  double sr_like = 0;
  double sr = 0;
  double variance = 0;
};

inline Estimates estimates(const StreamingMoments& m, double L) {
  const double v = m.variance();  // throws for count < 2
  const double x = m.mean();
  Estimates e;
  e.variance = v;
  e.rssr = x * x / (L + v);
  e.sr_like = x / (L + v);
  e.sr = x / (L + std::sqrt(v));
  return e;
}

}  // namespace riskbandits

#endif
