#ifndef RISKBANDITS_RM_POLICIES_HPP
#define RISKBANDITS_RM_POLICIES_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>

#include "riskbandits/common.hpp"
#include "riskbandits/confidence.hpp"
#include "riskbandits/random.hpp"
#include "riskbandits/streaming_moments.hpp"

namespace riskbandits {

enum class RmPolicyKind { ucb_vv, ucb_sr_like, ucb_rssr, mod_gra_ucb, mod_mvts };

inline const char* rm_policy_name(RmPolicyKind k) {
  switch (k) {
    case RmPolicyKind::ucb_vv: return "ucb_vv";
    case RmPolicyKind::ucb_sr_like: return "ucb_sr_like";
    case RmPolicyKind::ucb_rssr: return "ucb_rssr";
    case RmPolicyKind::mod_gra_ucb: return "mod_gra_ucb";
    case RmPolicyKind::mod_mvts: return "mod_mvts";
  }
  return "?";
}

inline constexpr double kInfiniteIndex = std::numeric_limits<double>::infinity();

// Lazily memoized chi-square quantiles at a fixed probability, keyed by
// degrees of freedom. One cache per policy instance; not shared.
class ChiSquareQuantiles {
 public:
  explicit ChiSquareQuantiles(double prob) : prob_(prob) {}

  double operator()(std::int64_t dof) {
    const auto idx = static_cast<std::size_t>(dof);
    if (idx >= values_.size()) values_.resize(idx + 1, -1.0);
    if (values_[idx] < 0)
      values_[idx] = boost::math::quantile(
          boost::math::chi_squared_distribution<>(static_cast<double>(dof)), prob_);
    return values_[idx];
  }

 private:
  double prob_;
  std::vector<double> values_;
};

// ---- per-arm index formulas -------------------------------------------------

inline double index_ucb_vv(const StreamingMoments& m, std::int64_t t) {
  if (m.count() < 2) return kInfiniteIndex;
  return m.variance() + confidence_radius(m.count(), t);
}

inline double index_sr_like(const StreamingMoments& m, std::int64_t t, double L) {
  if (m.count() < 2) return kInfiniteIndex;
  const double eps = confidence_radius(m.count(), t);
  const ConfidenceTerm c = srlike_confidence(m, eps, L);
  if (!c.feasible) return kInfiniteIndex;
  return m.mean() / (L + m.variance()) + c.value;
}

inline double index_rssr(const StreamingMoments& m, std::int64_t t, double L) {
  if (m.count() < 2) return kInfiniteIndex;
  const double eps = confidence_radius(m.count(), t);
  const ConfidenceTerm c = rssr_confidence(m, eps, L);
  if (!c.feasible) return kInfiniteIndex;
  return m.mean() * m.mean() / (L + m.variance()) + c.value;
}

inline double index_mod_gra_ucb(const StreamingMoments& m, std::int64_t t, double L,
                                ChiSquareQuantiles& chi2) {
  if (m.count() < 2) return kInfiniteIndex;
  const double s = static_cast<double>(m.count());
  const double v = m.variance();
  const double widened = m.mean() + std::sqrt(std::log(static_cast<double>(t)) / s);
  const double denom = std::sqrt(L + (s - 1.0) * v * v / chi2(m.count() - 1));
  return widened * widened / denom;
}

// One posterior draw of the Modified-MVTS index; consumes two uniforms.
inline double index_mod_mvts(double sample_mean, std::int64_t s, double post_alpha,
                             double post_beta, double L, RandomStream& rng) {
  static const boost::math::normal_distribution<> std_normal(0, 1);
  const double z = boost::math::quantile(std_normal, rng.next_double());
  const double theta = sample_mean + z / std::sqrt(static_cast<double>(s));
  const double tau =
      boost::math::gamma_p_inv(post_alpha, rng.next_double()) / post_beta;
  return theta * theta / (L + std::sqrt(1.0 / tau));
}

// ---- policy state machine ---------------------------------------------------

struct RmPolicyConfig {
  RmPolicyKind kind = RmPolicyKind::ucb_rssr;
  int K = 2;
  std::int64_t horizon = 0;
  double L = 1.0;
  std::int64_t pilot_len = 0;  // 0 -> default 2K (two pulls per arm)
  double gra_alpha = 0.05;
};

// Common select/observe interface for the five regret-minimization policies.
// Round-robin over arms during the pilot, index argmax afterwards, with the
// lowest arm index winning ties and infeasible-confidence arms treated as
// having an infinite index.
class RmPolicy {
 public:
  explicit RmPolicy(const RmPolicyConfig& cfg)
      : cfg_(cfg), arms_(cfg.K), chi2_(1.0 - cfg.gra_alpha) {
    if (cfg_.K < 2) throw ConfigError("policy needs K >= 2");
    if (cfg_.pilot_len <= 0) cfg_.pilot_len = 2LL * cfg_.K;
    if (cfg_.horizon > 0 && cfg_.pilot_len < 2LL * cfg_.K)
      throw ConfigError("pilot must give every arm at least 2 pulls");
    if (cfg_.horizon > 0 && cfg_.pilot_len > cfg_.horizon)
      throw ConfigError("pilot longer than horizon");
    if (cfg_.kind == RmPolicyKind::mod_mvts) {
      post_alpha_.assign(cfg_.K, 0.5);
      post_beta_.assign(cfg_.K, 0.5);
    }
  }

  RmPolicyKind kind() const { return cfg_.kind; }
  std::int64_t t() const { return t_; }
  std::int64_t pilot_len() const { return cfg_.pilot_len; }
  const StreamingMoments& arm_stats(int i) const { return arms_[i]; }

  int select_arm(RandomStream& rng) {
    if (cfg_.horizon > 0 && t_ >= cfg_.horizon)
      throw std::logic_error("select_arm called past the horizon");
    const std::int64_t step = t_ + 1;
    if (step <= cfg_.pilot_len) {
      last_selected_ = static_cast<int>(step % cfg_.K);  // (t mod K) + 1, 0-based
      return last_selected_;
    }
    double best = -kInfiniteIndex;
    int best_arm = 0;
    for (int i = 0; i < cfg_.K; ++i) {
      const double b = arm_index(i, rng);
      if (b > best) {
        best = b;
        best_arm = i;
      }
    }
    last_selected_ = best_arm;
    return best_arm;
  }

  void observe(int arm, double reward) {
    if (arm < 0 || arm >= cfg_.K) throw std::out_of_range("arm index out of range");
    if (arm != last_selected_)
      throw std::logic_error("observe() must follow select_arm() for the same arm");
    if (cfg_.kind == RmPolicyKind::mod_mvts) {
      const double prev_mean = arms_[arm].mean();
      arms_[arm].update(reward);
      // Normal-Gamma conjugate update on the precision prior.
      post_alpha_[arm] += 0.5;
      post_beta_[arm] += 0.5 * (reward - prev_mean) * (reward - arms_[arm].mean());
    } else {
      arms_[arm].update(reward);
    }
    ++t_;
    last_selected_ = -1;
  }

  double arm_index(int i, RandomStream& rng) {
    const StreamingMoments& m = arms_[i];
    switch (cfg_.kind) {
      case RmPolicyKind::ucb_vv: return index_ucb_vv(m, t_);
      case RmPolicyKind::ucb_sr_like: return index_sr_like(m, t_, cfg_.L);
      case RmPolicyKind::ucb_rssr: return index_rssr(m, t_, cfg_.L);
      case RmPolicyKind::mod_gra_ucb:
        return index_mod_gra_ucb(m, t_, cfg_.L, chi2_);
      case RmPolicyKind::mod_mvts:
        if (m.count() < 1) return kInfiniteIndex;  // forced selection
        return index_mod_mvts(m.mean(), m.count(), post_alpha_[i], post_beta_[i],
                              cfg_.L, rng);
    }
    return 0;
  }

 private:
  RmPolicyConfig cfg_;
  std::vector<StreamingMoments> arms_;
  std::vector<double> post_alpha_, post_beta_;
  ChiSquareQuantiles chi2_;
  std::int64_t t_ = 0;
  int last_selected_ = -1;
};

}  // namespace riskbandits

#endif
