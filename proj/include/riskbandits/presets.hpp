#ifndef RISKBANDITS_PRESETS_HPP
#define RISKBANDITS_PRESETS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "riskbandits/bai_policies.hpp"
#include "riskbandits/instance.hpp"
#include "riskbandits/random.hpp"
#include "riskbandits/rm_policies.hpp"

namespace riskbandits {

enum class Mode { rm, bai };

struct ResolvedPreset {
  std::string name;
  Mode mode = Mode::rm;
  BanditInstance instance;
  std::vector<RmPolicyKind> rm_policies;
  std::vector<BaiKind> bai_algos;
  std::int64_t n = 0;       // horizon (rm) or budget (bai)
  int replications = 0;
  SurLog surlog = SurLog::logbar;
};

namespace detail {

// Uniform arm matching a requested mean and variance: width 2*sqrt(3 var).
inline BoundedDistribution uniform_mv(double mean, double var) {
  const double h = std::sqrt(3.0 * var);
  return BoundedDistribution::uniform(mean - h, mean + h);
}

// Uniform arm on [0,1]-centered support with a requested variance <= 1/12.
inline BoundedDistribution uniform_centered(double var) {
  const double h = 0.5 * std::sqrt(12.0 * var);
  return BoundedDistribution::uniform(0.5 - h, 0.5 + h);
}

// Uniform arm hitting a target RSSR value gamma2 under regularizer L.
// The variance is chosen small enough that the support stays non-negative:
// sigma^2 = scale * min(0.12, 0.9 * gamma2 * L / (3 - gamma2)) keeps
// mu = sqrt(gamma2 (L + sigma^2)) >= sqrt(3 sigma^2) for gamma2 <= 3 and
// scale <= 1; scale sets the estimation-noise level of the family.
inline BoundedDistribution uniform_rssr_target(double gamma2, double L,
                                               double scale) {
  const double var = scale * std::min(0.12, 0.9 * gamma2 * L / (3.0 - gamma2));
  const double mean = std::sqrt(gamma2 * (L + var));
  return uniform_mv(mean, var);
}

inline std::vector<RmPolicyKind> all_rm_policies() {
  return {RmPolicyKind::ucb_vv, RmPolicyKind::ucb_sr_like, RmPolicyKind::ucb_rssr,
          RmPolicyKind::mod_gra_ucb, RmPolicyKind::mod_mvts};
}

inline std::vector<BaiKind> sr_bai_algos() {
  return {BaiKind::shsr, BaiKind::sursr, BaiKind::uniform_alloc};
}

// K=5/10 uniform family with a constant RSSR gap: arm 1 is the RSSR-optimal
// arm and every suboptimal arm gets a mean giving exactly rssr(optimal) - gap.
// The variance spread mixes low- and high-variance suboptimal arms so that
// the RSSR ordering differs from related risk functionals such as
// mu^2/(L + sigma) or mu^2/sqrt(L + sigma^4).
inline BanditInstance uniform_table_gap(int K, double gap, double L) {
  const std::vector<double> sig2 = {2.7, 0.7, 7.5, 1.2, 3.0,
                                    0.9, 1.6, 2.2, 5.0, 6.2};
  const double g1 = 3.9027;
  std::vector<BoundedDistribution> arms;
  arms.push_back(uniform_mv(std::sqrt(g1 * (L + sig2[0])), sig2[0]));
  for (int i = 1; i < K; ++i)
    arms.push_back(uniform_mv(std::sqrt((g1 - gap) * (L + sig2[i])), sig2[i]));
  return make_instance(std::move(arms), L);
}

// gamma^2 targets for the SR-identification experiment families; targets are
// floored at 0.1 where a printed progression would go non-positive.
inline std::vector<double> sr_gamma_targets(int exp, int K) {
  std::vector<double> g(K);
  g[0] = 1.0;
  for (int i = 1; i < K; ++i) {
    double v = 0;
    switch (exp) {
      case 1: v = 0.9; break;
      case 2: v = i < (K >= 64 ? 30 : K >= 32 ? 14 : 6) ? 0.925 : 0.875; break;
      case 3: v = 1.0 - static_cast<double>(i) / 30.0; break;
      case 4:
      case 5: v = std::pow(0.98, i + 1); break;
      default: throw ConfigError("unknown sr experiment");
    }
    g[i] = std::max(0.1, v);
  }
  return g;
}

// Variance targets for the variance-identification families, floored at 0.005.
inline std::vector<double> shvv_var_targets(int exp, int K) {
  std::vector<double> v(K);
  v[0] = 1.0 / 12.0;
  for (int i = 1; i < K; ++i) {
    double s = 0;
    switch (exp) {
      case 1: s = 1.0 / 15.0; break;
      case 2: s = i < (K >= 64 ? 30 : K >= 32 ? 14 : 6) ? 1.0 / 14.0 : 1.0 / 17.0; break;
      case 3: s = 1.0 / 13.0 - 0.0021 * (i - 1); break;
      case 4: s = std::pow(0.98, i + 1) / 12.0; break;
      default: throw ConfigError("unknown shvv experiment");
    }
    v[i] = std::max(0.005, s);
  }
  return v;
}

// Fixed random instance: K uniform arms with endpoints drawn from [0,1].
inline BanditInstance random_uniform_instance(int K, double L,
                                              std::uint64_t inst_seed) {
  RandomStream rng(inst_seed, 0);
  std::vector<BoundedDistribution> arms;
  for (int i = 0; i < K; ++i) {
    double a = rng.next_double(), b = rng.next_double();
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) b = a + 1e-3;  // degenerate-width guard
    arms.push_back(BoundedDistribution::uniform(a, b));
  }
  return make_instance(std::move(arms), L);
}

}  // namespace detail

inline std::vector<std::string> preset_names() {
  return {"rm-uniform-k2-tight", "rm-uniform-k2-wide", "rm-uniform-k5",
          "rm-uniform-k10",      "rm-tnormal-setA",    "rm-tnormal-setB",
          "rm-tgamma-setA",      "rm-tgamma-setB",     "bai-shvv-exp1",
          "bai-shvv-exp2",       "bai-shvv-exp3",      "bai-shvv-exp4",
          "bai-shvv-exp5",       "bai-sr-exp1",        "bai-sr-exp2",
          "bai-sr-exp3",         "bai-sr-exp4",        "bai-sr-exp5",
          "bai-sr-exp6"};
}

// Resolves a named preset. K_override (BAI families only) switches the arm
// count; 0 keeps the preset default.
inline ResolvedPreset resolve_preset(const std::string& name, int K_override = 0) {
  using detail::uniform_mv;
  ResolvedPreset p;
  p.name = name;
  const double kBaiL = 0.3;

  auto rm_common = [&](BanditInstance inst, std::int64_t horizon) {
    if (K_override != 0) throw ConfigError("K override is only valid for BAI presets");
    p.mode = Mode::rm;
    p.instance = std::move(inst);
    p.rm_policies = detail::all_rm_policies();
    p.n = horizon;
    p.replications = 100;
  };
  auto bai_common = [&](BanditInstance inst, std::int64_t budget,
                        std::vector<BaiKind> algos) {
    p.mode = Mode::bai;
    p.instance = std::move(inst);
    p.bai_algos = std::move(algos);
    p.n = budget;
    p.replications = 10000;
  };
  const int K = K_override != 0 ? K_override : 16;
  if (K_override != 0 && K_override < 2) throw ConfigError("K must be >= 2");

  if (name == "rm-uniform-k2-tight") {
    rm_common(make_instance({uniform_mv(7.0, 14.083), uniform_mv(7.075, 14.97)}, 1.0),
              10000);
  } else if (name == "rm-uniform-k2-wide") {
    rm_common(make_instance({uniform_mv(4.5, 3.0), uniform_mv(4.7, 3.2)}, 0.5), 10000);
  } else if (name == "rm-uniform-k5") {
    rm_common(detail::uniform_table_gap(5, 0.5, 1.0), 10000);
  } else if (name == "rm-uniform-k10") {
    rm_common(detail::uniform_table_gap(10, 0.5, 1.0), 10000);
  } else if (name == "rm-tnormal-setA") {
    rm_common(make_instance({BoundedDistribution::truncated_normal(5.0, 4.0, 1, 7),
                             BoundedDistribution::truncated_normal(5.5, 6.25, 1, 7)},
                            0.5),
              10000);
  } else if (name == "rm-tnormal-setB") {
    rm_common(make_instance({BoundedDistribution::truncated_normal(10.0, 12.0, 1, 20),
                             BoundedDistribution::truncated_normal(10.5, 13.25, 1, 20)},
                            1.0),
              10000);
  } else if (name == "rm-tgamma-setA") {
    rm_common(make_instance({BoundedDistribution::truncated_gamma(2.0, 2.0, 1, 10),
                             BoundedDistribution::truncated_gamma(2.0, 3.0, 1, 10)},
                            0.5),
              10000);
  } else if (name == "rm-tgamma-setB") {
    rm_common(make_instance({BoundedDistribution::truncated_gamma(2.0, 2.0, 1, 10),
                             BoundedDistribution::truncated_gamma(2.0, 3.0, 1, 10)},
                            1.0),
              10000);
  } else if (name.rfind("bai-shvv-exp", 0) == 0) {
    const int exp = name.back() - '0';
    if (exp < 1 || exp > 5 || name.size() != 13)
      throw ConfigError("unknown preset: " + name);
    BanditInstance inst;
    if (exp == 5) {
      inst = detail::random_uniform_instance(K, kBaiL, 20240807);
    } else {
      std::vector<BoundedDistribution> arms;
      for (const double v : detail::shvv_var_targets(exp, K))
        arms.push_back(detail::uniform_centered(v));
      inst = make_instance(std::move(arms), kBaiL);
    }
    bai_common(std::move(inst), 5000, {BaiKind::shvv});
  } else if (name.rfind("bai-sr-exp", 0) == 0) {
    const int exp = name.back() - '0';
    if (exp < 1 || exp > 6 || name.size() != 11)
      throw ConfigError("unknown preset: " + name);
    BanditInstance inst;
    if (exp == 6) {
      inst = detail::random_uniform_instance(K, kBaiL, 20240809);
    } else {
      // Noise level per family: grouped-gap setups (1, 2) are easy and run
      // quietly; the progression setups keep enough noise for visible errors.
      const double scale = exp <= 2 ? 0.1 : exp <= 4 ? 0.3 : 1.0;
      std::vector<BoundedDistribution> arms;
      for (const double g : detail::sr_gamma_targets(exp, K))
        arms.push_back(detail::uniform_rssr_target(g, kBaiL, scale));
      inst = make_instance(std::move(arms), kBaiL);
    }
    // Experiment 5 scales the budget with the arm count; others fix it.
    const std::int64_t budget =
        exp == 5 ? 10000ll * (K <= 16 ? 1 : K <= 32 ? 2 : 3) : 20000ll;
    bai_common(std::move(inst), budget, detail::sr_bai_algos());
  } else {
    throw ConfigError("unknown preset: " + name);
  }
  return p;
}

}  // namespace riskbandits

#endif
