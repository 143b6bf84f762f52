#ifndef RISKBANDITS_BOUNDS_HPP
#define RISKBANDITS_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "riskbandits/bai_policies.hpp"
#include "riskbandits/instance.hpp"

namespace riskbandits {

enum class Theorem { t1, t3, t5, t6, t7, t8 };

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t1: return "t1";
    case Theorem::t3: return "t3";
    case Theorem::t5: return "t5";
    case Theorem::t6: return "t6";
    case Theorem::t7: return "t7";
    case Theorem::t8: return "t8";
  }
  return "?";
}

// ---- regret-minimization overlays -------------------------------------------

// Expected sub-optimal pull bound for the variance objective:
// 8 log n / delta^2 + 1 + pi^2/3.
inline double pull_bound_vv(double gap, std::int64_t n) {
  const double logn = std::log(static_cast<double>(n));
  return 8.0 * logn / (gap * gap) + 1.0 + std::numbers::pi * std::numbers::pi / 3.0;
}

// Shared pull bound shape of the SR-like and RSSR regret theorems:
// max{ 18 log n / L^2, 8 log n / (gap * (mu4 + (var + L)^2)) } + 1 + pi^2/3.
inline double pull_bound_sr(double gap, double mu4, double variance, double L,
                            std::int64_t n) {
  const double logn = std::log(static_cast<double>(n));
  const double a = 18.0 * logn / (L * L);
  const double scale = mu4 + (variance + L) * (variance + L);
  const double b = 8.0 * logn / (gap * scale);
  return std::max(a, b) + 1.0 + std::numbers::pi * std::numbers::pi / 3.0;
}

struct RegretBound {
  std::vector<double> per_arm_pulls;  // 0 for the optimal arm
  double total_regret = 0;
};

// Closed-form regret overlay for Theorems 1, 3, and 5, evaluated with true
// instance moments.
inline RegretBound regret_bound(Theorem thm, const BanditInstance& inst,
                                std::int64_t n) {
  Objective obj;
  switch (thm) {
    case Theorem::t1: obj = Objective::variance; break;
    case Theorem::t3: obj = Objective::sr_like; break;
    case Theorem::t5: obj = Objective::rssr; break;
    default: throw ConfigError("regret_bound handles t1/t3/t5 only");
  }
  const GapResult g = gaps(inst, obj);
  RegretBound out;
  out.per_arm_pulls.assign(inst.K(), 0.0);
  for (int i = 0; i < inst.K(); ++i) {
    if (g.gaps[i] <= 0) continue;
    const ArmTruth& t = inst.truths[i];
    const double pulls =
        thm == Theorem::t1
            ? pull_bound_vv(g.gaps[i], n)
            : pull_bound_sr(g.gaps[i], t.fourth_central_moment, t.variance, inst.L, n);
    out.per_arm_pulls[i] = pulls;
    out.total_regret += g.gaps[i] * pulls;
  }
  return out;
}

// ---- best-arm-identification bounds ----------------------------------------

// Positive root of the confidence-term quadratic
// ((V + Xt + 2e + L) e) / ((L+V)(L+V-3e)) = gap/2, with true moments
// substituted for the path-dependent estimators.
inline double bai_epsilon_root(double gap, double variance, double second_raw,
                               double L) {
  const double a = (1.5 * gap + 1.0) * (variance + L) + second_raw;
  const double b = 4.0 * gap * (variance + L) * (variance + L);
  return (-a + std::sqrt(a * a + b)) / 4.0;
}

struct ErrorBound {
  std::vector<double> per_phase;
  double raw = 0;      // may exceed 1
  double clamped = 1;  // min(raw, 1), >= 0
  bool trivial = false;  // zero gaps: no information, bound reported as 1
};

namespace detail {

// Arms sorted by descending true objective; entry 0 is the optimal arm.
struct SortedTruths {
  std::vector<int> order;
  std::vector<double> gap;  // gap[r] for rank r (gap[0] == 0)
  std::vector<double> variance;
  std::vector<double> second_raw;
};

inline SortedTruths sort_by_objective(const BanditInstance& inst, Objective obj) {
  SortedTruths s;
  const int K = inst.K();
  s.order.resize(K);
  for (int i = 0; i < K; ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return objective_value(inst.truths[a], obj) > objective_value(inst.truths[b], obj);
  });
  const double best = objective_value(inst.truths[s.order[0]], obj);
  for (int r = 0; r < K; ++r) {
    const ArmTruth& t = inst.truths[s.order[r]];
    s.gap.push_back(std::max(0.0, best - objective_value(t, obj)));
    s.variance.push_back(t.variance);
    s.second_raw.push_back(t.variance + t.mean * t.mean);
  }
  return s;
}

}  // namespace detail

// Theorem-style error-probability bounds for the BAI algorithms, evaluated
// from true gaps and moments.
inline ErrorBound eval_error_bound(BaiKind kind, const BanditInstance& inst,
                                   std::int64_t n, SurLog surlog = SurLog::logbar) {
  const int K = inst.K();
  const Objective obj = kind == BaiKind::shvv ? Objective::variance : Objective::rssr;
  const detail::SortedTruths s = detail::sort_by_objective(inst, obj);
  ErrorBound out;
  if (s.gap[1] <= 0) {
    out.trivial = true;
    out.raw = 1;
    out.clamped = 1;
    return out;
  }
  const double log2K = std::log2(static_cast<double>(K));
  switch (kind) {
    case BaiKind::shvv: {
      // 3 log2(K) exp(-(n - K log2 K)^2 / (n * 8 log2(K) * u^4 * H2)),
      // H2 = max_{rank>=2} rank / gap^2.
      double h2 = 0;
      for (int r = 1; r < K; ++r)
        if (s.gap[r] > 0)
          h2 = std::max(h2, static_cast<double>(r + 1) / (s.gap[r] * s.gap[r]));
      const double u = inst.support_hi;
      const double num = static_cast<double>(n) - K * log2K;
      out.raw = 3.0 * log2K *
                std::exp(-(num * num) /
                         (static_cast<double>(n) * 8.0 * log2K * u * u * u * u * h2));
      out.per_phase.assign(1, out.raw);
      break;
    }
    case BaiKind::shsr: {
      // 6 sum_k exp(-(eps_k^2 / i_k) * n / (2 log2 K)), i_k = K / 2^{k+2},
      // eps_k from the quadratic root at the minimal gap Delta_2.
      const int phases = sh_num_phases(K);
      const double eps =
          bai_epsilon_root(s.gap[1], s.variance[1], s.second_raw[1], inst.L);
      for (int k = 1; k <= phases; ++k) {
        const double ik = static_cast<double>(K) / std::pow(2.0, k + 2);
        const double term = std::exp(-(eps * eps / ik) * static_cast<double>(n) /
                                     (2.0 * log2K));
        out.per_phase.push_back(6.0 * term);
        out.raw += 6.0 * term;
      }
      break;
    }
    case BaiKind::sursr: {
      // 2 sum_k exp(-2 t_k eps(Delta_2)^2), eps the minimum root over arms.
      double eps = std::numeric_limits<double>::infinity();
      for (int r = 0; r < K; ++r)
        eps = std::min(eps, bai_epsilon_root(s.gap[1], s.variance[r],
                                             s.second_raw[r], inst.L));
      const auto cum = sursr_cum_budgets(n, K, surlog);
      for (const std::int64_t tk : cum) {
        const double term =
            2.0 * std::exp(-2.0 * static_cast<double>(tk) * eps * eps);
        out.per_phase.push_back(term);
        out.raw += term;
      }
      break;
    }
    case BaiKind::uniform_alloc:
      throw ConfigError("no theoretical bound for uniform allocation");
  }
  out.clamped = std::clamp(out.raw, 0.0, 1.0);
  return out;
}

}  // namespace riskbandits

#endif
