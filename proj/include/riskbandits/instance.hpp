#ifndef RISKBANDITS_INSTANCE_HPP
#define RISKBANDITS_INSTANCE_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "riskbandits/common.hpp"
#include "riskbandits/distributions.hpp"

namespace riskbandits {

enum class Objective { variance, sr_like, rssr };

inline const char* objective_name(Objective o) {
  switch (o) {
    case Objective::variance: return "variance";
    case Objective::sr_like: return "sr_like";
    case Objective::rssr: return "rssr";
  }
  return "?";
}

// A K-armed problem with its true moments precomputed.
struct BanditInstance {
  std::vector<BoundedDistribution> arms;
  double L = 1.0;
  std::vector<ArmTruth> truths;
  double support_lo = 0;
  double support_hi = 1;

  int K() const { return static_cast<int>(arms.size()); }
};

inline BanditInstance make_instance(std::vector<BoundedDistribution> arms, double L) {
  if (arms.size() < 2) throw ConfigError("instance needs K >= 2 arms");
  if (!(L > 0)) throw ConfigError("regularizer L must satisfy L > 0");
  BanditInstance inst;
  inst.arms = std::move(arms);
  inst.L = L;
  inst.support_lo = inst.arms.front().support_lo();
  inst.support_hi = inst.arms.front().support_hi();
  inst.truths.reserve(inst.arms.size());
  for (const auto& a : inst.arms) {
    inst.truths.push_back(make_truth(a.raw_moments(), L));
    inst.support_lo = std::min(inst.support_lo, a.support_lo());
    inst.support_hi = std::max(inst.support_hi, a.support_hi());
  }
  if (inst.support_lo < 0)
    throw ConfigError("instance support lower bound must satisfy l >= 0");
  return inst;
}

// The SR-like / RSSR regret theorems assume strictly positive support.
inline void validate_for_rm(const BanditInstance& inst) {
  if (!(inst.support_lo > 0))
    throw ConfigError("RM experiments require support lower bound l > 0");
}

inline double objective_value(const ArmTruth& t, Objective o) {
  switch (o) {
    case Objective::variance: return t.variance;
    case Objective::sr_like: return t.sr_like;
    case Objective::rssr: return t.rssr;
  }
  return 0;
}

inline int optimal_arm(const BanditInstance& inst, Objective o) {
  int best = 0;
  for (int i = 1; i < inst.K(); ++i)
    if (objective_value(inst.truths[i], o) > objective_value(inst.truths[best], o))
      best = i;
  return best;
}

struct GapResult {
  std::vector<double> gaps;  // best objective minus each arm's objective
  int optimal = 0;
  bool tied = false;  // more than one arm attains the maximum
};

inline GapResult gaps(const BanditInstance& inst, Objective o) {
  GapResult r;
  r.optimal = optimal_arm(inst, o);
  const double best = objective_value(inst.truths[r.optimal], o);
  r.gaps.reserve(inst.K());
  int zeros = 0;
  for (int i = 0; i < inst.K(); ++i) {
    double g = best - objective_value(inst.truths[i], o);
    if (g < 0) g = 0;  // guard against rounding
    if (g == 0) ++zeros;
    r.gaps.push_back(g);
  }
  r.tied = zeros > 1;
  return r;
}

}  // namespace riskbandits

#endif
