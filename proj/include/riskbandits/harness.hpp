#ifndef RISKBANDITS_HARNESS_HPP
#define RISKBANDITS_HARNESS_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "riskbandits/bai_policies.hpp"
#include "riskbandits/bounds.hpp"
#include "riskbandits/instance.hpp"
#include "riskbandits/random.hpp"
#include "riskbandits/rm_policies.hpp"

namespace riskbandits {

// Pseudo-regret for a vector of arm pull counts: sum of gap * count.
inline double regret_from_counts(const GapResult& g,
                                 const std::vector<std::int64_t>& counts) {
  double r = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    r += g.gaps[i] * static_cast<double>(counts[i]);
  return r;
}

// Strictly increasing, roughly log-spaced checkpoints ending at horizon.
inline std::vector<std::int64_t> log_checkpoints(std::int64_t horizon,
                                                 int max_points = 512) {
  std::vector<std::int64_t> out;
  if (horizon < 1) return out;
  const double lo = 0.0, hi = std::log(static_cast<double>(horizon));
  std::int64_t prev = 0;
  for (int i = 0; i < max_points; ++i) {
    const double f = max_points == 1 ? 1.0 : static_cast<double>(i) / (max_points - 1);
    auto t = static_cast<std::int64_t>(std::llround(std::exp(lo + f * (hi - lo))));
    t = std::min(std::max<std::int64_t>(t, prev + 1), horizon);
    if (t > prev) out.push_back(t);
    prev = t;
    if (t == horizon) break;
  }
  if (out.empty() || out.back() != horizon) out.push_back(horizon);
  return out;
}

namespace detail {

// Deterministic stream indices: the policy/algorithm ordinal is folded into
// the high bits so distinct policies on the same replication never share a
// stream.
inline std::uint64_t env_stream(int ordinal, int replication) {
  return (static_cast<std::uint64_t>(ordinal) << 32) |
         (2ull * static_cast<std::uint64_t>(replication));
}
inline std::uint64_t policy_stream(int ordinal, int replication) {
  return (static_cast<std::uint64_t>(ordinal) << 32) |
         (2ull * static_cast<std::uint64_t>(replication) + 1ull);
}

// Runs `count` jobs on `workers` threads. Each job writes only its own slot,
// so the final reduction (done by the caller, in job order) is independent of
// the worker count.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

struct RmCurve {
  std::vector<std::int64_t> checkpoints;
  std::vector<double> mean_regret;
  std::vector<double> std_error;
  std::vector<double> bound;  // empty when no overlay requested
};

struct RmExperimentConfig {
  RmPolicyKind kind;
  std::int64_t horizon = 0;
  int replications = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::int64_t pilot_len = 0;  // 0 -> policy default
  double gra_alpha = 0.05;
  std::optional<Theorem> overlay;  // t1/t3/t5
};

inline Objective rm_objective(RmPolicyKind kind) {
  return kind == RmPolicyKind::ucb_vv       ? Objective::variance
         : kind == RmPolicyKind::ucb_sr_like ? Objective::sr_like
                                             : Objective::rssr;
}

inline RmCurve run_rm_experiment(const BanditInstance& inst,
                                 const RmExperimentConfig& cfg) {
  validate_for_rm(inst);
  if (cfg.horizon < 1) throw ConfigError("horizon must be >= 1");
  if (cfg.replications < 1) throw ConfigError("replications must be >= 1");
  const GapResult g = gaps(inst, rm_objective(cfg.kind));
  const auto checkpoints = log_checkpoints(cfg.horizon);
  const int C = static_cast<int>(checkpoints.size());
  const int R = cfg.replications;
  const int ordinal = static_cast<int>(cfg.kind);

  // Per-replication curve values; reduced sequentially afterwards so the
  // result is byte-identical for any worker count.
  std::vector<double> cell(static_cast<std::size_t>(R) * C);
  detail::parallel_for(R, cfg.workers, [&](int r) {
    RandomStream env_rng(cfg.seed, detail::env_stream(ordinal, r));
    RandomStream pol_rng(cfg.seed, detail::policy_stream(ordinal, r));
    RmPolicyConfig pc;
    pc.kind = cfg.kind;
    pc.K = inst.K();
    pc.horizon = cfg.horizon;
    pc.L = inst.L;
    pc.pilot_len = cfg.pilot_len;
    pc.gra_alpha = cfg.gra_alpha;
    RmPolicy policy(pc);
    std::vector<std::int64_t> counts(inst.K(), 0);
    int next_cp = 0;
    for (std::int64_t t = 0; t < cfg.horizon; ++t) {
      const int arm = policy.select_arm(pol_rng);
      policy.observe(arm, inst.arms[arm].sample(env_rng));
      ++counts[arm];
      if (t + 1 == checkpoints[next_cp]) {
        cell[static_cast<std::size_t>(r) * C + next_cp] = regret_from_counts(g, counts);
        ++next_cp;
      }
    }
  });

  RmCurve curve;
  curve.checkpoints = checkpoints;
  curve.mean_regret.resize(C);
  curve.std_error.resize(C);
  for (int c = 0; c < C; ++c) {
    double sum = 0;
    for (int r = 0; r < R; ++r) sum += cell[static_cast<std::size_t>(r) * C + c];
    const double mean = sum / R;
    double sq = 0;
    for (int r = 0; r < R; ++r) {
      const double d = cell[static_cast<std::size_t>(r) * C + c] - mean;
      sq += d * d;
    }
    curve.mean_regret[c] = mean;
    curve.std_error[c] = R > 1 ? std::sqrt(sq / (R - 1.0) / R) : 0.0;
  }
  if (cfg.overlay) {
    curve.bound.resize(C);
    for (int c = 0; c < C; ++c)
      curve.bound[c] = regret_bound(*cfg.overlay, inst, checkpoints[c]).total_regret;
  }
  return curve;
}

struct BaiExperimentConfig {
  BaiKind kind;
  std::int64_t budget = 0;
  int replications = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  SurLog surlog = SurLog::logbar;
  bool with_bound = true;
};

struct BaiReport {
  BaiKind kind;
  int K = 0;
  std::int64_t budget = 0;
  int replications = 0;
  double error_prob = 0;
  double ci_halfwidth = 0;  // normal-approx 95% half-width
  double bound_raw = 0;
  double bound_clamped = 1;
  bool has_bound = false;
};

inline BaiReport run_bai_experiment(const BanditInstance& inst,
                                    const BaiExperimentConfig& cfg) {
  if (cfg.replications < 1) throw ConfigError("replications must be >= 1");
  const Objective obj =
      cfg.kind == BaiKind::shvv ? Objective::variance : Objective::rssr;
  const int best = optimal_arm(inst, obj);
  // BAI ordinals live above the RM policy range.
  const int ordinal = 16 + static_cast<int>(cfg.kind);
  std::vector<std::uint8_t> err(cfg.replications, 0);
  detail::parallel_for(cfg.replications, cfg.workers, [&](int r) {
    RandomStream env_rng(cfg.seed, detail::env_stream(ordinal, r));
    const BaiRun run = run_bai(cfg.kind, inst, cfg.budget, env_rng, cfg.surlog);
    err[r] = run.recommendation == best ? 0 : 1;
  });
  std::int64_t errors = 0;
  for (const auto e : err) errors += e;
  BaiReport rep;
  rep.kind = cfg.kind;
  rep.K = inst.K();
  rep.budget = cfg.budget;
  rep.replications = cfg.replications;
  rep.error_prob = static_cast<double>(errors) / cfg.replications;
  rep.ci_halfwidth =
      1.96 * std::sqrt(rep.error_prob * (1.0 - rep.error_prob) / cfg.replications);
  if (cfg.with_bound && cfg.kind != BaiKind::uniform_alloc) {
    const ErrorBound b = eval_error_bound(cfg.kind, inst, cfg.budget, cfg.surlog);
    rep.bound_raw = b.raw;
    rep.bound_clamped = b.clamped;
    rep.has_bound = true;
  }
  return rep;
}

}  // namespace riskbandits

#endif
