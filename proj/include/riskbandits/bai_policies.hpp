#ifndef RISKBANDITS_BAI_POLICIES_HPP
#define RISKBANDITS_BAI_POLICIES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "riskbandits/common.hpp"
#include "riskbandits/confidence.hpp"
#include "riskbandits/instance.hpp"
#include "riskbandits/random.hpp"
#include "riskbandits/streaming_moments.hpp"

namespace riskbandits {

enum class BaiKind { shvv, shsr, sursr, uniform_alloc };

inline const char* bai_kind_name(BaiKind k) {
  switch (k) {
    case BaiKind::shvv: return "shvv";
    case BaiKind::shsr: return "shsr";
    case BaiKind::sursr: return "sursr";
    case BaiKind::uniform_alloc: return "uniform";
  }
  return "?";
}

// Variant of the log term in the successive-rejects schedule. The cited
// construction uses logbar(K) = 1/2 + sum_{i=2}^K 1/i; the literal printed
// forms are exposed as switches.
enum class SurLog { logbar, log2, ln };

inline const char* surlog_name(SurLog v) {
  switch (v) {
    case SurLog::logbar: return "logbar";
    case SurLog::log2: return "log2";
    case SurLog::ln: return "ln";
  }
  return "?";
}

inline double surlog_value(int K, SurLog v) {
  switch (v) {
    case SurLog::logbar: {
      double acc = 0.5;
      for (int i = 2; i <= K; ++i) acc += 1.0 / i;
      return acc;
    }
    case SurLog::log2: return std::log2(static_cast<double>(K));
    case SurLog::ln: return std::log(static_cast<double>(K));
  }
  return 1;
}

inline int sh_num_phases(int K) {
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(K)) - 1e-12));
}

// Per-arm pulls in a sequential-halving phase with |A_k| surviving arms:
// floor(n / (|A_k| * log2 K)).
inline std::int64_t sh_phase_budget(std::int64_t n, int active, int K) {
  if (active < 2 || K < 2) throw ConfigError("halving phase needs >= 2 arms");
  const double t = static_cast<double>(n) /
                   (static_cast<double>(active) * std::log2(static_cast<double>(K)));
  const auto pulls = static_cast<std::int64_t>(std::floor(t + 1e-9));
  if (pulls < 1)
    throw ConfigError("budget too small for one pull per arm per halving phase");
  return pulls;
}

// Cumulative successive-rejects budgets t_1..t_{K-1}:
// t_k = ceil((1/logterm(K)) * (n-K)/(K+1-k)).
inline std::vector<std::int64_t> sursr_cum_budgets(std::int64_t n, int K,
                                                   SurLog v = SurLog::logbar) {
  if (K < 2) throw ConfigError("successive rejects needs K >= 2");
  if (n <= K) throw ConfigError("successive rejects needs budget n > K");
  const double lg = surlog_value(K, v);
  std::vector<std::int64_t> t(K - 1);
  for (int k = 1; k <= K - 1; ++k) {
    const double raw = (static_cast<double>(n - K) / (K + 1 - k)) / lg;
    t[k - 1] = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
    if (t[k - 1] < 1) t[k - 1] = 1;
  }
  return t;
}

struct BaiRun {
  BaiKind kind = BaiKind::shsr;
  int recommendation = -1;
  std::int64_t total_pulls = 0;
  std::vector<std::int64_t> pulls;               // final per-arm pull counts
  std::vector<std::vector<int>> active_history;  // A_1, A_2, ...
  std::vector<StreamingMoments> stats;
};

namespace detail {

inline double bai_rank_value(const StreamingMoments& m, BaiKind kind, double L) {
  if (m.count() < 2) return -std::numeric_limits<double>::infinity();
  if (kind == BaiKind::shvv) return m.variance();
  const double x = m.mean();
  return x * x / (L + m.variance());
}

// Keep the `keep` best arms by rank value, lowest arm index first on ties.
inline std::vector<int> top_arms(const std::vector<int>& active,
                                 const std::vector<double>& value, std::size_t keep) {
  std::vector<int> sorted = active;
  std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    if (value[a] != value[b]) return value[a] > value[b];
    return a < b;
  });
  sorted.resize(keep);
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace detail

// Fixed-budget best-arm identification. shvv ranks arms by sample variance,
// shsr/sursr/uniform by the RSSR estimate. Moments accumulate across phases.
inline BaiRun run_bai(BaiKind kind, const BanditInstance& inst, std::int64_t n,
                      RandomStream& rng, SurLog surlog = SurLog::logbar) {
  const int K = inst.K();
  BaiRun run;
  run.kind = kind;
  run.pulls.assign(K, 0);
  run.stats.assign(K, StreamingMoments{});

  auto pull = [&](int arm, std::int64_t times) {
    for (std::int64_t j = 0; j < times && run.total_pulls < n; ++j) {
      run.stats[arm].update(inst.arms[arm].sample(rng));
      ++run.pulls[arm];
      ++run.total_pulls;
    }
  };

  std::vector<int> active(K);
  for (int i = 0; i < K; ++i) active[i] = i;
  run.active_history.push_back(active);

  std::vector<double> value(K);
  auto refresh_values = [&] {
    for (int a : active) value[a] = detail::bai_rank_value(run.stats[a], kind, inst.L);
  };

  switch (kind) {
    case BaiKind::shvv:
    case BaiKind::shsr: {
      const int phases = sh_num_phases(K);
      // Plan the per-phase pulls up front so floor slack can be assigned to
      // the final phase.
      std::vector<int> sizes(phases);
      std::vector<std::int64_t> budget(phases);
      int sz = K;
      std::int64_t planned = 0;
      for (int k = 0; k < phases; ++k) {
        sizes[k] = sz;
        budget[k] = sh_phase_budget(n, sz, K);
        planned += budget[k] * sz;
        sz = (sz + 1) / 2;
      }
      const std::int64_t leftover = n - planned;
      if (leftover > 0) budget[phases - 1] += leftover / sizes[phases - 1];

      for (int k = 0; k < phases; ++k) {
        for (int a : active) pull(a, budget[k]);
        refresh_values();
        active = detail::top_arms(active, value, (active.size() + 1) / 2);
        run.active_history.push_back(active);
      }
      run.recommendation = active.front();
      break;
    }
    case BaiKind::sursr: {
      const std::vector<std::int64_t> cum = sursr_cum_budgets(n, K, surlog);
      std::int64_t prev = 0;
      for (int k = 0; k < K - 1; ++k) {
        for (int a : active) pull(a, cum[k] - prev);
        prev = cum[k];
        refresh_values();
        int worst = active.front();
        for (int a : active)
          if (value[a] < value[worst]) worst = a;  // lowest index wins ties
        active.erase(std::find(active.begin(), active.end(), worst));
        run.active_history.push_back(active);
      }
      run.recommendation = active.front();
      break;
    }
    case BaiKind::uniform_alloc: {
      const std::int64_t per_arm = n / K;
      if (per_arm < 2) throw ConfigError("uniform allocation needs n >= 2K");
      for (int a : active) pull(a, per_arm);
      refresh_values();
      active = detail::top_arms(active, value, 1);
      run.active_history.push_back(active);
      run.recommendation = active.front();
      break;
    }
  }
  return run;
}

}  // namespace riskbandits

#endif
