#ifndef RISKBANDITS_REPORT_HPP
#define RISKBANDITS_REPORT_HPP

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "riskbandits/config.hpp"
#include "riskbandits/harness.hpp"

namespace riskbandits {

inline std::string fmt10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct RmRow {
  std::string policy;
  std::int64_t timestep;
  double mean_regret, std_error;
  bool has_bound = false;
  double bound = 0;
};

struct BaiRow {
  std::string policy;
  int K;
  std::int64_t budget;
  int replications;
  double error_prob, ci_halfwidth;
  bool has_bound = false;
  double bound = 0;
};

struct RunResult {
  Mode mode;
  std::vector<RmRow> rm_rows;
  std::vector<BaiRow> bai_rows;
};

inline std::optional<Theorem> rm_overlay_theorem(RmPolicyKind k) {
  switch (k) {
    case RmPolicyKind::ucb_vv: return Theorem::t1;
    case RmPolicyKind::ucb_sr_like: return Theorem::t3;
    case RmPolicyKind::ucb_rssr: return Theorem::t5;
    default: return std::nullopt;
  }
}

inline RunResult execute_run(const RunConfig& cfg, int workers) {
  RunResult res;
  res.mode = cfg.mode;
  if (cfg.mode == Mode::rm) {
    for (const RmPolicyKind kind : cfg.rm_policies) {
      RmExperimentConfig ec;
      ec.kind = kind;
      ec.horizon = cfg.n;
      ec.replications = cfg.replications;
      ec.seed = cfg.seed;
      ec.workers = workers;
      ec.pilot_len = static_cast<std::int64_t>(cfg.delta_pilot * cfg.n);
      if (cfg.bounds_overlay) ec.overlay = rm_overlay_theorem(kind);
      const RmCurve curve = run_rm_experiment(cfg.instance, ec);
      for (std::size_t i = 0; i < curve.checkpoints.size(); ++i) {
        RmRow row;
        row.policy = rm_policy_name(kind);
        row.timestep = curve.checkpoints[i];
        row.mean_regret = curve.mean_regret[i];
        row.std_error = curve.std_error[i];
        if (!curve.bound.empty()) {
          row.has_bound = true;
          row.bound = curve.bound[i];
        }
        res.rm_rows.push_back(std::move(row));
      }
    }
    std::stable_sort(res.rm_rows.begin(), res.rm_rows.end(),
                     [](const RmRow& a, const RmRow& b) {
                       return a.policy != b.policy ? a.policy < b.policy
                                                   : a.timestep < b.timestep;
                     });
  } else {
    for (const BaiKind kind : cfg.bai_algos) {
      BaiExperimentConfig ec;
      ec.kind = kind;
      ec.budget = cfg.n;
      ec.replications = cfg.replications;
      ec.seed = cfg.seed;
      ec.workers = workers;
      ec.surlog = cfg.surlog;
      ec.with_bound = cfg.bounds_overlay;
      const BaiReport rep = run_bai_experiment(cfg.instance, ec);
      BaiRow row;
      row.policy = bai_kind_name(kind);
      row.K = rep.K;
      row.budget = rep.budget;
      row.replications = rep.replications;
      row.error_prob = rep.error_prob;
      row.ci_halfwidth = rep.ci_halfwidth;
      row.has_bound = rep.has_bound;
      row.bound = rep.bound_clamped;
      res.bai_rows.push_back(std::move(row));
    }
    std::stable_sort(res.bai_rows.begin(), res.bai_rows.end(),
                     [](const BaiRow& a, const BaiRow& b) { return a.policy < b.policy; });
  }
  return res;
}

inline std::string to_csv(const RunResult& res) {
  std::ostringstream out;
  if (res.mode == Mode::rm) {
    out << "policy,timestep,mean_regret,stderr,bound_value\n";
    for (const RmRow& r : res.rm_rows)
      out << r.policy << ',' << r.timestep << ',' << fmt10(r.mean_regret) << ','
          << fmt10(r.std_error) << ',' << (r.has_bound ? fmt10(r.bound) : "") << '\n';
  } else {
    out << "policy,K,budget,replications,error_prob,ci_halfwidth,bound_value\n";
    for (const BaiRow& r : res.bai_rows)
      out << r.policy << ',' << r.K << ',' << r.budget << ',' << r.replications << ','
          << fmt10(r.error_prob) << ',' << fmt10(r.ci_halfwidth) << ','
          << (r.has_bound ? fmt10(r.bound) : "") << '\n';
  }
  return out.str();
}

// Re-reads a results.csv so plots never recompute experiment data.
inline RunResult parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV");
  RunResult res;
  const bool rm = line.rfind("policy,timestep", 0) == 0;
  const bool bai = line.rfind("policy,K,budget", 0) == 0;
  if (!rm && !bai) throw ConfigError("unrecognized CSV header: " + line);
  res.mode = rm ? Mode::rm : Mode::bai;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    if (rm) {
      if (f.size() != 5) throw ConfigError("malformed CSV row: " + line);
      RmRow r;
      r.policy = f[0];
      r.timestep = std::stoll(f[1]);
      r.mean_regret = std::stod(f[2]);
      r.std_error = std::stod(f[3]);
      r.has_bound = !f[4].empty();
      if (r.has_bound) r.bound = std::stod(f[4]);
      res.rm_rows.push_back(std::move(r));
    } else {
      if (f.size() != 7) throw ConfigError("malformed CSV row: " + line);
      BaiRow r;
      r.policy = f[0];
      r.K = std::stoi(f[1]);
      r.budget = std::stoll(f[2]);
      r.replications = std::stoi(f[3]);
      r.error_prob = std::stod(f[4]);
      r.ci_halfwidth = std::stod(f[5]);
      r.has_bound = !f[6].empty();
      if (r.has_bound) r.bound = std::stod(f[6]);
      res.bai_rows.push_back(std::move(r));
    }
  }
  return res;
}

// Runs the experiment and writes results.csv + manifest.json under
// cfg.output_dir. Returns the CSV path.
inline std::filesystem::path write_run(const RunConfig& cfg, int workers) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunResult res = execute_run(cfg, workers);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  const auto csv_path = dir / "results.csv";
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw NumericError("cannot write " + csv_path.string());
    out << to_csv(res);
  }
  nlohmann::json manifest;
  manifest["config"] = config_to_json(cfg);
  manifest["version"] = kVersion;
  manifest["wall_time_seconds"] = wall;
  manifest["workers"] = workers;
  {
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out) throw NumericError("cannot write manifest.json");
    out << manifest.dump(2) << '\n';
  }
  return csv_path;
}

}  // namespace riskbandits

#endif
