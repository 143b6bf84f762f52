#ifndef RISKBANDITS_CONFIG_HPP
#define RISKBANDITS_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskbandits/presets.hpp"

namespace riskbandits {

// Fully resolved run description: either loaded from JSON or expanded from a
// named preset.
struct RunConfig {
  Mode mode = Mode::rm;
  std::optional<std::string> preset;
  BanditInstance instance;
  std::vector<RmPolicyKind> rm_policies;
  std::vector<BaiKind> bai_algos;
  std::int64_t n = 0;
  int replications = 0;
  std::uint64_t seed = 1;
  double delta_pilot = 0;  // 0 -> policy default pilot length
  std::string output_dir = "out";
  bool bounds_overlay = true;
  SurLog surlog = SurLog::logbar;
};

namespace detail {

inline double finite_number(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("'" + key + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError("'" + key + "' must be finite");
  return v;
}

inline void reject_unknown(const nlohmann::json& obj,
                           const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key))
      throw ConfigError("unknown key '" + key + "' in " + where);
}

inline BoundedDistribution parse_arm(const nlohmann::json& a) {
  if (!a.is_object() || !a.contains("kind"))
    throw ConfigError("each arm needs a 'kind'");
  const std::string kind = a.at("kind").get<std::string>();
  if (kind == "uniform") {
    reject_unknown(a, {"kind", "lo", "hi"}, "uniform arm");
    return BoundedDistribution::uniform(finite_number(a.at("lo"), "lo"),
                                        finite_number(a.at("hi"), "hi"));
  }
  if (kind == "truncated_normal") {
    reject_unknown(a, {"kind", "loc", "var", "t_lo", "t_hi"}, "truncated_normal arm");
    return BoundedDistribution::truncated_normal(
        finite_number(a.at("loc"), "loc"), finite_number(a.at("var"), "var"),
        finite_number(a.at("t_lo"), "t_lo"), finite_number(a.at("t_hi"), "t_hi"));
  }
  if (kind == "truncated_gamma") {
    reject_unknown(a, {"kind", "shape", "scale", "t_lo", "t_hi"}, "truncated_gamma arm");
    return BoundedDistribution::truncated_gamma(
        finite_number(a.at("shape"), "shape"), finite_number(a.at("scale"), "scale"),
        finite_number(a.at("t_lo"), "t_lo"), finite_number(a.at("t_hi"), "t_hi"));
  }
  if (kind == "bernoulli_scaled") {
    reject_unknown(a, {"kind", "p", "lo", "hi"}, "bernoulli_scaled arm");
    return BoundedDistribution::bernoulli_scaled(finite_number(a.at("p"), "p"),
                                                 finite_number(a.at("lo"), "lo"),
                                                 finite_number(a.at("hi"), "hi"));
  }
  throw ConfigError("unknown arm kind '" + kind + "'");
}

inline RmPolicyKind parse_rm_policy(const std::string& s) {
  for (int i = 0; i < 5; ++i)
    if (s == rm_policy_name(static_cast<RmPolicyKind>(i)))
      return static_cast<RmPolicyKind>(i);
  throw ConfigError("unknown policy '" + s + "'");
}

inline BaiKind parse_bai_algo(const std::string& s) {
  for (int i = 0; i < 4; ++i)
    if (s == bai_kind_name(static_cast<BaiKind>(i)))
      return static_cast<BaiKind>(i);
  throw ConfigError("unknown BAI algorithm '" + s + "'");
}

inline SurLog parse_surlog(const std::string& s) {
  if (s == "logbar") return SurLog::logbar;
  if (s == "log2") return SurLog::log2;
  if (s == "ln") return SurLog::ln;
  throw ConfigError("surlog must be one of logbar|log2|ln");
}

inline nlohmann::json arm_to_json(const BoundedDistribution& a) {
  nlohmann::json j;
  j["kind"] = dist_kind_name(a.kind());
  switch (a.kind()) {
    case DistKind::uniform:
      j["lo"] = a.param(0);
      j["hi"] = a.param(1);
      break;
    case DistKind::truncated_normal:
      j["loc"] = a.param(0);
      j["var"] = a.param(1);
      j["t_lo"] = a.param(2);
      j["t_hi"] = a.param(3);
      break;
    case DistKind::truncated_gamma:
      j["shape"] = a.param(0);
      j["scale"] = a.param(1);
      j["t_lo"] = a.param(2);
      j["t_hi"] = a.param(3);
      break;
    case DistKind::bernoulli_scaled:
      j["p"] = a.param(0);
      j["lo"] = a.param(1);
      j["hi"] = a.param(2);
      break;
  }
  return j;
}

}  // namespace detail

inline RunConfig config_from_preset(const std::string& name) {
  const ResolvedPreset p = resolve_preset(name);
  RunConfig c;
  c.mode = p.mode;
  c.preset = name;
  c.instance = p.instance;
  c.rm_policies = p.rm_policies;
  c.bai_algos = p.bai_algos;
  c.n = p.n;
  c.replications = p.replications;
  c.surlog = p.surlog;
  return c;
}

inline RunConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  detail::reject_unknown(j,
                         {"mode", "preset", "instance", "policies", "n",
                          "replications", "seed", "L", "delta_pilot", "output_dir",
                          "bounds_overlay", "surlog"},
                         "config");
  if (j.contains("preset") && j.contains("instance"))
    throw ConfigError("'preset' and 'instance' are mutually exclusive");

  RunConfig c;
  if (j.contains("preset")) {
    c = config_from_preset(j.at("preset").get<std::string>());
  } else {
    if (!j.contains("mode")) throw ConfigError("'mode' is required without a preset");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "rm")
      c.mode = Mode::rm;
    else if (mode == "bai")
      c.mode = Mode::bai;
    else
      throw ConfigError("mode must be 'rm' or 'bai'");
    if (!j.contains("instance")) throw ConfigError("'instance' is required");
    const auto& inst = j.at("instance");
    detail::reject_unknown(inst, {"arms"}, "instance");
    if (!inst.contains("arms") || !inst.at("arms").is_array())
      throw ConfigError("instance.arms must be an array");
    std::vector<BoundedDistribution> arms;
    for (const auto& a : inst.at("arms")) arms.push_back(detail::parse_arm(a));
    const double L =
        j.contains("L") ? detail::finite_number(j.at("L"), "L") : 1.0;
    c.instance = make_instance(std::move(arms), L);
    if (!j.contains("policies")) throw ConfigError("'policies' is required");
    for (const auto& p : j.at("policies")) {
      const std::string s = p.get<std::string>();
      if (c.mode == Mode::rm)
        c.rm_policies.push_back(detail::parse_rm_policy(s));
      else
        c.bai_algos.push_back(detail::parse_bai_algo(s));
    }
    if ((c.mode == Mode::rm && c.rm_policies.empty()) ||
        (c.mode == Mode::bai && c.bai_algos.empty()))
      throw ConfigError("'policies' must be non-empty");
  }
  if (j.contains("mode") && c.preset) {
    // Echoing the preset's mode is allowed, contradicting it is not.
    const std::string mode = j.at("mode").get<std::string>();
    if ((mode == "rm") != (c.mode == Mode::rm))
      throw ConfigError("'mode' contradicts the preset");
  }
  if (j.contains("L") && c.preset)
    throw ConfigError("'L' cannot override a preset instance");
  if (j.contains("n")) {
    c.n = static_cast<std::int64_t>(detail::finite_number(j.at("n"), "n"));
    if (c.n < 1) throw ConfigError("n must be >= 1");
  }
  if (j.contains("replications")) {
    c.replications =
        static_cast<int>(detail::finite_number(j.at("replications"), "replications"));
    if (c.replications < 1) throw ConfigError("replications must be >= 1 (R >= 1)");
  }
  if (j.contains("seed"))
    c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("delta_pilot")) {
    c.delta_pilot = detail::finite_number(j.at("delta_pilot"), "delta_pilot");
    if (c.delta_pilot < 0 || c.delta_pilot > 1)
      throw ConfigError("delta_pilot must lie in [0, 1]");
  }
  if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("bounds_overlay")) {
    if (!j.at("bounds_overlay").is_boolean())
      throw ConfigError("bounds_overlay must be a boolean");
    c.bounds_overlay = j.at("bounds_overlay").get<bool>();
  }
  if (j.contains("surlog"))
    c.surlog = detail::parse_surlog(j.at("surlog").get<std::string>());

  if (c.mode == Mode::rm) {
    validate_for_rm(c.instance);
    if (c.n < 2ll * c.instance.K())
      throw ConfigError("RM runs need n >= 2K for pilot feasibility");
  }
  if (c.n < 1) throw ConfigError("n must be >= 1");
  if (c.replications < 1) throw ConfigError("replications must be >= 1 (R >= 1)");
  return c;
}

inline RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

// Resolved-config echo for the run manifest.
inline nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["mode"] = c.mode == Mode::rm ? "rm" : "bai";
  if (c.preset) j["preset"] = *c.preset;
  nlohmann::json arms = nlohmann::json::array();
  for (const auto& a : c.instance.arms) arms.push_back(detail::arm_to_json(a));
  j["instance"] = {{"arms", arms}};
  j["L"] = c.instance.L;
  nlohmann::json pols = nlohmann::json::array();
  if (c.mode == Mode::rm)
    for (const auto p : c.rm_policies) pols.push_back(rm_policy_name(p));
  else
    for (const auto a : c.bai_algos) pols.push_back(bai_kind_name(a));
  j["policies"] = pols;
  j["n"] = c.n;
  j["replications"] = c.replications;
  j["seed"] = c.seed;
  j["delta_pilot"] = c.delta_pilot;
  j["output_dir"] = c.output_dir;
  j["bounds_overlay"] = c.bounds_overlay;
  j["surlog"] = surlog_name(c.surlog);
  return j;
}

}  // namespace riskbandits

#endif
