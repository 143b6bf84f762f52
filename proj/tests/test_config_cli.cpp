#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <string>

#include "riskbandits/config.hpp"
#include "riskbandits/presets.hpp"
#include "riskbandits/report.hpp"
#include "riskbandits/svg.hpp"

using namespace riskbandits;
using nlohmann::json;

namespace {

json minimal_rm_config() {
  return json::parse(R"({
    "mode": "rm",
    "L": 1.0,
    "instance": {
      "arms": [
        {"kind": "uniform", "lo": 1.0, "hi": 3.0},
        {"kind": "uniform", "lo": 1.0, "hi": 2.0}
      ]
    },
    "policies": ["ucb_rssr", "ucb_vv"],
    "n": 100,
    "replications": 3,
    "seed": 11
  })");
}

}  // namespace

TEST_CASE("a minimal RM config parses into a validated run") {
  const RunConfig c = parse_config(minimal_rm_config());
  CHECK(c.mode == Mode::rm);
  CHECK(c.instance.K() == 2);
  CHECK(c.n == 100);
  CHECK(c.replications == 3);
  CHECK(c.seed == 11);
  REQUIRE(c.rm_policies.size() == 2);
  CHECK(c.rm_policies[0] == RmPolicyKind::ucb_rssr);
  CHECK(c.rm_policies[1] == RmPolicyKind::ucb_vv);
}

TEST_CASE("config round-trips through its JSON echo") {
  const RunConfig c = parse_config(minimal_rm_config());
  const json echo = config_to_json(c);
  const RunConfig c2 = parse_config(echo);
  CHECK(config_to_json(c2) == echo);
  CHECK(c2.instance.truths[0].mean ==
        Catch::Approx(c.instance.truths[0].mean).epsilon(1e-15));
}

TEST_CASE("unknown keys are fatal, not warnings") {
  json j = minimal_rm_config();
  j["horizonn"] = 100;
  CHECK_THROWS_WITH(parse_config(j), Catch::Matchers::ContainsSubstring("horizonn"));
  json k = minimal_rm_config();
  k["instance"]["arms"][0]["high"] = 3.0;
  CHECK_THROWS_AS(parse_config(k), ConfigError);
}

TEST_CASE("preset and inline instance are mutually exclusive") {
  json j = minimal_rm_config();
  j["preset"] = "rm-uniform-k2-wide";
  CHECK_THROWS_AS(parse_config(j), ConfigError);
  const RunConfig p = parse_config(json{{"preset", "rm-uniform-k2-wide"}});
  CHECK(p.preset == "rm-uniform-k2-wide");
  CHECK(p.instance.K() == 2);
  CHECK(p.n > 0);
}

TEST_CASE("invalid parameters produce actionable messages") {
  json j = minimal_rm_config();
  j["L"] = 0.0;
  CHECK_THROWS_WITH(parse_config(j), Catch::Matchers::ContainsSubstring("L > 0"));
  json k = minimal_rm_config();
  k["replications"] = 0;
  CHECK_THROWS_WITH(parse_config(k), Catch::Matchers::ContainsSubstring("R >= 1"));
  json m = minimal_rm_config();
  m["n"] = 3;  // below 2K pilot pulls
  CHECK_THROWS_AS(parse_config(m), ConfigError);
  json p = minimal_rm_config();
  p["delta_pilot"] = 1.5;
  CHECK_THROWS_AS(parse_config(p), ConfigError);
  json q = minimal_rm_config();
  q["policies"] = json::array({"ucb_bogus"});
  CHECK_THROWS_AS(parse_config(q), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"preset", "no-such-preset"}}), ConfigError);
}

TEST_CASE("every named preset resolves to a runnable configuration") {
  const auto names = preset_names();
  CHECK(names.size() == 19);
  for (const auto& name : names) {
    const ResolvedPreset p = resolve_preset(name);
    CHECK(p.instance.K() >= 2);
    CHECK(p.n > 0);
    CHECK(p.replications > 0);
    if (p.mode == Mode::rm) {
      CHECK_FALSE(p.rm_policies.empty());
      CHECK(p.instance.support_lo > 0);
      CHECK(p.n >= 2LL * p.instance.K());
    } else {
      CHECK_FALSE(p.bai_algos.empty());
      CHECK(p.n > p.instance.K());
    }
    // The preset must survive the config validator as well.
    const RunConfig c = config_from_preset(name);
    CHECK(c.n == p.n);
  }
}

TEST_CASE("BAI presets scale with the arm-count override") {
  const ResolvedPreset p8 = resolve_preset("bai-sr-exp1", 8);
  const ResolvedPreset p32 = resolve_preset("bai-sr-exp1", 32);
  CHECK(p8.instance.K() == 8);
  CHECK(p32.instance.K() == 32);
  CHECK_THROWS_AS(resolve_preset("rm-uniform-k5", 8), ConfigError);
}

TEST_CASE("results CSV round-trips through the parser") {
  RunConfig c = parse_config(minimal_rm_config());
  c.bounds_overlay = false;
  const RunResult res = execute_run(c, 1);
  REQUIRE_FALSE(res.rm_rows.empty());
  const std::string csv = to_csv(res);
  CHECK(csv.rfind("policy,timestep,mean_regret,stderr,bound_value", 0) == 0);
  const RunResult back = parse_csv(csv);
  REQUIRE(back.rm_rows.size() == res.rm_rows.size());
  for (std::size_t i = 0; i < res.rm_rows.size(); ++i) {
    CHECK(back.rm_rows[i].policy == res.rm_rows[i].policy);
    CHECK(back.rm_rows[i].timestep == res.rm_rows[i].timestep);
    CHECK(back.rm_rows[i].mean_regret ==
          Catch::Approx(res.rm_rows[i].mean_regret).epsilon(1e-9));
  }
  CHECK_THROWS_AS(parse_csv(""), ConfigError);
  CHECK_THROWS_AS(parse_csv("a,b,c\n1,2,3\n"), ConfigError);
}

TEST_CASE("rows are sorted by policy then timestep") {
  RunConfig c = parse_config(minimal_rm_config());
  const RunResult res = execute_run(c, 2);
  for (std::size_t i = 1; i < res.rm_rows.size(); ++i) {
    const auto& a = res.rm_rows[i - 1];
    const auto& b = res.rm_rows[i];
    CHECK((a.policy < b.policy || (a.policy == b.policy && a.timestep < b.timestep)));
  }
}

TEST_CASE("RM plot emits one polyline per curve plus dashed bound overlays") {
  RunConfig c = parse_config(minimal_rm_config());
  c.bounds_overlay = true;
  const RunResult res = execute_run(c, 1);
  const std::string svg = render_svg(res);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t polylines = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1))
    ++polylines;
  // Two policies with a bound column: vv and rssr each get curve + overlay.
  CHECK(polylines == 4);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);

  c.bounds_overlay = false;
  const std::string plain = render_svg(execute_run(c, 1));
  std::size_t plain_lines = 0;
  for (std::size_t pos = plain.find("<polyline"); pos != std::string::npos;
       pos = plain.find("<polyline", pos + 1))
    ++plain_lines;
  CHECK(plain_lines == 2);
  CHECK(plain.find("stroke-dasharray") == std::string::npos);
}

TEST_CASE("BAI plot emits grouped bars with whiskers") {
  RunConfig c = config_from_preset("bai-sr-exp1");
  c.n = 600;
  c.replications = 40;
  const RunResult res = execute_run(c, 2);
  REQUIRE(res.mode == Mode::bai);
  REQUIRE_FALSE(res.bai_rows.empty());
  const std::string svg = render_svg(res);
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t rects = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
       pos = svg.find("<rect", pos + 1))
    ++rects;
  CHECK(rects >= res.bai_rows.size());
}
