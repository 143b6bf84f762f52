#ifndef RISKBANDITS_SVG_HPP
#define RISKBANDITS_SVG_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "riskbandits/report.hpp"

namespace riskbandits {

namespace detail {

inline const char* series_color(std::size_t i) {
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};
  return kColors[i % 6];
}

inline std::string svg_open(int w, int h) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
    << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
    << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  return s.str();
}

inline std::string text(double x, double y, const std::string& t,
                        const std::string& anchor = "middle") {
  std::ostringstream s;
  s << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" "
    << "font-size=\"12\" text-anchor=\"" << anchor << "\">" << t << "</text>\n";
  return s.str();
}

}  // namespace detail

// Mean-regret curves against a log-scaled timestep axis; theorem overlays are
// drawn dashed in the matching series color.
inline std::string render_rm_svg(const RunResult& res) {
  const int W = 760, H = 480, ml = 70, mr = 170, mt = 30, mb = 50;
  std::map<std::string, std::vector<const RmRow*>> series;
  for (const RmRow& r : res.rm_rows) series[r.policy].push_back(&r);
  double xmin = 1e300, xmax = 0, ymax = 0;
  for (const RmRow& r : res.rm_rows) {
    xmin = std::min(xmin, static_cast<double>(r.timestep));
    xmax = std::max(xmax, static_cast<double>(r.timestep));
    ymax = std::max(ymax, r.mean_regret + r.std_error);
  }
  if (series.empty()) throw ConfigError("no rows to plot");
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= 0) ymax = 1;
  auto X = [&](double t) {
    return ml + (std::log(t) - std::log(xmin)) / (std::log(xmax) - std::log(xmin)) *
                    (W - ml - mr);
  };
  auto Y = [&](double v) { return H - mb - v / ymax * (H - mt - mb); };

  std::ostringstream s;
  s << detail::svg_open(W, H);
  s << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
    << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
    << H - mb << "\" stroke=\"black\"/>\n";
  for (double d = std::ceil(std::log10(xmin)); d <= std::log10(xmax) + 1e-9; ++d) {
    const double t = std::pow(10.0, d);
    if (t < xmin || t > xmax) continue;
    s << "<line x1=\"" << X(t) << "\" y1=\"" << H - mb << "\" x2=\"" << X(t)
      << "\" y2=\"" << H - mb + 5 << "\" stroke=\"black\"/>\n";
    s << detail::text(X(t), H - mb + 20, "1e" + std::to_string(static_cast<int>(d)));
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = ymax * i / 4;
    s << "<line x1=\"" << ml - 5 << "\" y1=\"" << Y(v) << "\" x2=\"" << ml
      << "\" y2=\"" << Y(v) << "\" stroke=\"black\"/>\n";
    s << detail::text(ml - 10, Y(v) + 4, fmt10(std::round(v * 100) / 100), "end");
  }
  s << detail::text((ml + W - mr) / 2.0, H - 10, "timestep (log scale)");
  s << detail::text(18, mt - 8, "mean regret", "start");

  std::size_t idx = 0;
  for (const auto& [name, rows] : series) {
    const char* color = detail::series_color(idx);
    std::ostringstream pts, bpts;
    bool any_bound = false;
    for (const RmRow* r : rows) {
      pts << X(static_cast<double>(r->timestep)) << ',' << Y(r->mean_regret) << ' ';
      if (r->has_bound) {
        any_bound = true;
        bpts << X(static_cast<double>(r->timestep)) << ','
             << Y(std::min(r->bound, ymax)) << ' ';
      }
    }
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" "
      << "points=\"" << pts.str() << "\"/>\n";
    if (any_bound)
      s << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-dasharray=\"6 4\" points=\"" << bpts.str() << "\"/>\n";
    const double ly = mt + 18.0 * idx;
    s << "<line x1=\"" << W - mr + 10 << "\" y1=\"" << ly << "\" x2=\""
      << W - mr + 34 << "\" y2=\"" << ly << "\" stroke=\"" << color
      << "\" stroke-width=\"1.5\"/>\n";
    s << detail::text(W - mr + 40, ly + 4, name + (any_bound ? " (+bound)" : ""),
                      "start");
    ++idx;
  }
  s << "</svg>\n";
  return s.str();
}

// Grouped bars: one group per (K, budget) cell, one filled bar per algorithm,
// plus a dashed outline bar for the clamped theoretical bound where present.
inline std::string render_bai_svg(const RunResult& res) {
  const int W = 760, H = 480, ml = 70, mr = 170, mt = 30, mb = 60;
  if (res.bai_rows.empty()) throw ConfigError("no rows to plot");
  std::vector<std::string> policies;
  std::vector<std::pair<int, std::int64_t>> groups;
  for (const BaiRow& r : res.bai_rows) {
    if (std::find(policies.begin(), policies.end(), r.policy) == policies.end())
      policies.push_back(r.policy);
    const std::pair<int, std::int64_t> g{r.K, r.budget};
    if (std::find(groups.begin(), groups.end(), g) == groups.end())
      groups.push_back(g);
  }
  double ymax = 0;
  for (const BaiRow& r : res.bai_rows)
    ymax = std::max({ymax, r.error_prob + r.ci_halfwidth, r.has_bound ? r.bound : 0.0});
  ymax = std::min(1.05, std::max(ymax * 1.15, 0.01));
  auto Y = [&](double v) { return H - mb - v / ymax * (H - mt - mb); };
  const double gw = static_cast<double>(W - ml - mr) / groups.size();
  const double bw = gw / (2.0 * policies.size() + 1);

  std::ostringstream s;
  s << detail::svg_open(W, H);
  s << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
    << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
    << H - mb << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = ymax * i / 4;
    s << "<line x1=\"" << ml - 5 << "\" y1=\"" << Y(v) << "\" x2=\"" << ml
      << "\" y2=\"" << Y(v) << "\" stroke=\"black\"/>\n";
    s << detail::text(ml - 10, Y(v) + 4, fmt10(std::round(v * 1000) / 1000), "end");
  }
  s << detail::text(18, mt - 8, "error probability", "start");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double x0 = ml + g * gw;
    s << detail::text(x0 + gw / 2, H - mb + 18,
                      "K=" + std::to_string(groups[g].first) + " n=" +
                          std::to_string(groups[g].second));
    for (std::size_t p = 0; p < policies.size(); ++p) {
      const BaiRow* row = nullptr;
      for (const BaiRow& r : res.bai_rows)
        if (r.policy == policies[p] && r.K == groups[g].first &&
            r.budget == groups[g].second)
          row = &r;
      if (!row) continue;
      const char* color = detail::series_color(p);
      const double bx = x0 + bw * (2.0 * p + 1);
      s << "<rect x=\"" << bx << "\" y=\"" << Y(row->error_prob) << "\" width=\""
        << bw << "\" height=\"" << (H - mb) - Y(row->error_prob) << "\" fill=\""
        << color << "\"/>\n";
      const double cx = bx + bw / 2;
      s << "<line x1=\"" << cx << "\" y1=\""
        << Y(std::min(ymax, row->error_prob + row->ci_halfwidth)) << "\" x2=\"" << cx
        << "\" y2=\"" << Y(std::max(0.0, row->error_prob - row->ci_halfwidth))
        << "\" stroke=\"black\"/>\n";
      if (row->has_bound)
        s << "<rect x=\"" << bx << "\" y=\"" << Y(std::min(row->bound, ymax))
          << "\" width=\"" << bw << "\" height=\""
          << (H - mb) - Y(std::min(row->bound, ymax))
          << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-dasharray=\"4 3\"/>\n";
    }
  }
  for (std::size_t p = 0; p < policies.size(); ++p) {
    const double ly = mt + 18.0 * p;
    s << "<rect x=\"" << W - mr + 10 << "\" y=\"" << ly - 8
      << "\" width=\"24\" height=\"10\" fill=\"" << detail::series_color(p)
      << "\"/>\n";
    s << detail::text(W - mr + 40, ly + 2, policies[p], "start");
  }
  s << "</svg>\n";
  return s.str();
}

inline std::string render_svg(const RunResult& res) {
  return res.mode == Mode::rm ? render_rm_svg(res) : render_bai_svg(res);
}

}  // namespace riskbandits

#endif
