#include "nms/portrait.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace nms {

namespace {

constexpr double kMarginX = 40.0, kMarginY = 36.0;
constexpr double kPlotW = 560.0, kPlotH = 400.0;

double norm_sq(const std::vector<double>& y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return s;
}

double frac_unit(double v) {
  double f = v - std::floor(v);
  if (f >= 1.0) f -= 1.0;
  return f;
}

struct PlotPoint {
  double x = 0.0, v = 0.0;
  Chart chart = Chart::Repeller;
};

// Maps a flow state (raw cover coordinates, as carried between model_flow
// calls) to the unit-square picture. Repeller states fan out from the middle
// line v = 1/2 toward the band edges v = 1/4, 3/4 as the remaining transit
// time shrinks; attractor states spiral from the band edges toward the outer
// core line v = 0 ~ 1.
PlotPoint plot_point(const ModelFlow& f, const ChartPoint& raw) {
  const ChartPoint p = reduced_point(f.handle, raw);
  PlotPoint out;
  out.chart = raw.chart;
  out.x = p.h;
  if (raw.chart == Chart::Repeller) {
    const double nsq = norm_sq(raw.y);
    if (nsq == 0.0) {
      out.v = 0.5;
      return out;
    }
    const double remaining = -std::log2(nsq) - raw.h;
    const double w = (p.y[0] < 0 ? -1.0 : 1.0) * std::exp2(-remaining / 2.0);
    out.v = 0.5 + 0.25 * w;
    return out;
  }
  const double yhat = p.y[0] * std::exp2(p.h / 2.0);
  out.v = frac_unit(-0.25 * yhat);
  return out;
}

void fmt(std::string& s, const char* format, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, a, b);
  s += buf;
}

double px(double x) { return kMarginX + x * kPlotW; }
double py(double v) { return kMarginY + (1.0 - v) * kPlotH; }

std::string path_data(const std::vector<PlotPoint>& pts) {
  std::string d;
  bool pen_down = false;
  const PlotPoint* prev = nullptr;
  for (const auto& pt : pts) {
    const bool jump = prev && (std::abs(pt.x - prev->x) > 0.5 ||
                               std::abs(pt.v - prev->v) > 0.5 ||
                               pt.chart != prev->chart);
    if (!prev || jump) pen_down = false;
    fmt(d, pen_down ? " L %.2f %.2f" : " M %.2f %.2f", px(pt.x), py(pt.v));
    pen_down = true;
    prev = &pt;
  }
  return d;
}

}  // namespace

std::vector<ChartPoint> default_portrait_seeds(const ModelFlow& f) {
  std::vector<ChartPoint> seeds;
  if (f.dim == 2) {
    for (double y0 : {0.18, -0.18})
      for (double h : {0.0, 0.25, 0.5, 0.75})
        seeds.push_back(ChartPoint{Chart::Repeller, {y0}, h});
    return seeds;
  }
  for (int i = 0; i < 8; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / 8.0;
    std::vector<double> y(f.dim - 1, 0.0);
    y[0] = 0.2 * std::cos(angle);
    y[1] = 0.2 * std::sin(angle);
    seeds.push_back(ChartPoint{Chart::Repeller, std::move(y), 0.0});
  }
  return seeds;
}

std::string render_surface_portrait(const ModelFlow& f,
                                    const std::vector<ChartPoint>& seeds,
                                    double horizon, double dt) {
  if (f.dim != 2)
    throw std::invalid_argument("portrait rendering needs a surface flow");
  if (!(dt > 0.0) || !(horizon > 0.0))
    throw std::invalid_argument("horizon and dt must be positive");

  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"472\" "
      "viewBox=\"0 0 640 472\">\n"
      "<style>\n"
      ".frame{fill:none;stroke:#888;stroke-width:1}\n"
      ".periodic-orbit{fill:none;stroke:#c0392b;stroke-width:2.5}\n"
      ".trajectory{fill:none;stroke:#2471a3;stroke-width:1.2}\n"
      ".transit{fill:#e67e22;stroke:none}\n"
      ".edge-marker{fill:#555;stroke:none}\n"
      ".band{fill:#f4f6f7;stroke:none}\n"
      "</style>\n";

  // Repeller band backdrop.
  {
    std::string d;
    fmt(d, "<rect class=\"band\" x=\"%.2f\" y=\"%.2f\" ", px(0.0), py(0.75));
    fmt(d, "width=\"%.2f\" height=\"%.2f\"/>\n", kPlotW, kPlotH / 2.0);
    svg += d;
  }

  // Wandering trajectories, stepped on raw states so the repeller fan uses
  // the true remaining transit time.
  std::vector<std::string> transit_dots;
  for (const auto& seed : seeds) {
    std::vector<PlotPoint> pts;
    ChartPoint state = seed;
    pts.push_back(plot_point(f, state));
    const long long steps =
        static_cast<long long>(std::floor(horizon / dt * (1.0 + 1e-12)));
    for (long long i = 1; i <= steps; ++i) {
      const FlowResult r = model_flow(f, state, dt);
      if (r.transit) {
        std::string dot = "<circle class=\"transit\" ";
        fmt(dot, "cx=\"%.2f\" cy=\"%.2f\" ", px(r.transit->before.lambda),
            py(0.5 + 0.25 * (r.transit->before.u[0] < 0 ? -1.0 : 1.0)));
        dot += "r=\"3\"/>\n";
        transit_dots.push_back(std::move(dot));
      }
      state = r.point;
      pts.push_back(plot_point(f, state));
    }
    svg += "<path class=\"trajectory\" d=\"" + path_data(pts) + "\"/>\n";
  }

  // Periodic orbits: repeller core line, then the attractor core circle
  // (split across the top and bottom edges of the square).
  {
    std::string d;
    fmt(d, "M %.2f %.2f", px(0.0), py(0.5));
    fmt(d, " L %.2f %.2f", px(1.0), py(0.5));
    svg += "<path class=\"periodic-orbit\" d=\"" + d + "\"/>\n";
  }
  {
    std::string d;
    fmt(d, "M %.2f %.2f", px(0.0), py(0.0));
    fmt(d, " L %.2f %.2f", px(1.0), py(0.0));
    fmt(d, " M %.2f %.2f", px(0.0), py(1.0));
    fmt(d, " L %.2f %.2f", px(1.0), py(1.0));
    svg += "<path class=\"periodic-orbit\" d=\"" + d + "\"/>\n";
  }

  for (const auto& dot : transit_dots) svg += dot;

  // Edge identification markers: the right edge glues to the left one,
  // reflected vertically on the nonorientable handle.
  const bool flip = f.handle == HandleKind::Nonorientable;
  for (double v : {0.375, 0.625}) {
    std::string left = "<polygon class=\"edge-marker\" points=\"";
    fmt(left, "%.2f,%.2f ", px(0.0) - 8.0, py(v) - 5.0);
    fmt(left, "%.2f,%.2f ", px(0.0) - 8.0, py(v) + 5.0);
    fmt(left, "%.2f,%.2f\"/>\n", px(0.0), py(v));
    svg += left;
    const double vr = flip ? 1.0 - v : v;
    std::string right = "<polygon class=\"edge-marker\" points=\"";
    fmt(right, "%.2f,%.2f ", px(1.0), py(vr) - 5.0);
    fmt(right, "%.2f,%.2f ", px(1.0), py(vr) + 5.0);
    fmt(right, "%.2f,%.2f\"/>\n", px(1.0) + 8.0, py(vr));
    svg += right;
  }

  {
    std::string frame = "<rect class=\"frame\" ";
    fmt(frame, "x=\"%.2f\" y=\"%.2f\" ", px(0.0), py(1.0));
    fmt(frame, "width=\"%.2f\" height=\"%.2f\"/>\n", kPlotW, kPlotH);
    svg += frame;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace nms
