#include "nms/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nms {

namespace {

double norm_sq(const std::vector<double>& y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return s;
}

double frac_unit(double v) {
  double f = v - std::floor(v);
  if (f >= 1.0) f -= 1.0;  // guards the v = -tiny rounding case
  return f;
}

void check_unit(const std::vector<double>& u) {
  if (std::abs(norm_sq(u) - 1.0) > 1e-6)
    throw std::invalid_argument("boundary point not reduced");
}

// Wraps lambda into [0,1), applying the handle monodromy (direction flip of
// the first coordinate on the nonorientable handle) once per wrap.
BoundaryPoint normalize_boundary(HandleKind kind, std::vector<double> u,
                                 double lambda) {
  while (lambda >= 1.0) {
    lambda -= 1.0;
    if (kind == HandleKind::Nonorientable) u[0] = -u[0];
  }
  while (lambda < 0.0) {
    lambda += 1.0;
    if (kind == HandleKind::Nonorientable) u[0] = -u[0];
  }
  return BoundaryPoint{std::move(u), lambda};
}

// Boundary point reached by the covering-path state (y, H) sitting on the
// envelope |y|^2 = 2^(-H): direction of the canonical representative plus
// the wrapped height.
BoundaryPoint boundary_from_cover(HandleKind kind, const std::vector<double>& y,
                                  double H) {
  const long long k = static_cast<long long>(std::floor(H));
  std::vector<double> u = deck_apply(kind, y, k);
  const double norm = std::sqrt(norm_sq(u));
  for (double& v : u) v /= norm;
  return BoundaryPoint{std::move(u), frac_unit(H - static_cast<double>(k))};
}

// Attractor-chart entry point of a boundary point: on the envelope at height
// lambda, already canonical.
ChartPoint chart_from_boundary(const BoundaryPoint& b, Chart chart) {
  ChartPoint p;
  p.chart = chart;
  p.h = b.lambda;
  p.y = b.u;
  const double scale = std::exp2(-b.lambda / 2.0);
  for (double& v : p.y) v *= scale;
  return p;
}

// Parameter of the single boundary circle of the n=2 nonorientable handle:
// the circle double-covers the core, the u=+1 strand is phi in [0,1/2).
double klein_phi(const BoundaryPoint& b) {
  return b.u[0] > 0 ? b.lambda / 2.0 : (b.lambda + 1.0) / 2.0;
}

BoundaryPoint klein_point(double phi) {
  phi = frac_unit(phi);
  if (phi < 0.5) return BoundaryPoint{{+1.0}, 2.0 * phi};
  return BoundaryPoint{{-1.0}, 2.0 * phi - 1.0};
}

ModelFlow inverse_flow(const ModelFlow& f) {
  if (const auto* m = f.matrix())
    return ModelFlow{f.dim, f.handle, m->inverse()};
  if (const auto* s = f.surface())
    return ModelFlow{f.dim, f.handle, invert_surface(*s)};
  return f;  // sign realizations are involutions
}

}  // namespace

double BoundaryPoint::mu() const {
  const double angle = std::atan2(u.at(1), u.at(0));
  return frac_unit(angle / (2.0 * std::numbers::pi));
}

BoundaryPoint BoundaryPoint::circle(int component, double lambda) {
  if (component != 1 && component != 2)
    throw std::invalid_argument("component must be 1 or 2");
  return BoundaryPoint{{component == 1 ? -1.0 : +1.0}, lambda};
}

BoundaryPoint BoundaryPoint::torus(double lambda, double mu) {
  const double angle = 2.0 * std::numbers::pi * mu;
  return BoundaryPoint{{std::cos(angle), std::sin(angle)}, lambda};
}

BoundaryPoint BoundaryPoint::sphere(std::vector<double> u, double lambda) {
  return BoundaryPoint{std::move(u), lambda};
}

std::vector<double> deck_apply(HandleKind kind, const std::vector<double>& y,
                               long long power) {
  std::vector<double> out = y;
  for (double& v : out) v = std::ldexp(v, static_cast<int>(power));
  if (kind == HandleKind::Nonorientable && (power % 2 != 0) && !out.empty())
    out[0] = -out[0];
  return out;
}

ChartCoords reduce(HandleKind kind, const std::vector<double>& y, double h) {
  long long k = static_cast<long long>(std::floor(h));
  double hr = h - static_cast<double>(k);
  if (hr >= 1.0) {  // floor rounding guard near integer heights
    hr -= 1.0;
    k += 1;
  }
  return ChartCoords{deck_apply(kind, y, k), hr};
}

ChartPoint reduced_point(HandleKind kind, const ChartPoint& p) {
  ChartCoords c = reduce(kind, p.y, p.h);
  return ChartPoint{p.chart, std::move(c.y), c.h};
}

ChartCoords suspension_flow(HandleKind kind, const ChartCoords& p, double t) {
  return reduce(kind, p.y, p.h + t);
}

std::optional<double> transit_time(const ChartPoint& p) {
  const double nsq = norm_sq(p.y);
  if (nsq == 0.0) return std::nullopt;
  return -std::log2(nsq) - p.h;
}

BoundaryPoint realize_gluing(const ModelFlow& f, const BoundaryPoint& b) {
  if (b.lambda < 0.0 || b.lambda >= 1.0)
    throw std::invalid_argument("boundary point not reduced");
  if (static_cast<int>(b.u.size()) != f.dim - 1)
    throw std::invalid_argument("boundary point not reduced");
  check_unit(b.u);

  if (const auto* m = f.matrix()) {
    const double mu = b.mu();
    const double lp = frac_unit(m->r * b.lambda + m->p * mu);
    const double mp = frac_unit(m->s * b.lambda + m->q * mu);
    return BoundaryPoint::torus(lp, mp);
  }

  if (const auto* j = f.surface()) {
    if (f.handle == HandleKind::Orientable) {
      const int src = b.component() - 1;
      const int dst = j->swap ? 1 - src : src;
      const double lp =
          j->sign[src] == +1 ? b.lambda : (b.lambda == 0.0 ? 0.0 : 1.0 - b.lambda);
      return BoundaryPoint::circle(dst + 1, lp);
    }
    // Single boundary circle: degree-±1 map in the double-cover parameter.
    if (j->sign[0] == +1) return b;
    return klein_point(-klein_phi(b));
  }

  const auto& sg = *f.sign_action();
  if (sg.sign == +1) return b;
  // (u, lambda) -> (u, 1 - lambda); lambda = 0 wraps through the monodromy.
  return normalize_boundary(f.handle, b.u, 1.0 - b.lambda);
}

FlowResult model_flow(const ModelFlow& f, const ChartPoint& p, double t) {
  FlowResult out;
  if (t >= 0.0) {
    if (p.chart == Chart::Attractor) {
      ChartCoords c = reduce(f.handle, p.y, p.h - t);
      out.point = ChartPoint{Chart::Attractor, std::move(c.y), c.h};
      return out;
    }
    const std::optional<double> tstar = transit_time(p);
    if (!tstar || t < *tstar) {
      out.point = ChartPoint{Chart::Repeller, p.y, p.h + t};
      return out;
    }
    const double H = p.h + *tstar;  // crossing height in cover coordinates
    BoundaryPoint before = boundary_from_cover(f.handle, p.y, H);
    BoundaryPoint after = realize_gluing(f, before);
    const ChartPoint entry = chart_from_boundary(after, Chart::Attractor);
    ChartCoords c = reduce(f.handle, entry.y, entry.h - (t - *tstar));
    out.point = ChartPoint{Chart::Attractor, std::move(c.y), c.h};
    out.transit = TransitEvent{*tstar, std::move(before), std::move(after)};
    return out;
  }

  const double tau = -t;
  if (p.chart == Chart::Repeller) {
    ChartCoords c = reduce(f.handle, p.y, p.h - tau);
    out.point = ChartPoint{Chart::Repeller, std::move(c.y), c.h};
    return out;
  }
  const std::optional<double> tstar = transit_time(p);
  if (!tstar || tau < *tstar) {
    ChartCoords c = reduce(f.handle, p.y, p.h + tau);
    out.point = ChartPoint{Chart::Attractor, std::move(c.y), c.h};
    return out;
  }
  const double H = p.h + *tstar;
  BoundaryPoint after = boundary_from_cover(f.handle, p.y, H);
  BoundaryPoint before = realize_gluing(inverse_flow(f), after);
  const ChartPoint entry = chart_from_boundary(before, Chart::Repeller);
  ChartCoords c = reduce(f.handle, entry.y, entry.h - (tau - *tstar));
  out.point = ChartPoint{Chart::Repeller, std::move(c.y), c.h};
  out.transit = TransitEvent{-*tstar, std::move(before), std::move(after)};
  return out;
}

std::pair<bool, bool> detect_twist(const ModelFlow& f, double eps) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("eps must lie in (0, 0.5)");
  std::vector<double> y(f.dim - 1, 0.0);
  y[0] = eps;
  bool twisted[2];
  int i = 0;
  for (Chart chart : {Chart::Repeller, Chart::Attractor}) {
    const FlowResult r = model_flow(f, ChartPoint{chart, y, 0.0}, 1.0);
    const ChartPoint q = reduced_point(f.handle, r.point);
    twisted[i++] = q.y[0] < 0.0;
  }
  return {twisted[0], twisted[1]};
}

Trajectory sample_trajectory(const ModelFlow& f, const ChartPoint& seed,
                             double horizon, double dt) {
  if (!(dt > 0.0) || !(horizon > 0.0))
    throw std::invalid_argument("horizon and dt must be positive");
  Trajectory traj;
  ChartPoint state = seed;  // carries cover coordinates between steps
  double clock = 0.0;
  traj.samples.emplace_back(0.0, reduced_point(f.handle, seed));
  const long long steps = static_cast<long long>(
      std::floor(horizon / dt * (1.0 + 1e-12)));
  for (long long i = 1; i <= steps; ++i) {
    const double target = std::min(static_cast<double>(i) * dt, horizon);
    FlowResult r = model_flow(f, state, target - clock);
    if (r.transit) {
      r.transit->time += clock;
      traj.transits.push_back(*r.transit);
    }
    state = r.point;
    clock = target;
    traj.samples.emplace_back(clock, reduced_point(f.handle, state));
  }
  return traj;
}

std::vector<Trajectory> sample_portrait(const ModelFlow& f,
                                        const std::vector<ChartPoint>& seeds,
                                        double horizon, double dt) {
  std::vector<Trajectory> out;
  out.reserve(seeds.size());
  for (const auto& s : seeds)
    out.push_back(sample_trajectory(f, s, horizon, dt));
  return out;
}

}  // namespace nms
