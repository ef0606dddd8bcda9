#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nms/gluing.hpp"

namespace nms {

enum class Chart { Repeller, Attractor };

// Coordinates in one suspension chart: y is the (n-1)-vector of disk
// coordinates, h the height. Canonical (reduced) form has 0 <= h < 1; the
// flow keeps repeller-side heights in cover coordinates between calls (see
// model_flow), so h outside [0,1) is a valid continuation state.
struct ChartCoords {
  std::vector<double> y;
  double h = 0.0;
};

struct ChartPoint {
  Chart chart = Chart::Repeller;
  std::vector<double> y;
  double h = 0.0;
};

// A point of the gluing surface: direction u on the sphere factor (length
// n-1 as a vector, unit norm) and longitude lambda in [0,1). For n=2 the
// sphere factor is S^0, so u is a single ±1 entry.
struct BoundaryPoint {
  std::vector<double> u;
  double lambda = 0.0;

  // n=2 orientable handle view: circle 1 is the u=-1 strand, circle 2 the
  // u=+1 strand.
  [[nodiscard]] int component() const { return u.at(0) < 0 ? 1 : 2; }
  // n=3 orientable handle view: meridian angle in [0,1) turns.
  [[nodiscard]] double mu() const;

  static BoundaryPoint circle(int component, double lambda);
  static BoundaryPoint torus(double lambda, double mu);
  static BoundaryPoint sphere(std::vector<double> u, double lambda);
};

struct TransitEvent {
  double time = 0.0;       // flow time of the crossing, relative to the call
  BoundaryPoint before;    // repeller-side point on the gluing surface
  BoundaryPoint after;     // its image on the attractor side
};

struct FlowResult {
  ChartPoint point;
  std::optional<TransitEvent> transit;
};

struct Trajectory {
  std::vector<std::pair<double, ChartPoint>> samples;
  std::vector<TransitEvent> transits;
};

// Deck transformation power: multiplies y by 2^power and, on the
// nonorientable handle, flips the first coordinate once per power.
[[nodiscard]] std::vector<double> deck_apply(HandleKind kind,
                                             const std::vector<double>& y,
                                             long long power);

// Canonical representative: applies the deck power floor(h) so the height
// lands in [0,1). Idempotent on reduced input.
[[nodiscard]] ChartCoords reduce(HandleKind kind, const std::vector<double>& y,
                                 double h);
[[nodiscard]] ChartPoint reduced_point(HandleKind kind, const ChartPoint& p);

// Time-t suspension image in canonical form: reduce(y, h + t).
[[nodiscard]] ChartCoords suspension_flow(HandleKind kind, const ChartCoords& p,
                                          double t);

// Crossing time of the chart envelope |y|^2 = 2^(-height) along the
// suspension: -log2(|y|^2) - h. For repeller points this is the time until
// the outward crossing; for attractor points the same value is the backward
// time to the gluing surface. Axis points (|y| = 0) never cross.
[[nodiscard]] std::optional<double> transit_time(const ChartPoint& p);

// Concrete boundary homeomorphism realizing the flow's gluing datum, mapping
// repeller-side boundary points to attractor-side ones. Throws
// std::invalid_argument on non-reduced input (lambda outside [0,1), u not
// unit length).
[[nodiscard]] BoundaryPoint realize_gluing(const ModelFlow& f,
                                           const BoundaryPoint& b);

// The model flow f^t. Repeller chart runs the suspension outward, crossing
// the gluing surface once; attractor chart runs it inward. Negative t flows
// backward (attractor points can cross back into the repeller chart through
// the inverse gluing map). Repeller-side results keep cover heights so that
// chaining calls continues the same covering path exactly; reduce for
// display. Transit times are relative to the start of the call.
[[nodiscard]] FlowResult model_flow(const ModelFlow& f, const ChartPoint& p,
                                    double t);

// Transports an eps*e1 offset once around the (repeller, attractor) periodic
// orbits and reports whether the first coordinate's sign flips. Requires
// 0 < eps < 0.5 so the offset stays strictly inside the chart for one period.
[[nodiscard]] std::pair<bool, bool> detect_twist(const ModelFlow& f,
                                                 double eps);

// Forward sampling at multiples of dt up to horizon; samples are canonical
// (reduced) chart points, transit events carry exact (non-grid) times.
[[nodiscard]] Trajectory sample_trajectory(const ModelFlow& f,
                                           const ChartPoint& seed,
                                           double horizon, double dt);
[[nodiscard]] std::vector<Trajectory> sample_portrait(
    const ModelFlow& f, const std::vector<ChartPoint>& seeds, double horizon,
    double dt);

}  // namespace nms
