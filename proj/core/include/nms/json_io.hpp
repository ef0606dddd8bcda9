#pragma once

#include <string>
#include <vector>

#include "nms/classifier.hpp"
#include "nms/gluing.hpp"
#include "nms/simulator.hpp"

namespace nms {

// Rounds to the given number of significant decimal digits; serialization
// applies this so output is byte-stable across platforms.
[[nodiscard]] double round_sig(double v, int digits = 12);

// Flow-spec JSON: {"dim": n, "handle": "orientable"|"nonorientable",
// "gluing": {"matrix": [[r,p],[s,q]]} | {"swap": b, "signs": [±1,±1]} |
// {"sign": ±1}}. Parsing throws std::invalid_argument on malformed or
// inconsistent input.
[[nodiscard]] ModelFlow parse_flow_spec(const std::string& text);
[[nodiscard]] std::string flow_spec_json(const ModelFlow& f);

// Seeds JSON: array of {"chart": "R"|"A", "y": [...], "h": t}.
[[nodiscard]] std::vector<ChartPoint> parse_seeds(const std::string& text,
                                                  int dim);

// Trajectory JSON: {"version": 1, "flow": <flow-spec>, "samples":
// [[t, "R"|"A", [y...], h]...], "transits": [[t, before, after]...]} where
// boundary points are keyed by the flow's boundary type.
[[nodiscard]] std::string trajectory_json(const ModelFlow& f,
                                          const Trajectory& t);
[[nodiscard]] std::string trajectories_json(const ModelFlow& f,
                                            const std::vector<Trajectory>& ts);

[[nodiscard]] std::string certificate_json(const Certificate& c);

// Manifold names: "Torus", "KleinBottle", "L(p,q)", "SxS1(n)", "StxS1(n)";
// parsing additionally accepts the abbreviations "T2" and "K2".
[[nodiscard]] ManifoldId parse_manifold(const std::string& name);
[[nodiscard]] std::string manifold_name(const ManifoldId& m);

}  // namespace nms
