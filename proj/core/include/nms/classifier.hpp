#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nms/gluing.hpp"

namespace nms {

// The closed manifold the model flow lives on, in normalized form.
[[nodiscard]] ManifoldId manifold_of(const ModelFlow& f);

// Homeomorphism test on the normalized forms (Lens q ~ p - q, the n = 3
// product bundle folded into Lens(0,1)).
[[nodiscard]] bool manifolds_homeomorphic(const ManifoldId& a,
                                          const ManifoldId& b);

// Decides topological equivalence and, when equivalent, returns the
// witnessing certificate. Different dimension or handle kind is an instant
// no.
[[nodiscard]] std::optional<Certificate> flows_equivalent(const ModelFlow& f,
                                                          const ModelFlow& g);

// Number of equivalence classes of flows realizable on the manifold.
[[nodiscard]] int count_classes(const ManifoldId& m);

// One model flow per equivalence class, deterministic order.
[[nodiscard]] std::vector<ModelFlow> representatives(const ManifoldId& m);

// Whether the periodic orbits (repeller, attractor) are twisted, i.e. have
// nonorientable tubular neighborhoods. Both orbits share the handle kind.
[[nodiscard]] std::pair<bool, bool> orbit_twisted(const ModelFlow& f);

}  // namespace nms
