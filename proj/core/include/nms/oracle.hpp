#pragma once

#include <optional>
#include <vector>

#include "nms/gluing.hpp"

namespace nms::oracle {

// Default m0 range for certificate search; covers every pair of unimodular
// matrices with entries in [-3,3] since m0 = (r - r')/p' there.
inline constexpr int kDefaultSearchBound = 8;

// Brute-force certificate search, independent of the classifier's closed
// forms. Enumerates admissible h0 data (matrices: m0 in [-bound, bound]
// zigzag from 0, d0 in {+1,-1}; surfaces: identity and swap; signs: the
// trivial map), derives h1 from h1 ∘ j = j' ∘ h0, and returns the first
// candidate whose induced data is admissible. Absence means no certificate
// within the bound.
[[nodiscard]] std::optional<Certificate> search_certificate(
    const ModelFlow& f, const ModelFlow& g, int bound = kDefaultSearchBound);

// Every well-formed gluing datum within the bound, as flows, in a
// deterministic order. The bound only matters for n=3 orientable matrices.
[[nodiscard]] std::vector<ModelFlow> enumerate_gluings(int dim,
                                                       HandleKind handle,
                                                       int entry_bound);

// Equivalence-class blocks computed solely via search_certificate.
[[nodiscard]] std::vector<std::vector<ModelFlow>> partition_by_equivalence(
    const std::vector<ModelFlow>& flows, int bound = kDefaultSearchBound);

}  // namespace nms::oracle
