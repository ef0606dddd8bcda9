#include "nms/oracle.hpp"

#include <stdexcept>

namespace nms::oracle {

namespace {

// 0, 1, -1, 2, -2, ... up to ±bound.
std::vector<int> zigzag_range(int bound) {
  std::vector<int> out{0};
  for (int v = 1; v <= bound; ++v) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

std::optional<Certificate> search_matrix(const GluingMatrix& j,
                                         const GluingMatrix& jp,
                                         const ModelFlow& f,
                                         const ModelFlow& g, int bound) {
  const GluingMatrix jinv = j.inverse();
  for (int m0 : zigzag_range(bound))
    for (int d0 : {+1, -1}) {
      const GluingMatrix h0{1, 0, m0, d0};
      const GluingMatrix h1 = jp * h0 * jinv;
      if (h1.r != 1 || h1.p != 0) continue;
      if (h1.q != 1 && h1.q != -1) continue;
      Certificate cert = MatrixCertificate{m0, d0, h1.s, h1.q};
      if (certificate_valid(cert, f, g)) return cert;
    }
  return std::nullopt;
}

std::optional<Certificate> search_surface(const SurfaceGluing& j,
                                          const SurfaceGluing& jp,
                                          const ModelFlow& f,
                                          const ModelFlow& g) {
  std::vector<SurfaceGluing> h0s = {identity_surface(j.handle)};
  if (j.handle == HandleKind::Orientable)
    h0s.push_back(SurfaceGluing::orientable(true, +1, +1));
  for (const auto& h0 : h0s) {
    const SurfaceGluing h1 =
        compose_surface(compose_surface(jp, h0), invert_surface(j));
    Certificate cert = SurfaceCertificate{h0, h1};
    if (certificate_valid(cert, f, g)) return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Certificate> search_certificate(const ModelFlow& f,
                                              const ModelFlow& g, int bound) {
  if (f.dim != g.dim || f.handle != g.handle) return std::nullopt;
  if (f.gluing.index() != g.gluing.index()) return std::nullopt;
  if (const auto* j = f.matrix())
    return search_matrix(*j, *g.matrix(), f, g, bound);
  if (const auto* j = f.surface())
    return search_surface(*j, *g.surface(), f, g);
  Certificate cert = SignCertificate{+1};
  if (certificate_valid(cert, f, g)) return cert;
  return std::nullopt;
}

std::vector<ModelFlow> enumerate_gluings(int dim, HandleKind handle,
                                         int entry_bound) {
  if (dim < 2) throw std::invalid_argument("dimension must be at least 2");
  std::vector<ModelFlow> out;
  if (dim == 2) {
    for (const auto& j : all_surface_gluings(handle))
      out.push_back(ModelFlow::make(2, handle, j));
    return out;
  }
  if (dim == 3 && handle == HandleKind::Orientable) {
    for (const auto& m : unimodular_matrices(entry_bound))
      out.push_back(ModelFlow::make(3, handle, m));
    return out;
  }
  for (int s : {+1, -1}) out.push_back(ModelFlow::make(dim, handle, SignGluing{s}));
  return out;
}

std::vector<std::vector<ModelFlow>> partition_by_equivalence(
    const std::vector<ModelFlow>& flows, int bound) {
  std::vector<std::vector<ModelFlow>> blocks;
  for (const auto& f : flows) {
    bool placed = false;
    for (auto& block : blocks)
      if (search_certificate(block.front(), f, bound)) {
        block.push_back(f);
        placed = true;
        break;
      }
    if (!placed) blocks.push_back({f});
  }
  return blocks;
}

}  // namespace nms::oracle
