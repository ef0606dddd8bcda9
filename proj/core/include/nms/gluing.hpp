#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nms {

// Which generalized solid torus the two pieces are: the orientable handle
// S^{n-2} x D^1 x S^1 or its nonorientable twin (suspension of the antipodal
// doubling on the first axis).
enum class HandleKind { Orientable, Nonorientable };

// Boundary gluing for n >= 3 orientable handles: an integer matrix acting on
// H_1 of the boundary torus, columns are the images of the longitude (r,s)
// and the meridian (p,q).
struct GluingMatrix {
  int r = 1, p = 0;
  int s = 0, q = 1;

  [[nodiscard]] long long det() const {
    return static_cast<long long>(r) * q - static_cast<long long>(p) * s;
  }

  // Validating factory; the aggregate itself stays unchecked so that
  // ill-formed input can be inspected (is_unimodular) before use.
  static GluingMatrix checked(int r, int p, int s, int q);

  [[nodiscard]] GluingMatrix inverse() const;

  friend GluingMatrix operator*(const GluingMatrix& a, const GluingMatrix& b) {
    return GluingMatrix{a.r * b.r + a.p * b.s, a.r * b.p + a.p * b.q,
                        a.s * b.r + a.q * b.s, a.s * b.p + a.q * b.q};
  }

  bool operator==(const GluingMatrix&) const = default;
};

[[nodiscard]] bool is_unimodular(const GluingMatrix& m);

// Boundary gluing for n == 2: the boundary of the orientable handle is two
// circles, and a gluing is a possible swap of the circles plus a sign
// (direction) per circle. Signs are indexed by SOURCE circle: sign[c] is the
// direction the image of circle c is traversed. For the nonorientable handle
// the boundary is a single circle and only sign[0] is meaningful.
struct SurfaceGluing {
  HandleKind handle = HandleKind::Orientable;
  bool swap = false;
  std::array<int, 2> sign = {+1, +1};

  static SurfaceGluing orientable(bool swap, int sign0, int sign1);
  static SurfaceGluing nonorientable(int sign0);

  [[nodiscard]] int circle_count() const {
    return handle == HandleKind::Orientable ? 2 : 1;
  }

  bool operator==(const SurfaceGluing&) const = default;
};

// Composite datum of a followed by b... careful: this is a ∘ b, i.e. apply b
// first. Matches how certificates chain induced maps.
[[nodiscard]] SurfaceGluing compose_surface(const SurfaceGluing& a,
                                            const SurfaceGluing& b);
[[nodiscard]] SurfaceGluing invert_surface(const SurfaceGluing& a);
[[nodiscard]] SurfaceGluing identity_surface(HandleKind handle);

// Boundary gluing where only a direction survives: nonorientable handles for
// n == 3 and every handle for n > 3.
struct SignGluing {
  int sign = +1;

  static SignGluing checked(int sign);

  bool operator==(const SignGluing&) const = default;
};

using GluingData = std::variant<SurfaceGluing, GluingMatrix, SignGluing>;

// A model flow: dimension, handle kind, and the boundary gluing that matches
// that pair. make() is the validating entry point.
struct ModelFlow {
  int dim = 3;
  HandleKind handle = HandleKind::Orientable;
  GluingData gluing = GluingMatrix{};

  static ModelFlow make(int dim, HandleKind handle, GluingData gluing);

  [[nodiscard]] const SurfaceGluing* surface() const {
    return std::get_if<SurfaceGluing>(&gluing);
  }
  [[nodiscard]] const GluingMatrix* matrix() const {
    return std::get_if<GluingMatrix>(&gluing);
  }
  [[nodiscard]] const SignGluing* sign_action() const {
    return std::get_if<SignGluing>(&gluing);
  }

  bool operator==(const ModelFlow&) const = default;
};

// Identification of the ambient closed manifold. Lens parameters are stored
// with q range-reduced mod p; normalized() additionally folds q ~ p - q and
// sends the n = 3 product bundle to Lens(0,1), so normalized forms compare
// by equality.
struct ManifoldId {
  enum class Kind {
    Torus,
    KleinBottle,
    Lens,
    SphereProdCircle,
    TwistedSphereBundle
  };

  Kind kind = Kind::Torus;
  int p = 0, q = 0;  // Lens only
  int dim = 2;

  static ManifoldId torus();
  static ManifoldId klein_bottle();
  static ManifoldId lens(int p, int q);
  static ManifoldId sphere_prod_circle(int dim);
  static ManifoldId twisted_sphere_bundle(int dim);

  [[nodiscard]] ManifoldId normalized() const;

  bool operator==(const ManifoldId&) const = default;
};

// Equivalence certificates: the pair of boundary homeomorphisms (restricted
// to their induced actions) intertwining the two gluings.
struct MatrixCertificate {
  // h_k acts on H_1 of boundary torus k as [[1,0],[m_k,d_k]].
  int m0 = 0, d0 = 1;
  int m1 = 0, d1 = 1;

  bool operator==(const MatrixCertificate&) const = default;
};

struct SurfaceCertificate {
  SurfaceGluing h0, h1;

  bool operator==(const SurfaceCertificate&) const = default;
};

struct SignCertificate {
  int sign = +1;

  bool operator==(const SignCertificate&) const = default;
};

using Certificate =
    std::variant<MatrixCertificate, SurfaceCertificate, SignCertificate>;

// True when the certificate actually intertwines the gluings of f and g,
// i.e. h1 ∘ j == j' ∘ h0 with h0, h1 of the admissible shape.
[[nodiscard]] bool certificate_valid(const Certificate& cert,
                                     const ModelFlow& f, const ModelFlow& g);

// Enumeration helpers (deterministic order; used by the classifier's
// exhaustive checks and the search oracle).
[[nodiscard]] std::vector<SurfaceGluing> all_surface_gluings(HandleKind k);
[[nodiscard]] std::vector<GluingMatrix> unimodular_matrices(int entry_bound);

}  // namespace nms
