#include "nms/gluing.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace nms {

GluingMatrix GluingMatrix::checked(int r, int p, int s, int q) {
  GluingMatrix m{r, p, s, q};
  if (!is_unimodular(m)) throw std::invalid_argument("matrix not unimodular");
  return m;
}

GluingMatrix GluingMatrix::inverse() const {
  const long long d = det();
  if (d != 1 && d != -1)
    throw std::invalid_argument("matrix not unimodular");
  const int di = static_cast<int>(d);
  // adj / det; det is ±1 so this stays integral.
  return GluingMatrix{q * di, -p * di, -s * di, r * di};
}

bool is_unimodular(const GluingMatrix& m) {
  const long long d = m.det();
  return d == 1 || d == -1;
}

SurfaceGluing SurfaceGluing::orientable(bool swap, int sign0, int sign1) {
  if ((sign0 != 1 && sign0 != -1) || (sign1 != 1 && sign1 != -1))
    throw std::invalid_argument("sign must be +1 or -1");
  return SurfaceGluing{HandleKind::Orientable, swap, {sign0, sign1}};
}

SurfaceGluing SurfaceGluing::nonorientable(int sign0) {
  if (sign0 != 1 && sign0 != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  return SurfaceGluing{HandleKind::Nonorientable, false, {sign0, +1}};
}

SurfaceGluing compose_surface(const SurfaceGluing& a, const SurfaceGluing& b) {
  if (a.handle != b.handle)
    throw std::invalid_argument("handle kinds differ");
  SurfaceGluing out;
  out.handle = a.handle;
  if (a.handle == HandleKind::Nonorientable) {
    out.swap = false;
    out.sign = {a.sign[0] * b.sign[0], +1};
    return out;
  }
  out.swap = a.swap != b.swap;
  // (a ∘ b) sends circle c via b to circle (c xor b.swap), traversed with
  // b.sign[c]; a then contributes a.sign at that intermediate circle.
  for (int c = 0; c < 2; ++c) {
    const int mid = b.swap ? 1 - c : c;
    out.sign[c] = a.sign[mid] * b.sign[c];
  }
  return out;
}

SurfaceGluing invert_surface(const SurfaceGluing& a) {
  SurfaceGluing out;
  out.handle = a.handle;
  if (a.handle == HandleKind::Nonorientable) {
    out.swap = false;
    out.sign = {a.sign[0], +1};  // signs are involutive on a circle
    return out;
  }
  out.swap = a.swap;
  for (int c = 0; c < 2; ++c) {
    const int src = a.swap ? 1 - c : c;  // circle whose image is c
    out.sign[c] = a.sign[src];
  }
  return out;
}

SurfaceGluing identity_surface(HandleKind handle) {
  return SurfaceGluing{handle, false, {+1, +1}};
}

SignGluing SignGluing::checked(int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  return SignGluing{sign};
}

ModelFlow ModelFlow::make(int dim, HandleKind handle, GluingData gluing) {
  if (dim < 2) throw std::invalid_argument("dimension must be at least 2");
  if (dim == 2) {
    const auto* s = std::get_if<SurfaceGluing>(&gluing);
    if (!s) throw std::invalid_argument("surface flow needs a surface gluing");
    if (s->handle != handle)
      throw std::invalid_argument("gluing handle kind mismatch");
    if ((s->sign[0] != 1 && s->sign[0] != -1) ||
        (s->sign[1] != 1 && s->sign[1] != -1))
      throw std::invalid_argument("sign must be +1 or -1");
    if (handle == HandleKind::Nonorientable && s->swap)
      throw std::invalid_argument("single boundary circle cannot swap");
  } else if (dim == 3 && handle == HandleKind::Orientable) {
    const auto* m = std::get_if<GluingMatrix>(&gluing);
    if (!m) throw std::invalid_argument("flow needs a gluing matrix");
    if (!is_unimodular(*m))
      throw std::invalid_argument("matrix not unimodular");
  } else {
    const auto* sg = std::get_if<SignGluing>(&gluing);
    if (!sg) throw std::invalid_argument("flow needs a sign gluing");
    if (sg->sign != 1 && sg->sign != -1)
      throw std::invalid_argument("sign must be +1 or -1");
  }
  return ModelFlow{dim, handle, gluing};
}

ManifoldId ManifoldId::torus() { return ManifoldId{Kind::Torus, 0, 0, 2}; }

ManifoldId ManifoldId::klein_bottle() {
  return ManifoldId{Kind::KleinBottle, 0, 0, 2};
}

ManifoldId ManifoldId::lens(int p, int q) {
  if (p < 0) throw std::invalid_argument("lens p must be nonnegative");
  if (p == 0) {
    if (std::abs(q) != 1)
      throw std::invalid_argument("lens q must be ±1 when p is 0");
    return ManifoldId{Kind::Lens, 0, 1, 3};
  }
  int qq = q % p;
  if (qq < 0) qq += p;
  if (std::gcd(p, qq) != 1)
    throw std::invalid_argument("lens parameters must be coprime");
  return ManifoldId{Kind::Lens, p, qq, 3};
}

ManifoldId ManifoldId::sphere_prod_circle(int dim) {
  if (dim < 3)
    throw std::invalid_argument("sphere-product bundle needs dim >= 3");
  return ManifoldId{Kind::SphereProdCircle, 0, 0, dim};
}

ManifoldId ManifoldId::twisted_sphere_bundle(int dim) {
  if (dim < 3)
    throw std::invalid_argument("twisted sphere bundle needs dim >= 3");
  return ManifoldId{Kind::TwistedSphereBundle, 0, 0, dim};
}

ManifoldId ManifoldId::normalized() const {
  ManifoldId out = *this;
  if (kind == Kind::SphereProdCircle && dim == 3)
    return ManifoldId{Kind::Lens, 0, 1, 3};
  if (kind == Kind::Lens && p > 0) {
    const int alt = p - q % p;
    if (alt < out.q) out.q = alt;
    if (out.q == p) out.q = 0;  // q ≡ 0 only when p == 1
  }
  return out;
}

namespace {

// Certificates on boundary tori act as [[1,0],[m,d]] (meridian-disk classes
// must map to themselves; longitudinal drift m and direction d are free).
GluingMatrix cert_matrix(int m, int d) { return GluingMatrix{1, 0, m, d}; }

}  // namespace

bool certificate_valid(const Certificate& cert, const ModelFlow& f,
                       const ModelFlow& g) {
  if (f.dim != g.dim || f.handle != g.handle) return false;
  if (const auto* mc = std::get_if<MatrixCertificate>(&cert)) {
    const auto* j = f.matrix();
    const auto* jp = g.matrix();
    if (!j || !jp) return false;
    if ((mc->d0 != 1 && mc->d0 != -1) || (mc->d1 != 1 && mc->d1 != -1))
      return false;
    return cert_matrix(mc->m1, mc->d1) * (*j) ==
           (*jp) * cert_matrix(mc->m0, mc->d0);
  }
  if (const auto* sc = std::get_if<SurfaceCertificate>(&cert)) {
    const auto* j = f.surface();
    const auto* jp = g.surface();
    if (!j || !jp) return false;
    if (sc->h0.handle != f.handle || sc->h1.handle != f.handle) return false;
    // Boundary homeomorphisms extending over the handle interior must
    // preserve each circle's direction class: all signs +1, swap allowed.
    for (int c = 0; c < sc->h0.circle_count(); ++c)
      if (sc->h0.sign[c] != +1 || sc->h1.sign[c] != +1) return false;
    return compose_surface(sc->h1, *j) == compose_surface(*jp, sc->h0);
  }
  if (const auto* gc = std::get_if<SignCertificate>(&cert)) {
    const auto* j = f.sign_action();
    const auto* jp = g.sign_action();
    if (!j || !jp) return false;
    if (gc->sign != 1 && gc->sign != -1) return false;
    // Both boundary maps act on the sphere factor with the same direction
    // class; conjugation leaves the sign untouched.
    return j->sign == jp->sign;
  }
  return false;
}

std::vector<SurfaceGluing> all_surface_gluings(HandleKind k) {
  std::vector<SurfaceGluing> out;
  if (k == HandleKind::Nonorientable) {
    out.push_back(SurfaceGluing::nonorientable(+1));
    out.push_back(SurfaceGluing::nonorientable(-1));
    return out;
  }
  for (bool swap : {false, true})
    for (int s0 : {+1, -1})
      for (int s1 : {+1, -1}) out.push_back(SurfaceGluing::orientable(swap, s0, s1));
  return out;
}

std::vector<GluingMatrix> unimodular_matrices(int entry_bound) {
  std::vector<GluingMatrix> out;
  const int b = entry_bound;
  for (int r = -b; r <= b; ++r)
    for (int p = -b; p <= b; ++p)
      for (int s = -b; s <= b; ++s)
        for (int q = -b; q <= b; ++q) {
          GluingMatrix m{r, p, s, q};
          if (is_unimodular(m)) out.push_back(m);
        }
  return out;
}

}  // namespace nms
