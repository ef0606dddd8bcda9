#include "nms/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace nms {

namespace {

// Induced boundary-circle orientation of an oriented annulus: the two
// boundary circles inherit opposite directions. Circle 0 carries +1.
int boundary_orientation(int circle) { return circle == 0 ? +1 : -1; }

bool surface_orientable(const SurfaceGluing& j) {
  // The glued surface is orientable iff the two annuli can be oriented so
  // that the gluing reverses the induced orientation on every circle pair.
  for (int o0 : {+1, -1})
    for (int o1 : {+1, -1}) {
      bool ok = true;
      for (int c = 0; c < 2; ++c) {
        const int image = j.swap ? 1 - c : c;
        if (o0 * boundary_orientation(c) * j.sign[c] !=
            -o1 * boundary_orientation(image)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  return false;
}

int pos_mod(int a, int m) {
  int v = a % m;
  return v < 0 ? v + m : v;
}

// Smallest nonnegative x with q*x ≡ 1 (mod p); requires gcd(q,p) = 1, p ≥ 1.
int inverse_mod(int q, int p) {
  if (p == 1) return 0;  // every residue is 1 mod 1
  const int qq = pos_mod(q, p);
  for (int x = 0; x < p; ++x)
    if (pos_mod(qq * x, p) == 1) return x;
  throw std::invalid_argument("no modular inverse");
}

// True on the "integers 0 < 1 < -1 < 2 < -2 < ..." order used to make
// representative output deterministic.
bool zigzag_less(int a, int b) {
  const auto key = [](int v) { return std::pair{std::abs(v), v < 0}; };
  return key(a) < key(b);
}

bool matrix_zigzag_less(const GluingMatrix& a, const GluingMatrix& b) {
  for (auto [x, y] : {std::pair{a.r, b.r}, std::pair{a.p, b.p},
                      std::pair{a.s, b.s}, std::pair{a.q, b.q}}) {
    if (x != y) return zigzag_less(x, y);
  }
  return false;
}

int lens_class_count(int p) {
  if (p == 0) return 2;
  // Classes merge iff some r with gcd(r,p) = 1 solves 2r ≡ 0 (mod p).
  for (int r = 0; r < p; ++r)
    if (std::gcd(r, p) == 1 && (2 * r) % p == 0) return 1;
  return 2;
}

std::vector<ModelFlow> lens_representatives(const ManifoldId& m) {
  std::vector<GluingMatrix> reps;
  if (m.p == 0) {
    reps.push_back(GluingMatrix{1, 0, 0, 1});
    reps.push_back(GluingMatrix{-1, 0, 0, 1});
  } else {
    const int r0 = inverse_mod(m.q, m.p);
    const int s0 = (r0 * m.q - 1) / m.p;
    GluingMatrix plus{r0, m.p, s0, m.q};
    GluingMatrix minus{-r0, m.p, -s0, m.q};
    if (lens_class_count(m.p) == 1) {
      reps.push_back(matrix_zigzag_less(plus, minus) ? plus : minus);
    } else {
      reps = {plus, minus};
      std::sort(reps.begin(), reps.end(), matrix_zigzag_less);
    }
  }
  std::vector<ModelFlow> out;
  for (const auto& r : reps)
    out.push_back(ModelFlow::make(3, HandleKind::Orientable, r));
  return out;
}

std::vector<ModelFlow> sign_representatives(int dim, HandleKind handle) {
  return {ModelFlow::make(dim, handle, SignGluing{+1}),
          ModelFlow::make(dim, handle, SignGluing{-1})};
}

std::vector<ModelFlow> surface_representatives(const ManifoldId& m) {
  std::vector<ModelFlow> out;
  // Scan the canonically ordered gluings and keep the first member of each
  // class that lands on the requested surface.
  for (HandleKind k : {HandleKind::Orientable, HandleKind::Nonorientable}) {
    for (const auto& j : all_surface_gluings(k)) {
      ModelFlow f = ModelFlow::make(2, k, j);
      if (!(manifold_of(f) == m)) continue;
      bool seen = false;
      for (const auto& r : out)
        if (flows_equivalent(r, f)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(f);
    }
  }
  return out;
}

}  // namespace

ManifoldId manifold_of(const ModelFlow& f) {
  if (f.dim == 2) {
    if (f.handle == HandleKind::Nonorientable) return ManifoldId::klein_bottle();
    return surface_orientable(*f.surface()) ? ManifoldId::torus()
                                            : ManifoldId::klein_bottle();
  }
  if (f.dim == 3) {
    if (f.handle == HandleKind::Nonorientable)
      return ManifoldId::twisted_sphere_bundle(3);
    const auto& j = *f.matrix();
    const int p = std::abs(j.p);
    const int q = j.p < 0 ? -j.q : j.q;
    return ManifoldId::lens(p, p == 0 ? q : pos_mod(q, p)).normalized();
  }
  return f.handle == HandleKind::Orientable
             ? ManifoldId::sphere_prod_circle(f.dim)
             : ManifoldId::twisted_sphere_bundle(f.dim);
}

bool manifolds_homeomorphic(const ManifoldId& a, const ManifoldId& b) {
  return a.normalized() == b.normalized();
}

std::optional<Certificate> flows_equivalent(const ModelFlow& f,
                                            const ModelFlow& g) {
  if (f.dim != g.dim || f.handle != g.handle) return std::nullopt;
  if (f.gluing.index() != g.gluing.index()) return std::nullopt;

  if (const auto* j = f.matrix()) {
    const auto& jp = *g.matrix();
    MatrixCertificate c;
    if (j->p == 0) {
      if (jp.p != 0 || jp.r != j->r) return std::nullopt;
      // r and q are ±1 here; h0 can be taken trivial.
      c.m0 = 0;
      c.d0 = +1;
      c.d1 = jp.q * j->q * c.d0;
      c.m1 = j->r * (jp.s - c.d1 * j->s);
    } else {
      if (std::abs(jp.p) != std::abs(j->p)) return std::nullopt;
      if ((j->r - jp.r) % jp.p != 0) return std::nullopt;
      c.d0 = j->p / jp.p;
      c.m0 = (j->r - jp.r) / jp.p;
      // Solve [[r,s],[p,q]] (m1,d1)ᵀ = (s' + q' m0, q' d0)ᵀ; the system's
      // determinant is det(j) = ±1 so the solution is integral.
      const int detj = static_cast<int>(j->det());
      const int b0 = jp.s + jp.q * c.m0;
      const int b1 = jp.q * c.d0;
      c.m1 = (j->q * b0 - j->s * b1) * detj;
      c.d1 = (j->r * b1 - j->p * b0) * detj;
    }
    Certificate cert = c;
    if (!certificate_valid(cert, f, g))
      throw std::logic_error("constructed certificate failed validation");
    return cert;
  }

  if (const auto* j = f.surface()) {
    const auto& jp = *g.surface();
    std::vector<SurfaceGluing> h0s = {identity_surface(f.handle)};
    if (f.handle == HandleKind::Orientable)
      h0s.push_back(SurfaceGluing::orientable(true, +1, +1));
    for (const auto& h0 : h0s) {
      const SurfaceGluing h1 =
          compose_surface(compose_surface(jp, h0), invert_surface(*j));
      bool admissible = true;
      for (int c = 0; c < h1.circle_count(); ++c)
        if (h1.sign[c] != +1) admissible = false;
      if (!admissible) continue;
      Certificate cert = SurfaceCertificate{h0, h1};
      if (!certificate_valid(cert, f, g))
        throw std::logic_error("constructed certificate failed validation");
      return cert;
    }
    return std::nullopt;
  }

  const auto* j = f.sign_action();
  const auto& jp = *g.sign_action();
  if (j->sign != jp.sign) return std::nullopt;
  return Certificate{SignCertificate{+1}};
}

int count_classes(const ManifoldId& m) {
  const ManifoldId n = m.normalized();
  switch (n.kind) {
    case ManifoldId::Kind::Torus:
      return 2;
    case ManifoldId::Kind::KleinBottle:
      return 3;
    case ManifoldId::Kind::Lens:
      return lens_class_count(n.p);
    case ManifoldId::Kind::SphereProdCircle:
    case ManifoldId::Kind::TwistedSphereBundle:
      return 2;
  }
  throw std::invalid_argument("unknown manifold");
}

std::vector<ModelFlow> representatives(const ManifoldId& m) {
  const ManifoldId n = m.normalized();
  switch (n.kind) {
    case ManifoldId::Kind::Torus:
    case ManifoldId::Kind::KleinBottle:
      return surface_representatives(n);
    case ManifoldId::Kind::Lens:
      return lens_representatives(n);
    case ManifoldId::Kind::SphereProdCircle:
      return sign_representatives(n.dim, HandleKind::Orientable);
    case ManifoldId::Kind::TwistedSphereBundle:
      return n.dim == 3 ? sign_representatives(3, HandleKind::Nonorientable)
                        : sign_representatives(n.dim, HandleKind::Nonorientable);
  }
  throw std::invalid_argument("unknown manifold");
}

std::pair<bool, bool> orbit_twisted(const ModelFlow& f) {
  const bool twisted = f.handle == HandleKind::Nonorientable;
  return {twisted, twisted};
}

}  // namespace nms
