#include "nms/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace nms {

using ordered_json = nlohmann::ordered_json;

double round_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

namespace {

int parse_sign(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string(what) + " must be +1 or -1");
  const int s = j.get<int>();
  if (s != 1 && s != -1)
    throw std::invalid_argument(std::string(what) + " must be +1 or -1");
  return s;
}

ordered_json gluing_json(const ModelFlow& f) {
  if (const auto* m = f.matrix())
    return ordered_json{{"matrix", {{m->r, m->p}, {m->s, m->q}}}};
  if (const auto* s = f.surface()) {
    if (s->handle == HandleKind::Nonorientable)
      return ordered_json{{"sign", s->sign[0]}};
    return ordered_json{{"swap", s->swap}, {"signs", {s->sign[0], s->sign[1]}}};
  }
  return ordered_json{{"sign", f.sign_action()->sign}};
}

ordered_json boundary_json(const ModelFlow& f, const BoundaryPoint& b) {
  ordered_json out;
  if (f.dim == 2 && f.handle == HandleKind::Orientable) {
    out["component"] = b.component();
    out["lambda"] = round_sig(b.lambda);
  } else if (f.dim == 3 && f.handle == HandleKind::Orientable) {
    out["lambda"] = round_sig(b.lambda);
    out["mu"] = round_sig(b.mu());
  } else {
    ordered_json u = ordered_json::array();
    for (double v : b.u) u.push_back(round_sig(v));
    out["u"] = std::move(u);
    out["lambda"] = round_sig(b.lambda);
  }
  return out;
}

ordered_json trajectory_object(const ModelFlow& f, const Trajectory& t) {
  ordered_json out;
  out["version"] = 1;
  out["flow"] = ordered_json::parse(flow_spec_json(f));
  ordered_json samples = ordered_json::array();
  for (const auto& [time, p] : t.samples) {
    ordered_json y = ordered_json::array();
    for (double v : p.y) y.push_back(round_sig(v));
    samples.push_back(ordered_json::array(
        {round_sig(time), p.chart == Chart::Repeller ? "R" : "A", std::move(y),
         round_sig(p.h)}));
  }
  out["samples"] = std::move(samples);
  ordered_json transits = ordered_json::array();
  for (const auto& ev : t.transits)
    transits.push_back(ordered_json::array({round_sig(ev.time),
                                            boundary_json(f, ev.before),
                                            boundary_json(f, ev.after)}));
  out["transits"] = std::move(transits);
  return out;
}

}  // namespace

ModelFlow parse_flow_spec(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("flow spec must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("flow spec needs integer \"dim\"");
  const int dim = j["dim"].get<int>();
  if (!j.contains("handle") || !j["handle"].is_string())
    throw std::invalid_argument("flow spec needs \"handle\"");
  const std::string hs = j["handle"].get<std::string>();
  HandleKind handle;
  if (hs == "orientable")
    handle = HandleKind::Orientable;
  else if (hs == "nonorientable")
    handle = HandleKind::Nonorientable;
  else
    throw std::invalid_argument(
        "handle must be \"orientable\" or \"nonorientable\"");
  if (!j.contains("gluing") || !j["gluing"].is_object())
    throw std::invalid_argument("flow spec needs \"gluing\" object");
  const ordered_json& g = j["gluing"];

  GluingData data;
  if (dim == 2) {
    if (handle == HandleKind::Nonorientable && g.contains("sign")) {
      data = SurfaceGluing::nonorientable(parse_sign(g["sign"], "sign"));
    } else {
      if (!g.contains("swap") || !g["swap"].is_boolean() ||
          !g.contains("signs") || !g["signs"].is_array() ||
          g["signs"].size() != 2)
        throw std::invalid_argument(
            "surface gluing needs \"swap\" and two \"signs\"");
      const int s0 = parse_sign(g["signs"][0], "sign");
      const int s1 = parse_sign(g["signs"][1], "sign");
      if (handle == HandleKind::Nonorientable) {
        if (g["swap"].get<bool>())
          throw std::invalid_argument("single boundary circle cannot swap");
        data = SurfaceGluing::nonorientable(s0);
      } else {
        data = SurfaceGluing::orientable(g["swap"].get<bool>(), s0, s1);
      }
    }
  } else if (dim == 3 && handle == HandleKind::Orientable) {
    if (!g.contains("matrix") || !g["matrix"].is_array() ||
        g["matrix"].size() != 2 || !g["matrix"][0].is_array() ||
        g["matrix"][0].size() != 2 || !g["matrix"][1].is_array() ||
        g["matrix"][1].size() != 2)
      throw std::invalid_argument("gluing needs a 2x2 \"matrix\"");
    const auto& m = g["matrix"];
    for (int row = 0; row < 2; ++row)
      for (int col = 0; col < 2; ++col)
        if (!m[row][col].is_number_integer())
          throw std::invalid_argument("matrix entries must be integers");
    data = GluingMatrix{m[0][0].get<int>(), m[0][1].get<int>(),
                        m[1][0].get<int>(), m[1][1].get<int>()};
  } else {
    if (!g.contains("sign"))
      throw std::invalid_argument("gluing needs a \"sign\"");
    data = SignGluing{parse_sign(g["sign"], "sign")};
  }
  return ModelFlow::make(dim, handle, data);
}

std::string flow_spec_json(const ModelFlow& f) {
  ordered_json out;
  out["dim"] = f.dim;
  out["handle"] =
      f.handle == HandleKind::Orientable ? "orientable" : "nonorientable";
  out["gluing"] = gluing_json(f);
  return out.dump();
}

std::vector<ChartPoint> parse_seeds(const std::string& text, int dim) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("seeds must be an array");
  std::vector<ChartPoint> out;
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("chart") || !s.contains("y") ||
        !s.contains("h") || !s["y"].is_array())
      throw std::invalid_argument(
          "seed needs \"chart\", \"y\" array and \"h\"");
    ChartPoint p;
    const std::string chart = s["chart"].get<std::string>();
    if (chart == "R")
      p.chart = Chart::Repeller;
    else if (chart == "A")
      p.chart = Chart::Attractor;
    else
      throw std::invalid_argument("chart must be \"R\" or \"A\"");
    for (const auto& v : s["y"]) {
      if (!v.is_number()) throw std::invalid_argument("y entries must be numbers");
      p.y.push_back(v.get<double>());
    }
    if (static_cast<int>(p.y.size()) != dim - 1)
      throw std::invalid_argument("seed y must have dim-1 entries");
    if (!s["h"].is_number()) throw std::invalid_argument("h must be a number");
    p.h = s["h"].get<double>();
    out.push_back(std::move(p));
  }
  return out;
}

std::string trajectory_json(const ModelFlow& f, const Trajectory& t) {
  return trajectory_object(f, t).dump();
}

std::string trajectories_json(const ModelFlow& f,
                              const std::vector<Trajectory>& ts) {
  ordered_json out = ordered_json::array();
  for (const auto& t : ts) out.push_back(trajectory_object(f, t));
  return out.dump();
}

std::string certificate_json(const Certificate& c) {
  ordered_json out;
  if (const auto* m = std::get_if<MatrixCertificate>(&c)) {
    out["m0"] = m->m0;
    out["d0"] = m->d0;
    out["m1"] = m->m1;
    out["d1"] = m->d1;
  } else if (const auto* s = std::get_if<SurfaceCertificate>(&c)) {
    const auto part = [](const SurfaceGluing& h) {
      if (h.handle == HandleKind::Nonorientable)
        return ordered_json{{"sign", h.sign[0]}};
      return ordered_json{{"swap", h.swap}, {"signs", {h.sign[0], h.sign[1]}}};
    };
    out["h0"] = part(s->h0);
    out["h1"] = part(s->h1);
  } else {
    out["sign"] = std::get<SignCertificate>(c).sign;
  }
  return out.dump();
}

ManifoldId parse_manifold(const std::string& name) {
  if (name == "Torus" || name == "T2") return ManifoldId::torus();
  if (name == "KleinBottle" || name == "K2") return ManifoldId::klein_bottle();
  const auto parse_arg = [&](const std::string& prefix,
                             long& a) -> const char* {
    if (name.rfind(prefix, 0) != 0 || name.back() != ')') return nullptr;
    const char* s = name.c_str() + prefix.size();
    char* end = nullptr;
    a = std::strtol(s, &end, 10);
    return end;
  };
  long a = 0;
  if (const char* rest = parse_arg("L(", a)) {
    if (*rest == ',') {
      char* end = nullptr;
      const long b = std::strtol(rest + 1, &end, 10);
      if (end && *end == ')' && *(end + 1) == '\0')
        return ManifoldId::lens(static_cast<int>(a), static_cast<int>(b));
    }
    throw std::invalid_argument("unrecognized manifold: " + name);
  }
  if (const char* rest = parse_arg("SxS1(", a)) {
    if (*rest == ')' && *(rest + 1) == '\0')
      return ManifoldId::sphere_prod_circle(static_cast<int>(a));
  }
  if (const char* rest = parse_arg("StxS1(", a)) {
    if (*rest == ')' && *(rest + 1) == '\0')
      return ManifoldId::twisted_sphere_bundle(static_cast<int>(a));
  }
  throw std::invalid_argument("unrecognized manifold: " + name);
}

std::string manifold_name(const ManifoldId& m) {
  switch (m.kind) {
    case ManifoldId::Kind::Torus:
      return "Torus";
    case ManifoldId::Kind::KleinBottle:
      return "KleinBottle";
    case ManifoldId::Kind::Lens:
      return "L(" + std::to_string(m.p) + "," + std::to_string(m.q) + ")";
    case ManifoldId::Kind::SphereProdCircle:
      return "SxS1(" + std::to_string(m.dim) + ")";
    case ManifoldId::Kind::TwistedSphereBundle:
      return "StxS1(" + std::to_string(m.dim) + ")";
  }
  throw std::invalid_argument("unknown manifold");
}

}  // namespace nms
