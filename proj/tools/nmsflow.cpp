#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nms/classifier.hpp"
#include "nms/gluing.hpp"
#include "nms/json_io.hpp"
#include "nms/oracle.hpp"
#include "nms/portrait.hpp"
#include "nms/simulator.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

int positive_mod(int a, int m) {
  int v = a % m;
  return v < 0 ? v + m : v;
}

ordered_json invariant_json(const nms::ModelFlow& f) {
  ordered_json inv;
  if (const auto* m = f.matrix()) {
    const int p = std::abs(m->p);
    inv["p"] = p;
    inv["r"] = p == 0 ? m->r : positive_mod(m->r, p);
    return inv;
  }
  if (const auto* s = f.surface()) {
    if (s->handle == nms::HandleKind::Orientable) {
      inv["handle"] = "orientable";
      // The class is determined by the sign multiset; emit +1 first.
      inv["signs"] = s->sign[0] >= s->sign[1]
                         ? ordered_json::array({s->sign[0], s->sign[1]})
                         : ordered_json::array({s->sign[1], s->sign[0]});
    } else {
      inv["handle"] = "nonorientable";
      inv["sign"] = s->sign[0];
    }
    return inv;
  }
  inv["sign"] = f.sign_action()->sign;
  return inv;
}

int search_bound(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NMS_SEARCH_BOUND")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("NMS_SEARCH_BOUND must be an integer");
    }
  }
  return nms::oracle::kDefaultSearchBound;
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
  if (out_path)
    write_file(*out_path, text + "\n");
  else
    std::cout << text << "\n";
}

int run_classify(const std::string& flow_path) {
  const nms::ModelFlow f = nms::parse_flow_spec(read_file(flow_path));
  const auto twisted = nms::orbit_twisted(f);
  ordered_json out;
  out["version"] = 1;
  out["manifold"] = nms::manifold_name(nms::manifold_of(f));
  out["twisted"] = {twisted.first, twisted.second};
  out["invariant"] = invariant_json(f);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_equivalent(const std::string& a_path, const std::string& b_path,
                   bool use_oracle, const std::optional<int>& bound_flag) {
  const nms::ModelFlow a = nms::parse_flow_spec(read_file(a_path));
  const nms::ModelFlow b = nms::parse_flow_spec(read_file(b_path));
  ordered_json out;
  out["version"] = 1;
  if (a.dim != b.dim || a.handle != b.handle) {
    out["equivalent"] = false;
    out["certificate"] = nullptr;
    out["method"] = use_oracle ? "search" : "criteria";
    out["reason"] = "dimension or handle kind differs";
    std::cout << out.dump() << "\n";
    return 0;
  }
  const std::optional<nms::Certificate> cert =
      use_oracle ? nms::oracle::search_certificate(a, b, search_bound(bound_flag))
                 : nms::flows_equivalent(a, b);
  out["equivalent"] = cert.has_value();
  out["certificate"] = cert
                           ? ordered_json::parse(nms::certificate_json(*cert))
                           : ordered_json(nullptr);
  out["method"] = use_oracle ? "search" : "criteria";
  std::cout << out.dump() << "\n";
  return 0;
}

int run_count(const std::string& manifold) {
  const nms::ManifoldId m = nms::parse_manifold(manifold).normalized();
  ordered_json out;
  out["version"] = 1;
  out["manifold"] = nms::manifold_name(m);
  out["classes"] = nms::count_classes(m);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_representatives(const std::string& manifold) {
  const nms::ManifoldId m = nms::parse_manifold(manifold).normalized();
  ordered_json out;
  out["version"] = 1;
  out["manifold"] = nms::manifold_name(m);
  ordered_json reps = ordered_json::array();
  for (const auto& f : nms::representatives(m))
    reps.push_back(ordered_json::parse(nms::flow_spec_json(f)));
  out["representatives"] = std::move(reps);
  std::cout << out.dump() << "\n";
  return 0;
}

std::vector<nms::ChartPoint> load_seeds(
    const nms::ModelFlow& f, const std::optional<std::string>& seeds_path) {
  if (!seeds_path) return nms::default_portrait_seeds(f);
  return nms::parse_seeds(read_file(*seeds_path), f.dim);
}

int run_simulate(const std::string& flow_path,
                 const std::optional<std::string>& seeds_path, double horizon,
                 double dt, const std::optional<std::string>& out_path) {
  const nms::ModelFlow f = nms::parse_flow_spec(read_file(flow_path));
  const auto seeds = load_seeds(f, seeds_path);
  const auto trajectories = nms::sample_portrait(f, seeds, horizon, dt);
  emit(nms::trajectories_json(f, trajectories), out_path);
  return 0;
}

int run_portrait(const std::string& flow_path,
                 const std::optional<std::string>& seeds_path, double horizon,
                 double dt, const std::string& svg_path,
                 const std::optional<std::string>& out_path) {
  const nms::ModelFlow f = nms::parse_flow_spec(read_file(flow_path));
  const auto seeds = load_seeds(f, seeds_path);
  write_file(svg_path, nms::render_surface_portrait(f, seeds, horizon, dt));
  if (out_path)
    write_file(*out_path,
               nms::trajectories_json(f, nms::sample_portrait(f, seeds, horizon, dt)) +
                   "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classify and simulate nonsingular Morse-Smale flows with exactly two "
      "periodic orbits"};
  app.require_subcommand(1);

  std::string flow_a, flow_b, manifold;
  std::optional<std::string> seeds_path, out_path;
  std::optional<int> bound;
  bool use_oracle = false;
  double horizon = 16.0, dt = 0.05;
  std::string svg_path = "portrait.svg";

  auto* classify = app.add_subcommand(
      "classify", "Identify the manifold, orbit twisting and class invariant");
  classify->add_option("flow", flow_a, "flow-spec JSON path")->required();

  auto* equivalent = app.add_subcommand(
      "equivalent", "Decide topological equivalence of two flows");
  equivalent->add_option("a", flow_a, "first flow-spec JSON path")->required();
  equivalent->add_option("b", flow_b, "second flow-spec JSON path")->required();
  equivalent->add_flag("--oracle", use_oracle,
                       "use the brute-force certificate search");
  equivalent->add_option("--bound", bound,
                         "search bound (default: NMS_SEARCH_BOUND or 8)");

  auto* count = app.add_subcommand(
      "count", "Number of equivalence classes on a manifold");
  count->add_option("manifold", manifold, "e.g. L(5,1), T2, K2, SxS1(4)")
      ->required();

  auto* reps = app.add_subcommand(
      "representatives", "One flow per equivalence class on a manifold");
  reps->add_option("manifold", manifold, "e.g. L(5,1), T2, K2, SxS1(4)")
      ->required();

  auto* simulate =
      app.add_subcommand("simulate", "Sample trajectories as JSON");
  simulate->add_option("flow", flow_a, "flow-spec JSON path")->required();
  simulate->add_option("--seeds", seeds_path, "seed list JSON path");
  simulate->add_option("--horizon", horizon, "sampling horizon");
  simulate->add_option("--dt", dt, "sampling step");
  simulate->add_option("--out", out_path, "output path (default: stdout)");

  auto* portrait = app.add_subcommand(
      "portrait", "Render a surface-flow phase portrait as SVG");
  portrait->add_option("flow", flow_a, "flow-spec JSON path")->required();
  portrait->add_option("--seeds", seeds_path, "seed list JSON path");
  portrait->add_option("--horizon", horizon, "sampling horizon");
  portrait->add_option("--dt", dt, "sampling step");
  portrait->add_option("--svg", svg_path, "SVG output path");
  portrait->add_option("--out", out_path, "also write trajectory JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (classify->parsed()) return run_classify(flow_a);
    if (equivalent->parsed())
      return run_equivalent(flow_a, flow_b, use_oracle, bound);
    if (count->parsed()) return run_count(manifold);
    if (reps->parsed()) return run_representatives(manifold);
    if (simulate->parsed())
      return run_simulate(flow_a, seeds_path, horizon, dt, out_path);
    if (portrait->parsed())
      return run_portrait(flow_a, seeds_path, horizon, dt, svg_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
