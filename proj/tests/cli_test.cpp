#include "doctest.h"

#include <string>

#include "json.hpp"
#include "test_support.hpp"

using njson = nlohmann::json;
using support::run_cli;
using support::write_fixture;

namespace {

size_t count_substr(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

const std::string kTorusSpec =
    R"({"dim":2,"handle":"orientable","gluing":{"swap":false,"signs":[1,1]}})";
const std::string kKleinSpec =
    R"({"dim":2,"handle":"nonorientable","gluing":{"sign":-1}})";
const std::string kHopfSpec =
    R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[0,1],[1,0]]}})";

}  // namespace

TEST_CASE("cli classify reports manifold, twist and invariant") {
  const std::string path = write_fixture("hopf.json", kHopfSpec);
  const auto res = run_cli("classify " + path);
  REQUIRE(res.status == 0);
  const auto doc = njson::parse(res.out);
  CHECK(doc["version"] == 1);
  CHECK(doc["manifold"] == "L(1,0)");
  CHECK(doc["twisted"] == njson::array({false, false}));
  CHECK(doc["invariant"]["p"] == 1);
  CHECK(doc["invariant"]["r"] == 0);

  const std::string kpath = write_fixture("klein.json", kKleinSpec);
  const auto kres = run_cli("classify " + kpath);
  REQUIRE(kres.status == 0);
  const auto kdoc = njson::parse(kres.out);
  CHECK(kdoc["manifold"] == "KleinBottle");
  CHECK(kdoc["twisted"] == njson::array({true, true}));
  CHECK(kdoc["invariant"]["handle"] == "nonorientable");
  CHECK(kdoc["invariant"]["sign"] == -1);

  const std::string tpath = write_fixture("torus.json", kTorusSpec);
  const auto tdoc = njson::parse(run_cli("classify " + tpath).out);
  CHECK(tdoc["manifold"] == "Torus");
  CHECK(tdoc["invariant"]["signs"] == njson::array({1, 1}));
}

TEST_CASE("cli classify output is byte deterministic") {
  const std::string path = write_fixture("lens.json",
      R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[1,5],[0,1]]}})");
  const auto a = run_cli("classify " + path);
  const auto b = run_cli("classify " + path);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(njson::parse(a.out)["manifold"] == "L(5,1)");
}

TEST_CASE("cli rejects bad input with exit code 2") {
  const std::string bad = write_fixture("bad_matrix.json",
      R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[2,0],[0,1]]}})");
  const auto res = run_cli("classify " + bad);
  CHECK(res.status == 2);
  CHECK(res.out.empty());
  CHECK(res.err.find("error:") != std::string::npos);
  CHECK(res.err.find("matrix not unimodular") != std::string::npos);

  const std::string garbled = write_fixture("garbled.json", "{{{");
  const auto gres = run_cli("classify " + garbled);
  CHECK(gres.status == 2);
  CHECK(gres.err.find("malformed JSON") != std::string::npos);

  const auto missing = run_cli("classify /nonexistent/flow.json");
  CHECK(missing.status == 2);
  CHECK(missing.err.find("cannot read file") != std::string::npos);

  const auto nocmd = run_cli("");
  CHECK(nocmd.status != 0);
}

TEST_CASE("cli equivalent: criteria and certificate") {
  const std::string a = write_fixture("eq_a.json",
      R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[1,2],[0,1]]}})");
  const std::string b = write_fixture("eq_b.json",
      R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[-1,2],[1,-1]]}})");
  const auto res = run_cli("equivalent " + a + " " + b);
  REQUIRE(res.status == 0);
  const auto doc = njson::parse(res.out);
  CHECK(doc["version"] == 1);
  CHECK(doc["equivalent"] == true);
  CHECK(doc["method"] == "criteria");
  CHECK(doc["certificate"]["m0"] == 1);
  CHECK(doc["certificate"]["d0"] == 1);
  CHECK(doc["certificate"]["m1"] == 0);
  CHECK(doc["certificate"]["d1"] == -1);

  const std::string c = write_fixture("eq_c.json",
      R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[-1,5],[0,-1]]}})");
  const auto neq = njson::parse(run_cli("equivalent " + a + " " + c).out);
  CHECK(neq["equivalent"] == false);
  CHECK(neq["certificate"].is_null());
}

TEST_CASE("cli equivalent: dimension mismatch short-circuits with a reason") {
  const std::string a = write_fixture("dim_a.json", kTorusSpec);
  const std::string b = write_fixture("dim_b.json", kHopfSpec);
  const auto doc = njson::parse(run_cli("equivalent " + a + " " + b).out);
  CHECK(doc["equivalent"] == false);
  CHECK(doc["certificate"].is_null());
  CHECK(doc["reason"] == "dimension or handle kind differs");
}

TEST_CASE("cli equivalent: oracle search respects the bound") {
  const std::string a = write_fixture("bound_a.json",
      R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[1,7],[0,1]]}})");
  const std::string b = write_fixture("bound_b.json",
      R"({"dim":3,"handle":"orientable","gluing":{"matrix":[[8,7],[1,1]]}})");

  const auto tight =
      njson::parse(run_cli("equivalent --oracle --bound 0 " + a + " " + b).out);
  CHECK(tight["equivalent"] == false);
  CHECK(tight["method"] == "search");

  const auto loose =
      njson::parse(run_cli("equivalent --oracle --bound 1 " + a + " " + b).out);
  CHECK(loose["equivalent"] == true);
  CHECK(loose["certificate"]["m0"] == -1);
  CHECK(loose["certificate"]["d0"] == 1);

  // the environment supplies the bound when the flag is absent
  const auto env_tight = njson::parse(
      run_cli("equivalent --oracle " + a + " " + b, "NMS_SEARCH_BOUND=0").out);
  CHECK(env_tight["equivalent"] == false);
  const auto env_loose = njson::parse(
      run_cli("equivalent --oracle " + a + " " + b, "NMS_SEARCH_BOUND=1").out);
  CHECK(env_loose["equivalent"] == true);
  // an explicit flag wins over the environment
  const auto flag_wins = njson::parse(
      run_cli("equivalent --oracle --bound 1 " + a + " " + b,
              "NMS_SEARCH_BOUND=0")
          .out);
  CHECK(flag_wins["equivalent"] == true);

  const auto bad_env = run_cli("equivalent --oracle " + a + " " + b,
                               "NMS_SEARCH_BOUND=soon");
  CHECK(bad_env.status == 2);
  CHECK(bad_env.err.find("NMS_SEARCH_BOUND") != std::string::npos);
}

TEST_CASE("cli count and representatives") {
  const auto kb = njson::parse(run_cli("count K2").out);
  CHECK(kb["version"] == 1);
  CHECK(kb["manifold"] == "KleinBottle");
  CHECK(kb["classes"] == 3);

  CHECK(njson::parse(run_cli("count 'L(1,0)'").out)["classes"] == 1);
  CHECK(njson::parse(run_cli("count 'L(5,1)'").out)["classes"] == 2);
  CHECK(njson::parse(run_cli("count T2").out)["classes"] == 2);
  // unnormalized input: normalized in the echo
  const auto folded = njson::parse(run_cli("count 'L(5,4)'").out);
  CHECK(folded["manifold"] == "L(5,1)");
  CHECK(folded["classes"] == 2);

  const auto res = run_cli("count 'L(4,2)'");
  CHECK(res.status == 2);
  CHECK(res.err.find("coprime") != std::string::npos);

  const auto reps = njson::parse(run_cli("representatives Torus").out);
  CHECK(reps["manifold"] == "Torus");
  REQUIRE(reps["representatives"].size() == 2);
  CHECK(reps["representatives"][0]["gluing"]["signs"] ==
        njson::array({1, 1}));
  CHECK(reps["representatives"][1]["gluing"]["signs"] ==
        njson::array({-1, -1}));

  const auto kreps = njson::parse(run_cli("representatives K2").out);
  REQUIRE(kreps["representatives"].size() == 3);
  CHECK(kreps["representatives"][0]["handle"] == "orientable");
  CHECK(kreps["representatives"][1]["handle"] == "nonorientable");
  CHECK(kreps["representatives"][1]["gluing"]["sign"] == 1);
  CHECK(kreps["representatives"][2]["gluing"]["sign"] == -1);
}

TEST_CASE("cli simulate emits one trajectory per seed") {
  const std::string path = write_fixture("sim_torus.json", kTorusSpec);
  const auto res = run_cli("simulate " + path + " --horizon 4 --dt 0.5");
  REQUIRE(res.status == 0);
  const auto doc = njson::parse(res.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 8);  // default seed fan for surfaces
  for (const auto& tr : doc) {
    CHECK(tr["version"] == 1);
    CHECK(tr["samples"].size() == 9);
  }

  // deterministic bytes across runs
  const auto rerun = run_cli("simulate " + path + " --horizon 4 --dt 0.5");
  CHECK(res.out == rerun.out);

  // explicit seeds override the fan
  const std::string seeds = write_fixture(
      "sim_seeds.json", R"([{"chart":"R","y":[0.5],"h":0}])");
  const auto one = njson::parse(
      run_cli("simulate " + path + " --seeds " + seeds +
              " --horizon 3 --dt 1")
          .out);
  REQUIRE(one.size() == 1);
  REQUIRE(one[0]["transits"].size() == 1);
  CHECK(one[0]["transits"][0][0] == 2.0);

  // --out writes the same document to a file
  const std::string out_path =
      (support::scratch_dir() / "sim_out.json").string();
  const auto filed = run_cli("simulate " + path +
                             " --horizon 4 --dt 0.5 --out " + out_path);
  REQUIRE(filed.status == 0);
  CHECK(filed.out.empty());
  CHECK(support::slurp(out_path) == res.out);
}

TEST_CASE("cli portrait writes an SVG with the expected structure") {
  const std::string path = write_fixture("por_torus.json", kTorusSpec);
  const std::string svg_path = (support::scratch_dir() / "torus.svg").string();
  const std::string json_path =
      (support::scratch_dir() / "torus_traj.json").string();
  const auto res = run_cli("portrait " + path + " --svg " + svg_path +
                           " --out " + json_path);
  REQUIRE(res.status == 0);
  const std::string svg = support::slurp(svg_path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count_substr(svg, "class=\"periodic-orbit\"") == 2);
  CHECK(count_substr(svg, "class=\"trajectory\"") == 8);
  CHECK(count_substr(svg, "class=\"transit\"") >= 8);
  const auto traj = njson::parse(support::slurp(json_path));
  CHECK(traj.is_array());
  CHECK(traj.size() == 8);

  // rendering is byte-deterministic too
  const std::string svg2_path =
      (support::scratch_dir() / "torus2.svg").string();
  run_cli("portrait " + path + " --svg " + svg2_path);
  CHECK(support::slurp(svg2_path) == svg);

  // portraits only exist for surface flows
  const std::string hopf = write_fixture("por_hopf.json", kHopfSpec);
  const auto bad = run_cli("portrait " + hopf + " --svg " + svg_path);
  CHECK(bad.status == 2);
  CHECK(bad.err.find("surface") != std::string::npos);
}
