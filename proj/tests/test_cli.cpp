#include "bihamil/catalog.hpp"
#include "bihamil/cli.hpp"
#include "bihamil/errors.hpp"
#include "bihamil/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace bihamil;
namespace fs = std::filesystem;

namespace {

Json run_json(std::vector<std::string> args, int expect_exit = 0) {
  args.push_back("--format");
  args.push_back("json");
  auto r = cli::run(args);
  REQUIRE_MESSAGE(r.exit_code == expect_exit, r.err);
  return Json::parse(r.out);
}

fs::path write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("bihamil_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("check-jacobi") {
  auto so = run_json({"check-jacobi", "--algebra", "so3"});
  CHECK(so["schema"] == "bihamil/1");
  CHECK(so["results"]["pass"] == true);
  CHECK(so["results"]["canonical_pair"]["is_pair"] == true);
  CHECK(run_json({"check-jacobi", "--algebra", "d45"})["results"]["pass"] == true);

  Json alg = algebra_to_json(so3());
  alg["name"] = "so3_perturbed";
  alg["brackets"].push_back(Json{{"i", 1}, {"j", 2}, {"k", 1}, {"re", "1"}, {"im", "0"}});
  auto path = write_temp("perturbed.json", alg.dump());
  auto bad = run_json({"check-jacobi", "--algebra-file", path.string()});
  CHECK(bad["results"]["pass"] == false);
  CHECK(bad["results"]["schouten_cc_zero"] == false);
  CHECK_FALSE(bad["results"]["schouten_cc_components"].empty());
}

TEST_CASE("pencil") {
  auto r = run_json({"pencil", "--pair", "kron_2068", "--point", "(1,2,1,3,4,5)", "--point", "(1,2,0,3,4,5)"});
  auto pts = r["results"]["points"];
  CHECK(pts[0]["invariants"]["kronecker_block_dims"] == Json::array({3, 3}));
  CHECK(pts[1]["invariants"]["kronecker_block_dims"] == Json::array({5, 1}));

  auto j = run_json({"pencil", "--pair", "jordan4_lam(3)"});
  CHECK(j["results"]["points"][0]["completeness"]["complete"] == false);
  CHECK(j["results"]["points"][0]["completeness"]["degenerate_directions"].size() == 1);

  auto c = run_json({"pencil", "--algebra", "so3", "--point", "(1,i,0)"});
  CHECK(c["results"]["mode"] == "canonical");
  CHECK(c["results"]["points"][0]["completeness"]["complete"] == true);

  CHECK(cli::run({"pencil", "--pair", "kron_2068", "--point", "(1,i,0,0,0,0)"}).exit_code == 2);
}

TEST_CASE("classify, orbit and reduce") {
  auto so = run_json({"classify", "--algebra", "so3", "--point", "(1,i,0)", "--point", "(0,0,0)"});
  auto p = so["results"]["points"];
  CHECK(p[0]["in_sing"] == false);
  CHECK(p[0]["in_incompleteness"] == false);
  CHECK(p[0]["in_irregularity"] == false);
  CHECK(p[0]["mu"] == 0);
  CHECK(p[1]["in_sing"] == true);
  CHECK(p[1]["in_incompleteness"] == true);
  CHECK(p[1]["in_irregularity"] == true);

  auto d = run_json({"classify", "--algebra", "d45", "--points", "2"});
  for (const auto& q : d["results"]["points"]) CHECK(q["mu"] == 8);

  auto o = run_json({"orbit", "--algebra", "d45", "--points", "2"});
  for (const auto& q : o["results"]["points"]) {
    CHECK(q["orbit_dim"] == 6);
    CHECK(q["cr_dim"] == 2);
  }

  auto red = run_json({"reduce", "--algebra", "so3", "--point", "(1,i,0)"});
  auto rp = red["results"]["points"][0];
  CHECK(rp["complete"] == true);
  CHECK(rp["minimal"] == true);
  CHECK(rp["quotient_dim"] == 1);

  auto sing = cli::run({"reduce", "--algebra", "so3", "--point", "(0,0,0)"});
  CHECK(sing.exit_code == 3);
  CHECK(sing.err.find("Sing") != std::string::npos);
}

TEST_CASE("integrals") {
  auto r = run_json({"integrals", "--algebra", "so3", "--degree", "2", "--lambda-samples", "5"});
  CHECK(r["results"]["family_size"] == 5);
  CHECK(r["results"]["involutive"] == true);
  CHECK(r["results"]["cr_lagrangian"]["lagrangian"] == true);
  for (const auto& m : r["results"]["members"]) CHECK(m["g0_invariant"] == true);

  auto ab = run_json({"integrals", "--algebra", "abelian3"});
  CHECK(ab["results"]["family_size"] == 0);
  CHECK_FALSE(ab["warnings"].empty());
}

TEST_CASE("exit codes") {
  CHECK(cli::run({"classify", "--algebra", "nope"}).exit_code == 2);
  CHECK(cli::run({"classify", "--algebra", "so3", "--point", "(1,2)"}).exit_code == 2);
  CHECK(cli::run({"classify", "--algebra", "so3", "--point", "1,2,3"}).exit_code == 2);
  CHECK(cli::run({"classify", "--algebra", "so3", "--point", "(1,,3)"}).exit_code == 2);
  CHECK(cli::run({"classify"}).exit_code == 2);
  CHECK(cli::run({"classify", "--algebra", "so3", "--algebra-file", "x.json"}).exit_code == 2);
  CHECK(cli::run({"frobnicate"}).exit_code == 2);
  CHECK(cli::run({"classify", "--algebra", "so3", "--format", "yaml"}).exit_code == 2);
  CHECK(cli::run({"classify", "--algebra", "so3", "--points", "0"}).exit_code == 2);
  CHECK(cli::run({"--help"}).exit_code == 0);

  auto junk = write_temp("junk.json", "{ not json");
  CHECK(cli::run({"check-jacobi", "--algebra-file", junk.string()}).exit_code == 2);
  CHECK(cli::run({"check-jacobi", "--algebra-file", "/nonexistent/alg.json"}).exit_code == 2);

  Json complex_alg = algebra_to_json(so3());
  complex_alg["brackets"][0]["im"] = "1";
  auto cpath = write_temp("complex.json", complex_alg.dump());
  CHECK(cli::run({"check-jacobi", "--algebra-file", cpath.string()}).exit_code == 2);
}

TEST_CASE("determinism across runs and thread counts") {
  std::vector<std::vector<std::string>> suite{
      {"check-jacobi", "--algebra", "sl3"},
      {"pencil", "--pair", "kron_2068"},
      {"classify", "--algebra", "so3xso3"},
      {"orbit", "--algebra", "sl2r"},
      {"reduce", "--algebra", "so3xso3"},
      {"integrals", "--algebra", "so3"},
  };
  for (auto args : suite) {
    args.insert(args.end(), {"--format", "json", "--seed", "42"});
    auto a = cli::run(args);
    auto b = cli::run(args);
    args.insert(args.end(), {"--threads", "4"});
    auto c = cli::run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  auto s42 = cli::run({"classify", "--algebra", "so3", "--seed", "42"});
  auto s43 = cli::run({"classify", "--algebra", "so3", "--seed", "43"});
  CHECK(s42.out != s43.out);
}

TEST_CASE("output file and text format") {
  fs::path out = fs::temp_directory_path() / "bihamil_test_report.json";
  fs::remove(out);
  auto r = cli::run({"reduce", "--algebra", "so3", "--point", "(1,i,0)", "--format", "json", "--output", out.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  Json j = Json::parse(in);
  CHECK(j["command"] == "reduce");

  auto t = cli::run({"reduce", "--algebra", "so3", "--point", "(1,i,0)"});
  CHECK(t.out.find("results.points[0].complete: true") != std::string::npos);
}

TEST_CASE("catalog algebras and pairs round-trip through JSON") {
  for (const auto& name : catalog_algebra_names()) {
    LieAlgebraSpec g = catalog_algebra(name);
    Json j = Json::parse(algebra_to_json(g).dump());
    CHECK(algebra_from_json(j) == g);
  }
  for (auto name : catalog_pair_names()) {
    if (name.find('<') != std::string::npos) name = "jordan4_lam(2+i)";
    BivectorPair p = catalog_pair(name);
    BivectorPair q = pair_from_json(Json::parse(pair_to_json(p).dump()));
    CHECK(q.c1 == p.c1);
    CHECK(q.c2 == p.c2);
    CHECK(q.variables == p.variables);
  }
  CHECK(parse_point_literal("( 1/2 , -i , 3+2i )") == Vec{GaussianRational(Rational(1, 2)), -GaussianRational::i(),
                                                          GaussianRational(3, 2)});
  CHECK_THROWS_AS(parse_point_literal("((1,2))"), InputError);
  CHECK_THROWS_AS(parse_point_literal("(1;2)"), InputError);
}
