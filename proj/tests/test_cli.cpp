// End-to-end checks of the installed binary: exit codes, JSON schemas,
// byte-determinism, and diagnostics. The binary path arrives via ANISO_CLI.
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <aniso/json_io.hpp>
#include <aniso/perimeter.hpp>
#include <aniso/rigidity.hpp>

using namespace aniso;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const char* exe = std::getenv("ANISO_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "ANISO_CLI must point at the binary");
  std::string cmd = std::string("\"") + exe + "\" " + args +
                    " > cli_stdout.txt 2> cli_stderr.txt";
  int rc = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  r.out = slurp("cli_stdout.txt");
  r.err = slurp("cli_stderr.txt");
  return r;
}

const char* kSquare =
      R"({"kind":"polytope","vertices":[[1,1],[-1,1],[-1,-1],[1,-1]]})";
const char* kDiamond =
      R"({"kind":"polytope","vertices":[[1,0],[0,1],[-1,0],[0,-1]]})";
const char* kTriangle =
      R"({"kind":"polytope","vertices":[[-1,-0.5],[1,-0.5],[0,1.5]]})";
const char* kSlabV =
      R"({"nodes":[0,1],"values_left":[0,2],"values_right":[2,0]})";

}  // namespace

TEST_CASE("body: canonical echo, info text, determinism") {
  spit("cli_square.json", kSquare);
  auto r = run_cli("body cli_square.json");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("kind") == "polytope");
  ConvexBody K = body_from_json(j);
  CHECK(support_eval(K, Vec2{1.0, 1.0}) == doctest::Approx(2.0));

  auto again = run_cli("body cli_square.json");
  CHECK(again.out == r.out);

  auto info = run_cli("body --info cli_square.json");
  REQUIRE(info.code == 0);
  CHECK(info.out.find("area: 4\n") != std::string::npos);
  CHECK(info.out.find("origin_inside: true") != std::string::npos);
}

TEST_CASE("body: polar of the square is the diamond") {
  spit("cli_square.json", kSquare);
  auto r = run_cli("body --polar cli_square.json");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  Json expect = Json::parse(
      R"({"vertices":[[-1,0],[0,-1],[1,0],[0,1]]})");
  CHECK(j.at("vertices") == expect.at("vertices"));
}

TEST_CASE("steiner: symmetral body and width profile") {
  spit("cli_tri.json", kTriangle);
  auto r = run_cli("steiner cli_tri.json");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  ConvexBody sym = body_from_json(j.at("body"));
  ConvexBody diamond = body_from_json(Json::parse(kDiamond));
  CHECK(hausdorff_distance(sym, diamond) <= 1e-9);
  CHECK(sym.area() == doctest::Approx(2.0).epsilon(1e-12));
  SbvProfile w = profile_from_json(j.at("section_width"));
  CHECK(w.value(0.0) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("perimeter: polygon route and strip clipping") {
  spit("cli_square.json", kSquare);
  spit("cli_sqset.json",
       R"({"loops":[[[-1,-1],[1,-1],[1,1],[-1,1]]]})");
  auto r = run_cli("perimeter --body cli_square.json --set cli_sqset.json");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("total").get<double>() ==
        doctest::Approx(8.0).epsilon(1e-12));

  spit("cli_bigset.json",
       R"({"loops":[[[0,0],[2,0],[2,2],[0,2]]]})");
  auto s = run_cli(
      "perimeter --body cli_square.json --set cli_bigset.json --strip 0,1");
  REQUIRE(s.code == 0);
  CHECK(Json::parse(s.out).at("total").get<double>() ==
        doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("perimeter: profile-pair route with breakdown") {
  spit("cli_diamond.json", kDiamond);
  spit("cli_v.json", kSlabV);
  auto r = run_cli("perimeter --body cli_diamond.json --set cli_v.json");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("total").get<double>() == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(j.at("ac_part").get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(j.at("boundary_zero_part").get<double>() ==
        doctest::Approx(4.0).epsilon(1e-12));

  auto again = run_cli("perimeter --body cli_diamond.json --set cli_v.json");
  CHECK(again.out == r.out);
}

TEST_CASE("rigidity: exit codes track the verdict, witness is replayable") {
  spit("cli_square.json", kSquare);
  spit("cli_diamond.json", kDiamond);
  spit("cli_v.json", kSlabV);

  auto eq = run_cli("rigidity --body cli_square.json --profile cli_v.json");
  CHECK(eq.code == 0);
  CHECK(Json::parse(eq.out).at("verdict") == "Equivalent");

  auto ng = run_cli("rigidity --body cli_diamond.json --profile cli_v.json");
  CHECK(ng.code == 2);
  Json j = Json::parse(ng.out);
  CHECK(j.at("verdict") == "NotGuaranteed");
  REQUIRE(j.contains("witness"));
  VDistributedSet w;
  w.v = profile_from_json(j.at("witness").at("v"));
  w.b = profile_from_json(j.at("witness").at("b"));
  ConvexBody diamond = body_from_json(Json::parse(kDiamond));
  CHECK(std::fabs(steiner_gap(w, diamond)) <= 1e-9);
}

TEST_CASE("tvk: totals and the partition lower bound") {
  spit("cli_mu.json",
       R"({"atoms":[{"location":0,"vector":[3,4]}]})");
  spit("cli_square.json", kSquare);
  auto r = run_cli(
      "tvk --measure cli_mu.json --body cli_square.json --window -1,1");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("total_variation").get<double>() == doctest::Approx(5.0));
  CHECK(j.at("anisotropic_total_variation").get<double>() ==
        doctest::Approx(7.0));
  CHECK(j.at("sup_partition").get<double>() == doctest::Approx(7.0));
}

TEST_CASE("repro: sheared-stack table and determinism") {
  auto r = run_cli("repro fig2");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  const auto& rows = j.at("rows");
  REQUIRE(rows.size() == 6);
  for (int k = 0; k < 4; ++k) {
    CHECK(rows[k].at("perimeter").get<double>() ==
          doctest::Approx(6.0).epsilon(1e-9));
    CHECK(rows[k].at("equality_conditions").get<bool>());
  }
  for (int k = 4; k < 6; ++k) {
    const double beta = k * M_PI / 12.0;
    CHECK(rows[k].at("perimeter").get<double>() ==
          doctest::Approx(4.0 + 2.0 * std::tan(beta)).epsilon(1e-9));
    CHECK_FALSE(rows[k].at("equality_conditions").get<bool>());
  }
  auto again = run_cli("repro fig2");
  CHECK(again.out == r.out);

  auto contrast = run_cli("repro fig6");
  REQUIRE(contrast.code == 0);
  Json c = Json::parse(contrast.out);
  CHECK(c.at("ellipse").at("report").at("verdict") == "Equivalent");
  CHECK(c.at("inscribed_polygon").at("report").at("verdict") ==
        "NotGuaranteed");
}

TEST_CASE("svg rendering produces well-formed files") {
  spit("cli_tri.json", kTriangle);
  auto r = run_cli("steiner cli_tri.json --svg cli_tri.svg");
  REQUIRE(r.code == 0);
  std::string svg = slurp("cli_tri.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polygon") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("diagnostics: malformed input, bad geometry, bad usage") {
  spit("cli_bad.json", "{ \"kind\": \n oops");
  auto r = run_cli("body cli_bad.json");
  CHECK(r.code == 3);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.err.find("cli_bad.json:2:") != std::string::npos);

  auto missing = run_cli("body cli_nonexistent.json");
  CHECK(missing.code == 3);

  spit("cli_flat.json",
       R"({"kind":"polytope","vertices":[[0,0],[1,1],[2,2]]})");
  auto flat = run_cli("body cli_flat.json");
  CHECK(flat.code == 3);

  auto usage = run_cli("");
  CHECK(usage.code != 0);
}

TEST_CASE("global tolerance flag is accepted") {
  spit("cli_square.json", kSquare);
  auto r = run_cli("--tol 1e-9 body cli_square.json");
  CHECK(r.code == 0);
}
