#include <doctest.h>

#include <cmath>

#include "aniso/perimeter.hpp"
#include "aniso/steiner.hpp"
#include "support/corpus.hpp"

using namespace aniso;

namespace {

ConvexBody shifted_triangle() {
  return ConvexBody::polytope({{-1.0, -0.5}, {1.0, -0.5}, {0.0, 1.5}});
}

bool loops_convex_ccw(const ConvexBody& K) {
  const auto& v = K.vertices();
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    Vec2 e1 = v[(i + 1) % n] - v[i];
    Vec2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    if (e1.cross(e2) < -1e-12) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("symmetral of the shifted triangle is the unit diamond") {
  auto res = steiner_symmetrize(shifted_triangle());
  ConvexBody diamond =
      ConvexBody::polytope({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}});
  CHECK(hausdorff_distance(res.body, diamond) <= 1e-9);
  // chord profile 2(1-|x|)
  CHECK(res.section_width.value(0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(res.section_width.value(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.section_width.value(-0.25) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(res.section_width.value(2.0) == 0.0);
}

TEST_CASE("symmetral of a sheared square is the centered rectangle") {
  ConvexBody sheared = ConvexBody::polytope(
      {{0.0, 0.0}, {1.0, 1.0}, {1.0, 3.0}, {0.0, 2.0}},
      PolytopeOptions{false});
  auto res = steiner_symmetrize(sheared);
  ConvexBody rect = ConvexBody::polytope(
      {{1.0, -1.0}, {1.0, 1.0}, {0.0, 1.0}, {0.0, -1.0}},
      PolytopeOptions{false});
  CHECK(hausdorff_distance(res.body, rect) <= 1e-9);
  CHECK(res.body.area() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("axis-symmetric bodies are fixed points") {
  for (const ConvexBody& K :
       {ConvexBody::polytope({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}),
        ConvexBody::polytope({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}),
        ConvexBody::ellipse(2.0, 1.0)}) {
    auto res = steiner_symmetrize(K);
    CHECK(hausdorff_distance(res.body, K) <= 1e-9);
  }
  // an ellipse symmetral stays an exact ellipse, not a polygonization
  auto res = steiner_symmetrize(ConvexBody::ellipse(1.5, 0.75));
  CHECK(res.body.kind() == BodyKind::Ellipse);
  CHECK(support_eval(res.body, Vec2{0.0, 1.0}) ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("support symmetry check distinguishes symmetric bodies") {
  CHECK(support_symmetry_check(
      ConvexBody::polytope({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}})));
  CHECK(support_symmetry_check(ConvexBody::polytope(
      {{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}})));
  CHECK(support_symmetry_check(ConvexBody::ellipse(2.0, 1.0)));
  CHECK_FALSE(support_symmetry_check(shifted_triangle()));
}

TEST_CASE("random polygons: area preserved, output convex and symmetric") {
  corpus::Rng rng(7101);
  for (int it = 0; it < 40; ++it) {
    ConvexBody K = corpus::random_polygon(rng);
    auto res = steiner_symmetrize(K);
    CHECK(std::fabs(res.body.area() - K.area()) <= 1e-9 * (1.0 + K.area()));
    CHECK(loops_convex_ccw(res.body));
    CHECK(support_symmetry_check(res.body));
    // chords agree with the input at sampled abscissae
    SbvProfile profile = section_length_profile(K.vertices());
    const double lo = profile.support_lo(), hi = profile.support_hi();
    for (double s : {0.13, 0.5, 0.86}) {
      double x = lo + s * (hi - lo);
      CHECK(res.section_width.value(x) ==
            doctest::Approx(profile.value(x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("idempotence") {
  corpus::Rng rng(7102);
  for (int it = 0; it < 20; ++it) {
    ConvexBody K = corpus::random_polygon(rng);
    auto once = steiner_symmetrize(K);
    auto twice = steiner_symmetrize(once.body);
    CHECK(hausdorff_distance(once.body, twice.body) <= 1e-9);
  }
}

TEST_CASE("build_F_of_v rebuilds model sets") {
  SUBCASE("constant profile gives a rectangle") {
    auto W = build_F_of_v(SbvProfile::indicator(0.0, 1.0, 2.0));
    CHECK(W.b.is_zero());
    auto loops = polygonize(W);
    REQUIRE(loops.loops.size() == 1);
    CHECK(loops.area() == doctest::Approx(2.0).epsilon(1e-12));
    ConvexBody rect = ConvexBody::polytope(
        {{1.0, -1.0}, {1.0, 1.0}, {0.0, 1.0}, {0.0, -1.0}},
      PolytopeOptions{false});
    for (const Vec2& p : loops.loops[0])
      CHECK(distance_to_body(p, rect) <= 1e-12);
  }
  SUBCASE("zero profile gives the empty set") {
    auto W = build_F_of_v(SbvProfile{});
    auto loops = polygonize(W);
    CHECK(loops.loops.empty());
    CHECK(loops.area() == 0.0);
  }
  SUBCASE("tent profile gives the centered rhombus of half height") {
    auto W = build_F_of_v(SbvProfile::piecewise_linear(
        {{-1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}}));
    auto loops = polygonize(W);
    REQUIRE(loops.loops.size() == 1);
    CHECK(loops.area() == doctest::Approx(1.0).epsilon(1e-12));
    ConvexBody rhombus = ConvexBody::polytope(
        {{1.0, 0.0}, {0.0, 0.5}, {-1.0, 0.0}, {0.0, -0.5}});
    for (const Vec2& p : loops.loops[0])
      CHECK(distance_to_body(p, rhombus) <= 1e-12);
    CHECK(loops.loops[0].size() == 4);
  }
}

TEST_CASE("symmetrization strictly shrinks the self-perimeter of an "
          "asymmetric polygon") {
  ConvexBody K = shifted_triangle();
  auto res = steiner_symmetrize(K);
  double pk_of_k = polygon_perimeter(PolygonSet{{K.vertices()}}, K);
  double pk_of_sym =
      polygon_perimeter(PolygonSet{{res.body.vertices()}}, K);
  CHECK(pk_of_k == doctest::Approx(2.0 * K.area()).epsilon(1e-12));
  CHECK(pk_of_k < pk_of_sym - 1e-9);
  CHECK(pk_of_k == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(pk_of_sym == doctest::Approx(6.0).epsilon(1e-12));
}
