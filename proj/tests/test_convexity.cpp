#include <doctest.h>

#include "test_support.hpp"

using namespace centroflow;
using namespace centroflow::testing;

TEST_CASE("published pentagon is convex with positive curvatures") {
  const Polygon pent =
      Polygon::closed2({{10, 22}, {8, 2}, {21, 0}, {37, 2}, {48, 28}});
  const ConvexityReport report = convexity_check(pent);
  CHECK(report.is_simple);
  CHECK(report.is_convex);
  CHECK(report.negative_kappa.empty());
}

TEST_CASE("pentagram star is not simple") {
  CHECK_FALSE(convexity_check(generate_regular(5, 2)).is_simple);
}

TEST_CASE("reflex quadrilateral has a negative curvature") {
  const Polygon quad = Polygon::closed2({{0, 0}, {4, 0}, {1, 1}, {0, 4}});
  const ConvexityReport report = convexity_check(quad);
  CHECK(report.is_simple);
  CHECK_FALSE(report.is_convex);
  CHECK_FALSE(report.negative_kappa.empty());

  // Orientation-area oracle: kappa_k > 0 exactly when P_{k-1} and P_{k+2}
  // land on the same side of the line P_k P_{k+1}.
  const Signature sig = compute_signature(quad);
  for (int k = 0; k < 4; ++k) {
    const double before = det2(quad.vertex2(k + 1) - quad.vertex2(k),
                               quad.vertex2(k - 1) - quad.vertex2(k));
    const double after = det2(quad.vertex2(k + 1) - quad.vertex2(k),
                              quad.vertex2(k + 2) - quad.vertex2(k));
    CHECK((sig.entries[k].kappa > 0) == (before * after > 0));
  }
}

TEST_CASE("convex diagnostics hold on random convex polygons") {
  Rng rng(30);
  for (int iter = 0; iter < 200; ++iter) {
    const Polygon poly = random_convex_polygon(rng, 4 + iter % 8);
    const ConvexityReport report = convexity_check(poly);
    REQUIRE(report.is_convex);
    if (report.is_parallelogram) continue;
    if (poly.size() == 3) continue;
    CHECK(report.kappa_bar_above_minus_one);
    CHECK(report.nonpositive_kappa_bar.size() <= 2);
    CHECK(report.nonpositive_kappa_bar_adjacent);
  }
}

TEST_CASE("parallelogram detection") {
  CHECK(convexity_check(Polygon::closed2({{0, 0}, {3, 1}, {4, 4}, {1, 3}}))
            .is_parallelogram);
  CHECK_FALSE(convexity_check(Polygon::closed2({{0, 0}, {3, 0}, {4, 4}, {0, 3}}))
                  .is_parallelogram);
}

TEST_CASE("convexity preconditions") {
  Rng rng(31);
  CHECK_THROWS_AS(convexity_check(random_tame_polygon(rng, 2, 8, false)), Error);
  CHECK_THROWS_AS(convexity_check(random_tame_polygon(rng, 3, 8)), Error);
}

TEST_CASE("segment intersection predicate") {
  const double tol = 1e-12;
  // Proper crossing.
  CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}, tol));
  // Disjoint.
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}, tol));
  // Touching at an endpoint counts.
  CHECK(segments_intersect({0, 0}, {1, 1}, {1, 1}, {2, 0}, tol));
  // Collinear overlap counts.
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}, tol));
  // Collinear but separated does not.
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}, tol));
}

TEST_CASE("polygon with crossing edges is flagged") {
  // Figure-eight ordering of a square's corners.
  const Polygon cross = Polygon::closed2({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  CHECK_FALSE(convexity_check(cross).is_simple);
}
