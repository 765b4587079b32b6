#include <doctest.h>

#include <sstream>

#include "test_support.hpp"

using namespace centroflow;
using namespace centroflow::testing;

TEST_CASE("polygon JSON roundtrip is bit-exact") {
  const Polygon poly = Polygon::closed3({{1.0 / 3.0, -2.0e-15, 7.125},
                                         {1e300, 2.2250738585072014e-308, 0.1},
                                         {-0.3333333333333333, 4.0, -1e-7},
                                         {0.1 + 0.2, 5.5, 9.0}});
  const PolygonDocument doc{poly, "awkward doubles"};
  const PolygonDocument back = parse_polygon_json(emit_polygon_json(doc));
  CHECK(back.label == "awkward doubles");
  CHECK(back.polygon.dimension() == 3);
  CHECK(back.polygon.closed());
  REQUIRE(back.polygon.size() == poly.size());
  for (int i = 0; i < poly.size(); ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(back.polygon.vertex(i)[j] == poly.vertex(i)[j]);
}

TEST_CASE("document validation") {
  CHECK_THROWS_AS(parse_polygon_json("not json"), Error);
  CHECK_THROWS_AS(parse_polygon_json("{}"), Error);
  // Arity mismatch.
  CHECK_THROWS_AS(parse_polygon_json(
                      R"({"dimension":3,"closed":true,"vertices":[[1,2],[3,4],[5,6]]})"),
                  Error);
  // NaN / Inf rejected (JSON has no literal, but null sneaks through parsers).
  CHECK_THROWS_AS(parse_polygon_json(
                      R"({"dimension":2,"closed":true,"vertices":[[1,2],[3,null],[5,6]]})"),
                  Error);
  // Too few vertices.
  CHECK_THROWS_AS(parse_polygon_json(
                      R"({"dimension":2,"closed":true,"vertices":[[1,2],[3,4]]})"),
                  Error);
  CHECK_THROWS_AS(parse_polygon_json(
                      R"({"dimension":4,"closed":true,"vertices":[[1,2,3,4],[5,6,7,8],[9,1,2,3]]})"),
                  Error);
  // Open polygons need four vertices.
  CHECK_THROWS_AS(parse_polygon_json(
                      R"({"dimension":2,"closed":false,"vertices":[[0,0],[1,0],[0,1]]})"),
                  Error);
}

TEST_CASE("2D documents parse to 2D polygons") {
  const PolygonDocument doc = parse_polygon_json(
      R"({"dimension":2,"closed":true,"vertices":[[0,0],[1,0],[0,1]]})");
  CHECK(doc.polygon.dimension() == 2);
  CHECK(doc.polygon.vertex(1).z() == 0.0);
  const Signature sig = compute_signature(doc.polygon);
  CHECK(sig.entries[0].kappa == doctest::Approx(1.0));
}

TEST_CASE("signature CSV layout") {
  const Polygon tri = Polygon::closed2({{0, 0}, {1, 0}, {0, 1}});
  std::ostringstream out;
  write_signature_csv(out, compute_signature(tri));
  const std::string text = out.str();
  CHECK(text.rfind("vertex,kappa,kappa_bar,tau\n", 0) == 0);
  CHECK(text.find("0,1,-1,0\n") != std::string::npos);

  // Full precision roundtrips through the printed representation.
  Rng rng(80);
  const Polygon poly = random_tame_polygon(rng, 3, 5);
  std::ostringstream full;
  write_signature_csv(full, compute_signature(poly));
  std::istringstream in(full.str());
  std::string header;
  std::getline(in, header);
  int index;
  char comma;
  double kappa, kappa_bar, tau;
  const Signature sig = compute_signature(poly);
  for (int i = 0; i < sig.size(); ++i) {
    in >> index >> comma >> kappa >> comma >> kappa_bar >> comma >> tau;
    CHECK(index == i);
    CHECK(kappa == sig.entries[i].kappa);
    CHECK(kappa_bar == sig.entries[i].kappa_bar);
    CHECK(tau == sig.entries[i].tau);
  }
}

TEST_CASE("display table uses four decimals") {
  const Polygon hept = generate_regular(7);
  const std::string table = format_signature_table(compute_signature(hept));
  CHECK(table.find("1.2470") != std::string::npos);
  CHECK(table.find("vertex") != std::string::npos);
}

TEST_CASE("svg snapshots") {
  const std::string flat = render_polygon_svg(generate_regular(5));
  CHECK(flat.find("<svg") != std::string::npos);
  CHECK(flat.find("<polyline") != std::string::npos);

  Rng rng(81);
  const std::string spatial = render_polygon_svg(random_tame_polygon(rng, 3, 6));
  CHECK(spatial.find("projection: dropped axis") != std::string::npos);
}
