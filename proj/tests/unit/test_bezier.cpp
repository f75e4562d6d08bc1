#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bernstein/bezier.hpp"

using namespace bernstein;

namespace {

ControlPolygon demo_cubic() { return ControlPolygon::parse("0,0:0,1:1,1:1,0"); }

ControlPolygon random_polygon(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> count(2, 11);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<Point> pts(static_cast<std::size_t>(count(rng)));
  for (auto& p : pts) p = {coord(rng), coord(rng), dim == 3 ? coord(rng) : 0.0};
  return ControlPolygon(pts, dim);
}

double max_diff(const Point& a, const Point& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// Monotone-chain hull, then a half-plane test per edge.
bool in_convex_hull(std::vector<Point> pts, const Point& p, double eps) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) return true;  // degenerate hull, skip
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (cross(a, b, p) < -eps * std::max(1.0, len)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cubic demo") {
  const ControlPolygon poly = demo_cubic();
  const Point mid = de_casteljau(poly, 0.5);
  CHECK(mid.x == 0.5);
  CHECK(mid.y == 0.75);
  const MassPoint m = cubic_mass_demo(poly[0], poly[1], poly[2], poly[3], 0.5);
  CHECK(m.masses[0] == 0.125);
  CHECK(m.masses[1] == 0.375);
  CHECK(m.masses[2] == 0.375);
  CHECK(m.masses[3] == 0.125);
  CHECK(m.point == mid);
  CHECK(curve_eval(poly, 0.0) == poly[0]);
  CHECK(curve_eval(poly, 1.0) == poly[3]);
}

TEST_CASE("masses sum to one") {
  const ControlPolygon poly = demo_cubic();
  for (int i = 0; i <= 64; ++i) {
    const double x = i / 64.0;
    const MassPoint m = cubic_mass_demo(poly[0], poly[1], poly[2], poly[3], x);
    CHECK(std::abs(m.masses[0] + m.masses[1] + m.masses[2] + m.masses[3] - 1.0) < 1e-15);
  }
}

TEST_CASE("three evaluation routes agree") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const ControlPolygon poly = random_polygon(rng, trial % 4 == 0 ? 3 : 2);
    for (int i = 0; i <= 32; ++i) {
      const double x = i / 32.0;
      const Point a = curve_eval(poly, x), b = generalized_curve_eval(poly, x), c = de_casteljau(poly, x);
      CHECK(max_diff(a, c) <= 1e-12);
      CHECK(max_diff(b, c) <= 1e-12);
    }
  }
}

TEST_CASE("convex hull, affine invariance and symmetry") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ControlPolygon poly = random_polygon(rng, 2);
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng), e = u(rng), f = u(rng);
    auto map = [&](const Point& p) { return Point{a * p.x + b * p.y + e, c * p.x + d * p.y + f, 0.0}; };
    std::vector<Point> mapped;
    for (const auto& p : poly.points()) mapped.push_back(map(p));
    const ControlPolygon image(mapped, 2);
    const ControlPolygon rev = poly.reversed();
    for (int i = 0; i <= 32; ++i) {
      const double x = i / 32.0;
      const Point p = de_casteljau(poly, x);
      CHECK(in_convex_hull(poly.points(), p, 1e-9));
      CHECK(max_diff(map(p), de_casteljau(image, x)) <= 1e-9);
      CHECK(max_diff(p, de_casteljau(rev, 1.0 - x)) <= 1e-12);
    }
  }
}

TEST_CASE("coincident points give a single point") {
  const ControlPolygon poly = ControlPolygon::parse("2,3:2,3:2,3");
  for (double x : {0.0, 0.3, 1.0}) CHECK(max_diff(curve_eval(poly, x), Point{2, 3, 0}) < 1e-15);
}

TEST_CASE("SVG export") {
  const ControlPolygon poly = demo_cubic();
  const std::string svg = export_svg(sample_curve(poly, 33), poly);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count("<circle") == 4);
  CHECK(count("<polyline") == 2);
  const auto start = svg.find("class=\"curve\"");
  REQUIRE(start != std::string::npos);
  const auto open = svg.find("points=\"", start) + 8;
  const std::string pts = svg.substr(open, svg.find('"', open) - open);
  CHECK(std::count(pts.begin(), pts.end(), ' ') + 1 == 33);
  CHECK(pts.find("0.500000,-0.750000") != std::string::npos);
  CHECK(svg.find("-0.000000") == std::string::npos);
  CHECK(svg == export_svg(sample_curve(poly, 33), poly));
}

TEST_CASE("JSON export") {
  const ControlPolygon poly = demo_cubic();
  const std::string json = export_json(sample_curve(poly, 3), poly);
  CHECK(json ==
        "{\"control_points\":[[0,0],[0,1],[1,1],[1,0]],\"samples\":[{\"t\":0,\"p\":[0,0]},"
        "{\"t\":0.5,\"p\":[0.5,0.75]},{\"t\":1,\"p\":[1,0]}]}");
  const ControlPolygon space = ControlPolygon::parse("0,0,0:1,1,1");
  CHECK(export_json(sample_curve(space, 2), space).find("[1,1,1]") != std::string::npos);
}

TEST_CASE("bezier errors") {
  CHECK_THROWS_AS(ControlPolygon::parse("0,0"), std::invalid_argument);
  CHECK_THROWS_AS(ControlPolygon::parse("0,0:1"), std::invalid_argument);
  CHECK_THROWS_AS(ControlPolygon::parse("0,0:1,1,1"), std::invalid_argument);
  CHECK_THROWS_AS(ControlPolygon::parse("0,0:a,1"), std::invalid_argument);
  CHECK_THROWS_AS(ControlPolygon::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ControlPolygon({{0, 0, 0}, {NAN, 0, 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ControlPolygon({{0, 0, 0}, {1, 0, 0}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(curve_eval(demo_cubic(), 1.5), std::invalid_argument);
  CHECK_THROWS_AS(de_casteljau(demo_cubic(), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(sample_curve(demo_cubic(), 1), std::invalid_argument);
}
