#pragma once

// Bezier curves over the Bernstein blending functions.
//
// Three evaluation routes are provided: the basis form in floating point,
// the unified basis g_n evaluated exactly at the (dyadic) parameter, and
// de Casteljau's repeated linear interpolation.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace bernstein {

/// A point in 2 or 3 dimensions; planar points keep z = 0.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Point& operator+=(const Point& o) { x += o.x; y += o.y; z += o.z; return *this; }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator*(double s, const Point& p) { return {s * p.x, s * p.y, s * p.z}; }
  friend bool operator==(const Point&, const Point&) = default;
};

class ControlPolygon {
 public:
  /// Throws std::invalid_argument for fewer than 2 points, a dimension
  /// other than 2 or 3, or non-finite coordinates.
  ControlPolygon(std::vector<Point> points, int dimension = 2);

  /// Parses "x,y:x,y:..." (or x,y,z triples); dimension follows the first point.
  static ControlPolygon parse(const std::string& text);

  int dimension() const { return dimension_; }
  std::size_t degree() const { return points_.size() - 1; }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  ControlPolygon reversed() const;

 private:
  std::vector<Point> points_;
  int dimension_;
};

struct CurveSamples {
  std::vector<double> parameters;
  std::vector<Point> points;
};

/// sum_k P_k C(n,k) x^k (1-x)^(n-k). Throws std::invalid_argument for x outside [0,1].
Point curve_eval(const ControlPolygon& polygon, double x);

/// sum_k P_k g_n(k; x) with the basis evaluated exactly.
Point generalized_curve_eval(const ControlPolygon& polygon, double x);

Point de_casteljau(const ControlPolygon& polygon, double x);

struct MassPoint {
  std::array<double, 4> masses;
  Point point;
};

/// Cubic blending masses (1-x)^3, 3x(1-x)^2, 3x^2(1-x), x^3 and their center of mass.
MassPoint cubic_mass_demo(const Point& p0, const Point& p1, const Point& p2, const Point& p3, double x);

/// `count` >= 2 uniform parameters i/(count-1), evaluated by de Casteljau.
CurveSamples sample_curve(const ControlPolygon& polygon, std::size_t count);

/// Standalone SVG: the sampled polyline plus a circle per control point.
/// Coordinates use 6 decimals; output is a pure function of the inputs.
std::string export_svg(const CurveSamples& samples, const ControlPolygon& polygon);

/// {"control_points": [...], "samples": [{"t": ..., "p": [...]}, ...]}, 15 significant digits.
std::string export_json(const CurveSamples& samples, const ControlPolygon& polygon);

}  // namespace bernstein
