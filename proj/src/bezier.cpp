#include "bernstein/bezier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "bernstein/operator.hpp"
#include "bernstein/rational.hpp"

namespace bernstein {
namespace {

void check_parameter(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("curve parameter must lie in [0,1]");
}

double parse_coordinate(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw std::invalid_argument("malformed coordinate '" + token + "'");
  return v;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}

std::string sig15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v + 0.0);
  return buf;
}

void append_point_json(std::string& out, const Point& p, int dim) {
  out += '[' + sig15(p.x) + ',' + sig15(p.y);
  if (dim == 3) out += ',' + sig15(p.z);
  out += ']';
}

}  // namespace

ControlPolygon::ControlPolygon(std::vector<Point> points, int dimension)
    : points_(std::move(points)), dimension_(dimension) {
  if (points_.size() < 2) throw std::invalid_argument("control polygon needs at least 2 points");
  if (dimension_ != 2 && dimension_ != 3) throw std::invalid_argument("control polygon dimension must be 2 or 3");
  for (auto& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
      throw std::invalid_argument("control point coordinates must be finite");
    if (dimension_ == 2) p.z = 0.0;
  }
}

ControlPolygon ControlPolygon::parse(const std::string& text) {
  std::vector<Point> points;
  int dimension = 0;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ':')) {
    std::vector<double> coords;
    std::stringstream fields(group);
    std::string field;
    while (std::getline(fields, field, ',')) coords.push_back(parse_coordinate(field));
    if (coords.size() != 2 && coords.size() != 3)
      throw std::invalid_argument("control point '" + group + "' needs 2 or 3 coordinates");
    if (dimension == 0) dimension = static_cast<int>(coords.size());
    if (static_cast<int>(coords.size()) != dimension)
      throw std::invalid_argument("control points mix 2D and 3D coordinates");
    points.push_back({coords[0], coords[1], coords.size() == 3 ? coords[2] : 0.0});
  }
  return ControlPolygon(std::move(points), dimension == 0 ? 2 : dimension);
}

ControlPolygon ControlPolygon::reversed() const {
  return ControlPolygon(std::vector<Point>(points_.rbegin(), points_.rend()), dimension_);
}

Point curve_eval(const ControlPolygon& polygon, double x) {
  check_parameter(x);
  const std::size_t n = polygon.degree();
  Point acc;
  double binom = 1.0;  // C(n, k), updated multiplicatively
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = binom * std::pow(x, static_cast<double>(k)) * std::pow(1.0 - x, static_cast<double>(n - k));
    acc += w * polygon[k];
    binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  return acc;
}

Point generalized_curve_eval(const ControlPolygon& polygon, double x) {
  check_parameter(x);
  const long n = static_cast<long>(polygon.degree());
  const Rational exact_x = Rational::from_double(x);
  Point acc;
  for (long k = 0; k <= n; ++k) acc += g_basis(n, k, exact_x).to_double() * polygon[static_cast<std::size_t>(k)];
  return acc;
}

Point de_casteljau(const ControlPolygon& polygon, double x) {
  check_parameter(x);
  std::vector<Point> work = polygon.points();
  for (std::size_t level = work.size() - 1; level > 0; --level)
    for (std::size_t i = 0; i < level; ++i) work[i] = (1.0 - x) * work[i] + x * work[i + 1];
  return work.front();
}

MassPoint cubic_mass_demo(const Point& p0, const Point& p1, const Point& p2, const Point& p3, double x) {
  check_parameter(x);
  const double u = 1.0 - x;
  MassPoint out{{u * u * u, 3.0 * x * u * u, 3.0 * x * x * u, x * x * x}, {}};
  out.point = out.masses[0] * p0 + out.masses[1] * p1 + out.masses[2] * p2 + out.masses[3] * p3;
  return out;
}

CurveSamples sample_curve(const ControlPolygon& polygon, std::size_t count) {
  if (count < 2) throw std::invalid_argument("sample count must be at least 2");
  CurveSamples out;
  out.parameters.reserve(count);
  out.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out.parameters.push_back(t);
    out.points.push_back(de_casteljau(polygon, t));
  }
  return out;
}

std::string export_svg(const CurveSamples& samples, const ControlPolygon& polygon) {
  if (samples.points.empty()) throw std::invalid_argument("no samples to export");

  // SVG y grows downward; plot (x, -y).
  double min_x = polygon[0].x, max_x = min_x, min_y = -polygon[0].y, max_y = min_y;
  auto extend = [&](const Point& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, -p.y);
    max_y = std::max(max_y, -p.y);
  };
  for (const auto& p : polygon.points()) extend(p);
  for (const auto& p : samples.points) extend(p);
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double margin = 0.05 * extent;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fixed6(min_x - margin) + ' ' +
         fixed6(min_y - margin) + ' ' + fixed6(max_x - min_x + 2 * margin) + ' ' +
         fixed6(max_y - min_y + 2 * margin) + "\" width=\"512\" height=\"512\">\n";

  const std::string stroke = fixed6(0.004 * extent);
  out += "  <polyline class=\"control-polygon\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"" +
         fixed6(0.02 * extent) + "\" stroke-width=\"" + stroke + "\" points=\"";
  for (std::size_t i = 0; i < polygon.points().size(); ++i) {
    if (i) out += ' ';
    out += fixed6(polygon[i].x) + ',' + fixed6(-polygon[i].y);
  }
  out += "\"/>\n";

  out += "  <polyline class=\"curve\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" + fixed6(0.008 * extent) +
         "\" points=\"";
  for (std::size_t i = 0; i < samples.points.size(); ++i) {
    if (i) out += ' ';
    out += fixed6(samples.points[i].x) + ',' + fixed6(-samples.points[i].y);
  }
  out += "\"/>\n";

  const std::string radius = fixed6(0.015 * extent);
  for (const auto& p : polygon.points())
    out += "  <circle class=\"control-point\" cx=\"" + fixed6(p.x) + "\" cy=\"" + fixed6(-p.y) + "\" r=\"" + radius +
           "\" fill=\"#c0392b\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string export_json(const CurveSamples& samples, const ControlPolygon& polygon) {
  const int dim = polygon.dimension();
  std::string out = "{\"control_points\":[";
  for (std::size_t i = 0; i < polygon.points().size(); ++i) {
    if (i) out += ',';
    append_point_json(out, polygon[i], dim);
  }
  out += "],\"samples\":[";
  for (std::size_t i = 0; i < samples.points.size(); ++i) {
    if (i) out += ',';
    out += "{\"t\":" + sig15(samples.parameters[i]) + ",\"p\":";
    append_point_json(out, samples.points[i], dim);
    out += '}';
  }
  out += "]}";
  return out;
}

}  // namespace bernstein
