#include "bernstein_c.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bernstein/audit.hpp"
#include "bernstein/bezier.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/interpolation.hpp"
#include "bernstein/operator.hpp"
#include "bernstein/special_numbers.hpp"
#include "bernstein/unified.hpp"

struct bn_index {
  bernstein::UnifiedIndex value;
};

struct bn_audit_report {
  bernstein::AuditReport value;
};

struct bn_polygon {
  bernstein::ControlPolygon value;
};

namespace {

using namespace bernstein;

thread_local std::string g_last_error;

bn_status fail(bn_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
bn_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BN_OK;
  } catch (const DivergenceError& e) {
    return fail(BN_ERR_DIVERGENT, e.what());
  } catch (const TailBoundError& e) {
    return fail(BN_ERR_TAIL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BN_ERR_INPUT, e.what());
  } catch (const std::domain_error& e) {
    return fail(BN_ERR_INPUT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(BN_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(BN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BN_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
void require(const T* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string("null ") + what);
}

Rational parse_x(const char* x) {
  require(x, "rational argument");
  return Rational::parse(x);
}

std::string rational_array_json(const std::vector<Rational>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr.dump();
}

void write_complex(const ComplexValue& v, double* re, double* im) {
  require(re, "output");
  require(im, "output");
  *re = v.real();
  *im = v.imag();
}

void write_point(const Point& p, double* out) {
  require(out, "output");
  out[0] = p.x;
  out[1] = p.y;
  out[2] = p.z;
}

// Named sample functions for the operator surface.
struct NamedFunction {
  std::optional<ExactFunction> exact;
  std::optional<RealFunction> real;
};

NamedFunction lookup_function(const std::string& name) {
  auto exact = [&](std::function<Rational(const Rational&)> f) {
    return NamedFunction{ExactFunction{std::move(f), name}, std::nullopt};
  };
  auto real = [&](std::function<double(double)> f) {
    return NamedFunction{std::nullopt, RealFunction{[f](const Rational& x) { return f(x.to_double()); }, name}};
  };
  if (name == "1") return exact([](const Rational&) { return Rational(1); });
  if (name == "x") return exact([](const Rational& x) { return x; });
  if (name == "x^2" || name == "x2") return exact([](const Rational& x) { return x * x; });
  if (name == "x^3" || name == "x3") return exact([](const Rational& x) { return x * x * x; });
  if (name.rfind("const:", 0) == 0) {
    const Rational c = Rational::parse(name.substr(6));
    return exact([c](const Rational&) { return c; });
  }
  if (name == "sin") return real([](double x) { return std::sin(std::numbers::pi * x); });
  if (name == "exp") return real([](double x) { return std::exp(x); });
  if (name == "sqrt") return real([](double x) { return std::sqrt(x); });
  if (name == "abs") return real([](double x) { return std::fabs(x - 0.5); });
  throw std::invalid_argument("unknown function '" + name + "'");
}

template <typename Scalar>
std::string table_output(const SampledFunction<Scalar>& f, const std::vector<long>& ns,
                         const std::vector<Rational>& grid, bn_format format) {
  const auto rows = convergence_table(f, ns, grid);
  if (format == BN_FORMAT_CSV) return convergence_csv(rows);
  if (format != BN_FORMAT_JSON) throw std::invalid_argument("operator table supports json or csv");
  nlohmann::ordered_json doc;
  doc["function"] = f.label;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json item;
    item["n"] = row.n;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      item["sup_error"] = row.sup_error.str();
    } else {
      item["sup_error"] = row.sup_error;
    }
    doc["rows"].push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace

extern "C" {

const char* bn_version(void) { return "1.0.0"; }

const char* bn_last_error(void) { return g_last_error.c_str(); }

void bn_string_free(char* s) { std::free(s); }

bn_status bn_rational_normalize(const char* text, char** out) {
  return guard([&] {
    require(out, "output");
    *out = dup(parse_x(text).str());
  });
}

bn_status bn_rational_to_double(const char* text, double* out) {
  return guard([&] {
    require(out, "output");
    *out = parse_x(text).to_double();
  });
}

bn_status bn_index_create(long b, long s, long k, bn_index** out) {
  return guard([&] {
    require(out, "output");
    *out = new bn_index{k < 0 ? UnifiedIndex(b, s) : UnifiedIndex(b, s, k)};
  });
}

void bn_index_destroy(bn_index* idx) { delete idx; }

long bn_index_k(const bn_index* idx) { return idx ? idx->value.k() : -1; }

bn_status bn_index_weight(const bn_index* idx, char** out) {
  return guard([&] {
    require(idx, "index");
    require(out, "output");
    *out = dup(idx->value.weight().str());
  });
}

bn_status bn_eval_closed(long n, const bn_index* idx, const char* x, char** out) {
  return guard([&] {
    require(idx, "index");
    require(out, "output");
    *out = dup(eval_closed(n, idx->value, parse_x(x)).str());
  });
}

bn_status bn_eval_recurrence(long n, const bn_index* idx, const char* x, char** out) {
  return guard([&] {
    require(idx, "index");
    require(out, "output");
    *out = dup(eval_recurrence(n, idx->value, parse_x(x)).str());
  });
}

bn_status bn_series_expand(const bn_index* idx, const char* x, size_t order, char** out_json) {
  return guard([&] {
    require(idx, "index");
    require(out_json, "output");
    *out_json = dup(rational_array_json(series_expand(idx->value, parse_x(x), order)));
  });
}

bn_status bn_to_polynomial(long n, const bn_index* idx, char** out_json) {
  return guard([&] {
    require(idx, "index");
    require(out_json, "output");
    *out_json = dup(rational_array_json(to_polynomial(n, idx->value).coefficients()));
  });
}

bn_status bn_derivative(long n, const bn_index* idx, char** out_json) {
  return guard([&] {
    require(idx, "index");
    require(out_json, "output");
    *out_json = dup(rational_array_json(derivative(n, idx->value).coefficients()));
  });
}

bn_status bn_umbral_sum(long n, const bn_index* idx, const char* x, char** out) {
  return guard([&] {
    require(idx, "index");
    require(out, "output");
    *out = dup(umbral_sum(n, idx->value, parse_x(x)).str());
  });
}

bn_status bn_stirling2(long n, long v, char** out) {
  return guard([&] {
    require(out, "output");
    *out = dup(stirling2(n, v).str());
  });
}

bn_status bn_bernoulli_higher(long n, long v, const char* x, char** out) {
  return guard([&] {
    require(out, "output");
    *out = dup(bernoulli_higher(n, v, parse_x(x)).str());
  });
}

bn_status bn_connection_identity(long n, const bn_index* idx, const char* x, char** lhs, char** rhs) {
  return guard([&] {
    require(idx, "index");
    require(lhs, "output");
    require(rhs, "output");
    const auto sides = connection_identity(n, idx->value, parse_x(x));
    std::string l = sides.lhs.str(), r = sides.rhs.str();
    *lhs = dup(l);
    *rhs = dup(r);
  });
}

bn_status bn_audit_run(long n_max, bn_audit_report** out) {
  return guard([&] {
    require(out, "output");
    *out = new bn_audit_report{audit_identities(n_max)};
  });
}

void bn_audit_destroy(bn_audit_report* report) { delete report; }

size_t bn_audit_count(const bn_audit_report* report) { return report ? report->value.entries.size() : 0; }

bn_status bn_audit_entry(const bn_audit_report* report, size_t i, const char** identity, int* holds) {
  return guard([&] {
    require(report, "report");
    const auto& e = report->value.entries.at(i);
    if (identity) *identity = e.identity.c_str();
    if (holds) *holds = e.status == AuditStatus::Holds ? 1 : 0;
  });
}

bn_status bn_audit_to_json(const bn_audit_report* report, char** out) {
  return guard([&] {
    require(report, "report");
    require(out, "output");
    *out = dup(report->value.to_json());
  });
}

bn_status bn_interp_eval(double z_re, double z_im, const bn_index* idx, const char* x, double* out_re,
                         double* out_im) {
  return guard([&] {
    require(idx, "index");
    write_complex(interp_eval({z_re, z_im}, idx->value, parse_x(x)), out_re, out_im);
  });
}

bn_status bn_interp_negative_integer(long n, const bn_index* idx, const char* x, char** out) {
  return guard([&] {
    require(idx, "index");
    require(out, "output");
    *out = dup(interp_at_negative_integer(n, idx->value, parse_x(x)).str());
  });
}

bn_status bn_beta_form(double z_re, double z_im, const bn_index* idx, const char* x, double* out_re,
                       double* out_im) {
  return guard([&] {
    require(idx, "index");
    write_complex(beta_form({z_re, z_im}, idx->value, parse_x(x)), out_re, out_im);
  });
}

bn_status bn_mellin(double z_re, double z_im, const bn_index* idx, const char* x, size_t nodes, double truncation,
                    double* out_re, double* out_im) {
  return guard([&] {
    require(idx, "index");
    QuadratureConfig cfg;
    if (nodes != 0) cfg.nodes = nodes;
    cfg.truncation = truncation;
    write_complex(mellin_verify({z_re, z_im}, idx->value, parse_x(x), cfg), out_re, out_im);
  });
}

bn_status bn_contour(long n, const bn_index* idx, const char* x, double radius, size_t nodes, double* out_re,
                     double* out_im) {
  return guard([&] {
    require(idx, "index");
    write_complex(contour_coefficient(n, idx->value, parse_x(x), radius, nodes), out_re, out_im);
  });
}

bn_status bn_g_basis(long n, long j, const char* x, char** out) {
  return guard([&] {
    require(out, "output");
    *out = dup(g_basis(n, j, parse_x(x)).str());
  });
}

bn_status bn_basis_values(long n, const char* x, double* out, size_t capacity) {
  return guard([&] {
    require(out, "output");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (capacity < static_cast<size_t>(n) + 1) throw std::invalid_argument("basis output buffer too small");
    const Rational xv = parse_x(x);
    for (long j = 0; j <= n; ++j) out[j] = g_basis(n, j, xv).to_double();
  });
}

bn_status bn_partition_check(long n, const char* x, char** out) {
  return guard([&] {
    require(out, "output");
    *out = dup(partition_check(n, parse_x(x)).str());
  });
}

bn_status bn_operator_apply(const char* function, long n, const char* x, char** out) {
  return guard([&] {
    require(function, "function name");
    require(out, "output");
    const NamedFunction f = lookup_function(function);
    const Rational xv = parse_x(x);
    if (f.exact) {
      *out = dup(apply_operator(*f.exact, n, xv).str());
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", apply_operator(*f.real, n, xv));
      *out = dup(buf);
    }
  });
}

bn_status bn_operator_table(const char* function, const long* n_values, size_t n_count, const char* const* grid,
                            size_t grid_count, bn_format format, char** out) {
  return guard([&] {
    require(function, "function name");
    require(out, "output");
    if (n_count > 0) require(n_values, "n values");
    if (grid_count > 0) require(grid, "grid");
    const NamedFunction f = lookup_function(function);
    std::vector<long> ns(n_values, n_values + n_count);
    std::vector<Rational> xs;
    for (size_t i = 0; i < grid_count; ++i) xs.push_back(parse_x(grid[i]));
    *out = dup(f.exact ? table_output(*f.exact, ns, xs, format) : table_output(*f.real, ns, xs, format));
  });
}

bn_status bn_polygon_create(const double* coords, size_t point_count, int dimension, bn_polygon** out) {
  return guard([&] {
    require(out, "output");
    if (point_count > 0) require(coords, "coordinates");
    if (dimension != 2 && dimension != 3) throw std::invalid_argument("dimension must be 2 or 3");
    std::vector<Point> pts;
    for (size_t i = 0; i < point_count; ++i) {
      const double* c = coords + i * static_cast<size_t>(dimension);
      pts.push_back({c[0], c[1], dimension == 3 ? c[2] : 0.0});
    }
    *out = new bn_polygon{ControlPolygon(std::move(pts), dimension)};
  });
}

bn_status bn_polygon_parse(const char* text, bn_polygon** out) {
  return guard([&] {
    require(text, "polygon text");
    require(out, "output");
    *out = new bn_polygon{ControlPolygon::parse(text)};
  });
}

void bn_polygon_destroy(bn_polygon* polygon) { delete polygon; }

size_t bn_polygon_size(const bn_polygon* polygon) { return polygon ? polygon->value.points().size() : 0; }

int bn_polygon_dimension(const bn_polygon* polygon) { return polygon ? polygon->value.dimension() : 0; }

bn_status bn_curve_eval(const bn_polygon* polygon, double x, bn_curve_method method, double* out) {
  return guard([&] {
    require(polygon, "polygon");
    switch (method) {
      case BN_CURVE_BASIS: write_point(curve_eval(polygon->value, x), out); break;
      case BN_CURVE_GENERALIZED: write_point(generalized_curve_eval(polygon->value, x), out); break;
      case BN_CURVE_DE_CASTELJAU: write_point(de_casteljau(polygon->value, x), out); break;
      default: throw std::invalid_argument("unknown curve method");
    }
  });
}

bn_status bn_cubic_mass_demo(const bn_polygon* polygon, double x, double* masses, double* point) {
  return guard([&] {
    require(polygon, "polygon");
    require(masses, "output");
    const auto& p = polygon->value.points();
    if (p.size() != 4) throw std::invalid_argument("cubic demo needs exactly 4 control points");
    const MassPoint m = cubic_mass_demo(p[0], p[1], p[2], p[3], x);
    for (int i = 0; i < 4; ++i) masses[i] = m.masses[static_cast<size_t>(i)];
    write_point(m.point, point);
  });
}

bn_status bn_curve_export(const bn_polygon* polygon, size_t samples, bn_format format, char** out) {
  return guard([&] {
    require(polygon, "polygon");
    require(out, "output");
    const CurveSamples s = sample_curve(polygon->value, samples);
    if (format == BN_FORMAT_SVG)
      *out = dup(export_svg(s, polygon->value));
    else if (format == BN_FORMAT_JSON)
      *out = dup(export_json(s, polygon->value));
    else
      throw std::invalid_argument("curve export supports svg or json");
  });
}

}  // extern "C"
