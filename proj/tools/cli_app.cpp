#include "cli_app.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernstein_c.h"
#include "service.hpp"

namespace bernstein::cli {
namespace {

using nlohmann::ordered_json;

constexpr double kMellinTolerance = 1e-6;
constexpr double kContourTolerance = 1e-8;

// A failure carrying its exit code.
struct CommandError {
  int code;
  std::string message;
};

int exit_code_for(bn_status st) {
  switch (st) {
    case BN_OK: return kExitOk;
    case BN_ERR_INPUT:
    case BN_ERR_DIVERGENT: return kExitInput;
    default: return kExitNumeric;
  }
}

void check(bn_status st, const std::string& context = {}) {
  if (st == BN_OK) return;
  std::string msg = bn_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw CommandError{exit_code_for(st), msg};
}

struct CString {
  char* p = nullptr;
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { bn_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Index {
  bn_index* p = nullptr;
  Index(long b, long s, std::optional<long> k) { check(bn_index_create(b, s, k.value_or(-1), &p), "--b/--s/--k"); }
  Index(const Index&) = delete;
  Index& operator=(const Index&) = delete;
  ~Index() { bn_index_destroy(p); }
};

// Validates a rational flag up front so errors name the flag.
std::string rational_flag(const std::string& flag, const std::string& text) {
  CString normalized;
  check(bn_rational_normalize(text.c_str(), &normalized.p), flag);
  return normalized.str();
}

std::vector<long> parse_long_list(const std::string& flag, const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CommandError{kExitInput, flag + ": malformed integer '" + item + "'"};
    }
  }
  if (out.empty()) throw CommandError{kExitInput, flag + ": expected a comma-separated list"};
  return out;
}

std::vector<std::string> parse_rational_list(const std::string& flag, const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_flag(flag, item));
  if (out.empty()) throw CommandError{kExitInput, flag + ": expected a comma-separated list"};
  return out;
}

ordered_json complex_json(double re, double im) { return {{"re", re}, {"im", im}}; }

struct FamilyFlags {
  long b = 1;
  long s = 1;
  std::optional<long> k;
  std::string x;

  void attach(CLI::App* app, bool need_x = true) {
    app->add_option("--b", b, "family parameter b >= 1")->required();
    app->add_option("--s", s, "family parameter s >= 1")->required();
    app->add_option("--k", k, "basis index (defaults to b*s)");
    auto* opt = app->add_option("--x", x, "rational sample point p/q");
    if (need_x) opt->required();
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unified Bernstein-type polynomials: exact evaluation, identity audit, interpolation, "
               "approximation operator and Bezier curves"};
  app.require_subcommand(1);
  std::function<void()> action;

  // eval
  FamilyFlags eval_flags;
  long eval_n = 0;
  std::string eval_method = "closed";
  auto* eval = app.add_subcommand("eval", "exact value of S_n(k, x)");
  eval->add_option("--n", eval_n, "degree n >= 0")->required();
  eval_flags.attach(eval);
  eval->add_option("--method", eval_method, "closed | recurrence | interp")
      ->check(CLI::IsMember({"closed", "recurrence", "interp"}));
  eval->callback([&] {
    action = [&] {
      const std::string x = rational_flag("--x", eval_flags.x);
      Index idx(eval_flags.b, eval_flags.s, eval_flags.k);
      CString v;
      if (eval_method == "closed")
        check(bn_eval_closed(eval_n, idx.p, x.c_str(), &v.p));
      else if (eval_method == "recurrence")
        check(bn_eval_recurrence(eval_n, idx.p, x.c_str(), &v.p));
      else
        check(bn_interp_negative_integer(eval_n, idx.p, x.c_str(), &v.p));
      out << ordered_json{{"value", v.str()}}.dump() << '\n';
    };
  });

  // series
  FamilyFlags series_flags;
  std::size_t series_order = 10;
  auto* series = app.add_subcommand("series", "S_0..S_order from the generating function");
  series_flags.attach(series);
  series->add_option("--order", series_order, "truncation order")->required();
  series->callback([&] {
    action = [&] {
      const std::string x = rational_flag("--x", series_flags.x);
      Index idx(series_flags.b, series_flags.s, series_flags.k);
      CString v;
      check(bn_series_expand(idx.p, x.c_str(), series_order, &v.p));
      ordered_json doc;
      doc["coefficients"] = ordered_json::parse(v.str());
      out << doc.dump() << '\n';
    };
  });

  // audit
  long audit_nmax = 10;
  auto* audit = app.add_subcommand("audit", "exact check of every identity of the family");
  audit->add_option("--nmax", audit_nmax, "largest n checked (>= 1)");
  audit->callback([&] {
    action = [&] {
      bn_audit_report* report = nullptr;
      check(bn_audit_run(audit_nmax, &report), "--nmax");
      CString v;
      const bn_status st = bn_audit_to_json(report, &v.p);
      bn_audit_destroy(report);
      check(st);
      out << v.str() << '\n';
    };
  });

  // interp
  FamilyFlags interp_flags;
  double interp_re = 0.0, interp_im = 0.0;
  std::optional<long> interp_n;
  std::string interp_form = "rising";
  auto* interp = app.add_subcommand("interp", "interpolation function at complex z (or exactly at z = -n)");
  interp_flags.attach(interp);
  interp->add_option("--re", interp_re, "Re z");
  interp->add_option("--im", interp_im, "Im z");
  interp->add_option("--n", interp_n, "evaluate exactly at z = -n");
  interp->add_option("--form", interp_form, "rising | beta")->check(CLI::IsMember({"rising", "beta"}));
  interp->callback([&] {
    action = [&] {
      const std::string x = rational_flag("--x", interp_flags.x);
      Index idx(interp_flags.b, interp_flags.s, interp_flags.k);
      if (interp_n) {
        CString v;
        check(bn_interp_negative_integer(*interp_n, idx.p, x.c_str(), &v.p));
        out << ordered_json{{"value", v.str()}}.dump() << '\n';
        return;
      }
      double re = 0, im = 0;
      if (interp_form == "beta")
        check(bn_beta_form(interp_re, interp_im, idx.p, x.c_str(), &re, &im));
      else
        check(bn_interp_eval(interp_re, interp_im, idx.p, x.c_str(), &re, &im));
      out << complex_json(re, im).dump() << '\n';
    };
  });

  // mellin
  FamilyFlags mellin_flags;
  double mellin_re = 1.0, mellin_im = 0.0, mellin_trunc = 0.0;
  std::size_t mellin_nodes = 64;
  auto* mellin = app.add_subcommand("mellin", "Mellin-integral evaluation checked against the closed form");
  mellin_flags.attach(mellin);
  mellin->add_option("--re", mellin_re, "Re z > 0");
  mellin->add_option("--im", mellin_im, "Im z");
  mellin->add_option("--nodes", mellin_nodes, "Gauss-Legendre points per panel (>= 8)");
  mellin->add_option("--trunc", mellin_trunc, "fixed upper limit in t (0 = automatic)");
  mellin->callback([&] {
    action = [&] {
      const std::string x = rational_flag("--x", mellin_flags.x);
      Index idx(mellin_flags.b, mellin_flags.s, mellin_flags.k);
      double re = 0, im = 0, ref_re = 0, ref_im = 0;
      check(bn_interp_eval(mellin_re, mellin_im, idx.p, x.c_str(), &ref_re, &ref_im));
      check(bn_mellin(mellin_re, mellin_im, idx.p, x.c_str(), mellin_nodes, mellin_trunc, &re, &im));
      const double scale = std::hypot(ref_re, ref_im);
      const double diff = std::hypot(re - ref_re, im - ref_im);
      const double rel = scale > 0 ? diff / scale : diff;
      ordered_json doc = complex_json(re, im);
      doc["reference"] = complex_json(ref_re, ref_im);
      doc["rel_error"] = rel;
      out << doc.dump() << '\n';
      if (rel > kMellinTolerance)
        throw CommandError{kExitNumeric, "quadrature disagrees with closed form beyond 1e-6 relative"};
    };
  });

  // contour
  FamilyFlags contour_flags;
  long contour_n = 0;
  std::optional<double> contour_radius;
  std::optional<std::size_t> contour_nodes;
  auto* contour = app.add_subcommand("contour", "Cauchy-integral coefficient extraction");
  contour->add_option("--n", contour_n, "degree n >= 0")->required();
  contour_flags.attach(contour);
  contour->add_option("--radius", contour_radius, "circle radius (default max(1, n))");
  contour->add_option("--nodes", contour_nodes, "trapezoidal points (default max(64, 4(n+1)))");
  contour->callback([&] {
    action = [&] {
      const std::string x = rational_flag("--x", contour_flags.x);
      Index idx(contour_flags.b, contour_flags.s, contour_flags.k);
      const double radius = contour_radius.value_or(std::max(1.0, static_cast<double>(contour_n)));
      const std::size_t nodes =
          contour_nodes.value_or(std::max<std::size_t>(64, 4 * static_cast<std::size_t>(std::max(contour_n, 0L) + 1)));
      double re = 0, im = 0, exact_d = 0;
      check(bn_contour(contour_n, idx.p, x.c_str(), radius, nodes, &re, &im));
      CString exact;
      check(bn_eval_closed(contour_n, idx.p, x.c_str(), &exact.p));
      check(bn_rational_to_double(exact.p, &exact_d));
      ordered_json doc = complex_json(re, im);
      doc["exact"] = exact.str();
      doc["abs_error"] = std::hypot(re - exact_d, im);
      out << doc.dump() << '\n';
      if (std::abs(re - exact_d) > kContourTolerance)
        throw CommandError{kExitNumeric, "contour coefficient disagrees with closed form beyond 1e-8"};
    };
  });

  // operator
  std::string op_function = "x^2", op_ns_text, op_grid_text, op_format = "json";
  auto* op = app.add_subcommand("operator", "convergence table of the approximation operator");
  op->add_option("--f", op_function, "1 | x | x^2 | x^3 | const:<r> | sin | exp | sqrt | abs");
  op->add_option("--n", op_ns_text, "comma-separated degrees, e.g. 10,20,40")->required();
  op->add_option("--grid", op_grid_text, "comma-separated rationals in [0,1] (default i/100)");
  op->add_option("--format", op_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  op->callback([&] {
    action = [&] {
      const std::vector<long> ns = parse_long_list("--n", op_ns_text);
      std::vector<std::string> grid;
      if (op_grid_text.empty())
        for (int i = 0; i <= 100; ++i) grid.push_back(std::to_string(i) + "/100");
      else
        grid = parse_rational_list("--grid", op_grid_text);
      std::vector<const char*> grid_ptrs;
      for (const auto& g : grid) grid_ptrs.push_back(g.c_str());
      CString v;
      check(bn_operator_table(op_function.c_str(), ns.data(), ns.size(), grid_ptrs.data(), grid_ptrs.size(),
                              op_format == "csv" ? BN_FORMAT_CSV : BN_FORMAT_JSON, &v.p));
      out << v.str();
      if (op_format == "json") out << '\n';
    };
  });

  // bezier
  std::string bz_points, bz_format = "json";
  std::size_t bz_samples = 33;
  auto* bezier = app.add_subcommand("bezier", "sample a Bezier curve and export SVG or JSON");
  bezier->add_option("--points", bz_points, "control points x,y:x,y:... (or x,y,z triples)")->required();
  bezier->add_option("--samples", bz_samples, "number of samples (>= 2)");
  bezier->add_option("--format", bz_format, "json | svg")->check(CLI::IsMember({"json", "svg"}));
  bezier->callback([&] {
    action = [&] {
      bn_polygon* poly = nullptr;
      check(bn_polygon_parse(bz_points.c_str(), &poly), "--points");
      CString v;
      const bn_status st = bn_curve_export(poly, bz_samples, bz_format == "svg" ? BN_FORMAT_SVG : BN_FORMAT_JSON, &v.p);
      bn_polygon_destroy(poly);
      check(st, "--samples");
      out << v.str();
      if (bz_format == "json") out << '\n';
    };
  });

  // serve
  std::optional<int> serve_port;
  std::string serve_host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "JSON service on localhost");
  serve->add_option("--port", serve_port, "port (default $BERNSTEIN_PORT or 8787)");
  serve->add_option("--host", serve_host, "bind address");
  serve->callback([&] {
    action = [&] {
      int port = 8787;
      if (const char* env = std::getenv("BERNSTEIN_PORT")) {
        try {
          port = std::stoi(env);
        } catch (const std::exception&) {
          throw CommandError{kExitInput, "BERNSTEIN_PORT: not a port number"};
        }
      }
      if (serve_port) port = *serve_port;
      if (port <= 0 || port > 65535) throw CommandError{kExitInput, "--port: out of range"};
      err << "serving on http://" << serve_host << ':' << port << '\n';
      if (service::serve(serve_host, port) != 0)
        throw CommandError{kExitInput, "--port: cannot bind " + serve_host + ":" + std::to_string(port)};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const CommandError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  }
}

}  // namespace bernstein::cli
