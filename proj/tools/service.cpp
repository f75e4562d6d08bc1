#include "service.hpp"

#include <charconv>
#include <memory>
#include <regex>
#include <stdexcept>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "bernstein_c.h"

namespace bernstein::service {
namespace {

using nlohmann::json;

struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CString {
  char* p = nullptr;
  ~CString() { bn_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Destroy(p); }
};
using IndexHandle = Handle<bn_index, bn_index_destroy>;
using PolygonHandle = Handle<bn_polygon, bn_polygon_destroy>;

void check(bn_status st) {
  if (st != BN_OK) throw BadRequest(bn_last_error());
}

Response json_response(int status, const std::string& body) {
  return {status, body + "\n", {{"Content-Type", "application/json"}}};
}

Response error_response(int status, const std::string& message) {
  return json_response(status, json{{"error", message}}.dump());
}

const std::string& param(const Request& r, const std::string& name) {
  auto it = r.query.find(name);
  if (it == r.query.end()) throw BadRequest("missing query parameter '" + name + "'");
  return it->second;
}

long int_param(const Request& r, const std::string& name) {
  const std::string& text = param(r, name);
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw BadRequest("query parameter '" + name + "' must be an integer");
  return v;
}

std::string shortest_decimal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Response curve(const Request& r) {
  json body;
  try {
    body = json::parse(r.body);
  } catch (const json::exception& e) {
    throw BadRequest(std::string("malformed JSON body: ") + e.what());
  }
  if (!body.is_object() || !body.contains("control_points") || !body["control_points"].is_array())
    throw BadRequest("body needs a 'control_points' array");
  const auto& pts = body["control_points"];
  if (pts.empty()) throw BadRequest("control polygon needs at least 2 points");
  const std::size_t dim = pts[0].is_array() ? pts[0].size() : 0;
  std::vector<double> coords;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != dim) throw BadRequest("control points must be arrays of equal length");
    for (const auto& c : p) {
      if (!c.is_number()) throw BadRequest("control point coordinates must be numbers");
      coords.push_back(c.get<double>());
    }
  }
  std::size_t samples = 33;
  if (body.contains("samples")) {
    if (!body["samples"].is_number_integer() || body["samples"].get<long>() < 2)
      throw BadRequest("'samples' must be an integer >= 2");
    samples = body["samples"].get<std::size_t>();
  }
  PolygonHandle poly;
  check(bn_polygon_create(coords.data(), pts.size(), static_cast<int>(dim), &poly.p));
  CString out;
  check(bn_curve_export(poly.p, samples, BN_FORMAT_JSON, &out.p));
  return json_response(200, out.str());
}

Response basis(const Request& r) {
  const long n = int_param(r, "n");
  if (n < 0 || n > 10000) throw BadRequest("n must be in [0, 10000]");
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  check(bn_basis_values(n, param(r, "x").c_str(), values.data(), values.size()));
  return json_response(200, json(values).dump());
}

Response unified(const Request& r) {
  const long n = int_param(r, "n");
  const long k = r.query.count("k") ? int_param(r, "k") : -1;
  IndexHandle idx;
  check(bn_index_create(int_param(r, "b"), int_param(r, "s"), k, &idx.p));
  CString exact;
  check(bn_eval_closed(n, idx.p, param(r, "x").c_str(), &exact.p));
  double value = 0.0;
  check(bn_rational_to_double(exact.p, &value));
  json doc = json::object();
  doc["decimal"] = shortest_decimal(value);
  doc["exact"] = exact.str();
  return json_response(200, doc.dump());
}

Response route(const Request& r) {
  if (r.method == "OPTIONS") return {204, "", {}};
  if (r.path == "/curve") return r.method == "POST" ? curve(r) : error_response(405, "use POST for /curve");
  if (r.path == "/basis") return r.method == "GET" ? basis(r) : error_response(405, "use GET for /basis");
  if (r.path == "/unified") return r.method == "GET" ? unified(r) : error_response(405, "use GET for /unified");
  return error_response(404, "unknown route " + r.path);
}

}  // namespace

bool is_local_origin(const std::string& origin) {
  static const std::regex local(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:[0-9]{1,5})?$)");
  return std::regex_match(origin, local);
}

Response handle(const Request& request) {
  Response resp;
  try {
    resp = route(request);
  } catch (const BadRequest& e) {
    resp = error_response(400, e.what());
  } catch (const std::exception& e) {
    resp = error_response(500, e.what());
  }
  if (!request.origin.empty() && is_local_origin(request.origin)) {
    resp.headers["Access-Control-Allow-Origin"] = request.origin;
    resp.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
    resp.headers["Access-Control-Allow-Headers"] = "Content-Type";
    resp.headers["Vary"] = "Origin";
  }
  return resp;
}

struct Server::Impl {
  httplib::Server http;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  auto forward = [](const httplib::Request& req, httplib::Response& res) {
    Request r{req.method, req.path, {}, req.body, req.get_header_value("Origin")};
    for (const auto& [key, value] : req.params) r.query[key] = value;
    const Response out = handle(r);
    res.status = out.status;
    for (const auto& [key, value] : out.headers)
      if (key != "Content-Type") res.set_header(key, value);
    auto ct = out.headers.find("Content-Type");
    res.set_content(out.body, ct == out.headers.end() ? "text/plain" : ct->second);
  };
  auto& http = impl_->http;
  http.Get(".*", forward);
  http.Post(".*", forward);
  http.Options(".*", forward);
  http.Put(".*", forward);
  http.Delete(".*", forward);
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

int serve(const std::string& host, int port) {
  Server server;
  if (server.bind(host, port) < 0) return 1;
  server.listen();
  return 0;
}

}  // namespace bernstein::service
