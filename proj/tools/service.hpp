#pragma once

// Stateless JSON endpoints over the C API.
//
//   POST /curve            {"control_points": [[x,y],...], "samples": N} -> curve samples
//   GET  /basis?n=&x=      [g_n(0,x), ..., g_n(n,x)] as doubles
//   GET  /unified?n=&b=&s=&x=[&k=]  {"decimal": "...", "exact": "p/q"}

#include <map>
#include <memory>
#include <string>

namespace bernstein::service {

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
  std::string origin;  ///< value of the Origin header, if any
};

struct Response {
  int status = 200;
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Pure function of the request; safe to call concurrently.
Response handle(const Request& request);

/// True for http(s)://localhost, 127.0.0.1 and [::1], any port.
bool is_local_origin(const std::string& origin);

/// HTTP front end forwarding every request to handle().
class Server {
 public:
  Server();
  ~Server();

  /// Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called from another thread.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving on host:port. Returns nonzero if the port cannot be bound.
int serve(const std::string& host, int port);

}  // namespace bernstein::service
