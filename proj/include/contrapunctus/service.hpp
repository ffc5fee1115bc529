#pragma once

// HTTP/JSON query service for the composer front end. Request handling is a
// pure function of (method, path, query, body) so it can be exercised without
// a socket; `serve` binds it to cpp-httplib. Schemas: docs/openapi.yaml.

#include <atomic>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "contrapunctus/counterpoint.hpp"
#include "contrapunctus/report.hpp"

namespace httplib {
class Server;
}

namespace contrapunctus {

struct SessionContext {
  std::string id;
  ContrapuntalContext ctx;
  std::map<std::uint32_t, SymmetryReport> successors;
};

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  Json body;
};

class Service {
 public:
  Service();
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  Response handle(const Request& request);

  /// Blocks serving HTTP on host:port until stop() is called. Port 0 picks a free port.
  bool listen(const std::string& host, int port);
  void stop();
  /// Bound port once listen() has bound, else 0.
  int port() const { return port_; }

  std::size_t cached_contexts() const;

 private:
  using Slot = std::shared_future<std::shared_ptr<const SessionContext>>;

  Response get_worlds() const;
  Response get_context(const Request& request);
  Response get_successors(const SessionContext& session, const Request& request) const;
  Response get_next(const SessionContext& session, const Request& request) const;
  Response post_closure(const Request& request) const;

  std::shared_ptr<const SessionContext> lookup(const std::string& id) const;

  mutable std::mutex mutex_;
  std::map<std::string, Slot> contexts_;
  std::mutex server_mutex_;
  std::unique_ptr<httplib::Server> server_;
  std::atomic<int> port_{0};
};

/// Deterministic id for the (world, K) pair.
std::string context_id(const World& world, const SubSet& k);

}  // namespace contrapunctus
