#include "contrapunctus/service.hpp"

#include <cstdio>

#include <httplib.h>

#include "contrapunctus/closure.hpp"
#include "contrapunctus/errors.hpp"
#include "contrapunctus/notation.hpp"

namespace contrapunctus {

namespace {

Response error(int status, const std::string& message) {
  return {status, Json{{"error", message}}};
}

const std::string& require_param(const Request& r, const std::string& name) {
  const auto it = r.query.find(name);
  if (it == r.query.end()) throw ParseError("missing query parameter", name);
  return it->second;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start < path.size()) {
    const auto pos = path.find('/', start);
    const auto end = pos == std::string::npos ? path.size() : pos;
    if (end > start) parts.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::string element_list_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (!value.is_array()) throw ParseError("expected an element list", value.dump());
  std::string out;
  for (const auto& item : value) {
    if (!out.empty()) out += ',';
    out += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return out;
}

ClosureMode parse_mode(const std::string& mode) {
  if (mode == "involutive") return ClosureMode::Involutive;
  if (mode == "single") return ClosureMode::SingleStep;
  if (mode == "iterated") return ClosureMode::Iterated;
  throw ParseError("mode must be involutive, single or iterated", mode);
}

}  // namespace

std::string context_id(const World& world, const SubSet& k) {
  const std::string key = to_string(world) + "|" + format_subset(world, k);
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[21];
  std::snprintf(buf, sizeof buf, "ctx-%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Service::Service() = default;
Service::~Service() = default;

Response Service::handle(const Request& request) {
  try {
    const auto parts = split_path(request.path);
    if (request.method == "GET" && parts == std::vector<std::string>{"worlds"}) {
      return get_worlds();
    }
    if (request.method == "GET" && parts == std::vector<std::string>{"contexts"}) {
      return get_context(request);
    }
    if (request.method == "POST" && parts == std::vector<std::string>{"closure"}) {
      return post_closure(request);
    }
    if (request.method == "GET" && parts.size() == 3 && parts[0] == "contexts") {
      const auto session = lookup(parts[1]);
      if (!session) return error(404, "unknown context " + parts[1]);
      if (parts[2] == "successors") return get_successors(*session, request);
      if (parts[2] == "next") return get_next(*session, request);
    }
    return error(404, "no route for " + request.method + " " + request.path);
  } catch (const NonStrongDichotomy& e) {
    return {422, Json{{"error", e.what()}, {"strong", false}, {"witnesses", e.witnesses()}}};
  } catch (const ParseError& e) {
    return {400, Json{{"error", e.what()}, {"token", e.token()}}};
  } catch (const Json::exception& e) {
    return error(400, std::string("malformed JSON body: ") + e.what());
  } catch (const Error& e) {
    return error(400, e.what());
  }
}

Response Service::get_worlds() const {
  Json worlds = Json::array();
  for (const auto& entry : world_catalog()) {
    worlds.push_back({{"spec", entry.spec}, {"description", entry.description}});
  }
  return {200, Json{{"worlds", std::move(worlds)}}};
}

Response Service::get_context(const Request& request) {
  const World world = parse_world(require_param(request, "world"));
  const SubSet k = parse_subset(world, require_param(request, "kappa"));
  const std::string id = context_id(world, k);

  std::promise<std::shared_ptr<const SessionContext>> promise;
  Slot slot;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    if (const auto it = contexts_.find(id); it != contexts_.end()) {
      slot = it->second;
    } else {
      slot = promise.get_future().share();
      contexts_.emplace(id, slot);
      owner = true;
    }
  }
  if (owner) {
    try {
      auto ctx = make_context(world, k);
      auto successors = successors_table(ctx);
      promise.set_value(std::make_shared<const SessionContext>(
          SessionContext{id, std::move(ctx), std::move(successors)}));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(mutex_);
      contexts_.erase(id);
    }
  }
  const auto session = slot.get();
  Json body = context_json(session->ctx);
  body["id"] = session->id;
  body["strong"] = true;
  return {200, std::move(body)};
}

Response Service::get_successors(const SessionContext& session, const Request& request) const {
  if (!request.query.contains("interval")) {
    return {200, successors_json(session.ctx, session.successors, false)};
  }
  const auto k = parse_element(session.ctx.base, request.query.at("interval"));
  const auto it = session.successors.find(k);
  if (it == session.successors.end()) {
    return error(400, "interval " + request.query.at("interval") + " is not consonant");
  }
  return {200, report_json(session.ctx, it->second)};
}

Response Service::get_next(const SessionContext& session, const Request& request) const {
  const auto k = parse_element(session.ctx.base, require_param(request, "interval"));
  const auto cantus = parse_element(session.ctx.base, require_param(request, "cantus"));
  const auto it = session.successors.find(k);
  if (it == session.successors.end()) {
    return error(400, "interval " + request.query.at("interval") + " is not consonant");
  }
  const SubSet next = admitted_next_intervals(session.ctx, it->second, cantus);
  Json text = Json::array();
  for (auto x : next.elements()) text.push_back(format_element(session.ctx.base, x));
  return {200, Json{{"context", session.id},
                    {"interval", k},
                    {"cantus", cantus},
                    {"admitted", subset_json(next)},
                    {"admitted_text", std::move(text)}}};
}

Response Service::post_closure(const Request& request) const {
  const Json body = Json::parse(request.body);
  const World world = parse_world(body.at("world").get<std::string>());
  const Morphism map = parse_morphism(world, body.at("map").get<std::string>());
  const SubSet set = parse_subset(world, element_list_text(body.at("set")));
  const std::string mode_text = body.value("mode", std::string("iterated"));
  const ClosureOperator op(map, parse_mode(mode_text));
  const SubSet closed = op(set);
  return {200, Json{{"world", to_string(world)},
                    {"map", to_string(map)},
                    {"mode", mode_text},
                    {"set", subset_json(set)},
                    {"closed", subset_json(closed)},
                    {"closed_text", format_subset(world, closed)}}};
}

std::shared_ptr<const SessionContext> Service::lookup(const std::string& id) const {
  Slot slot;
  {
    std::lock_guard lock(mutex_);
    const auto it = contexts_.find(id);
    if (it == contexts_.end()) return nullptr;
    slot = it->second;
  }
  try {
    return slot.get();
  } catch (const Error&) {
    return nullptr;
  }
}

std::size_t Service::cached_contexts() const {
  std::lock_guard lock(mutex_);
  return contexts_.size();
}

bool Service::listen(const std::string& host, int port) {
  {
    std::lock_guard lock(server_mutex_);
    server_ = std::make_unique<httplib::Server>();
    const auto adapt = [this](const httplib::Request& req, httplib::Response& res) {
      Request r{req.method, req.path, {}, req.body};
      for (const auto& [key, value] : req.params) r.query[key] = value;
      const Response out = handle(r);
      res.status = out.status;
      res.set_content(out.body.dump() + "\n", "application/json; charset=utf-8");
    };
    server_->Get(R"(/.*)", adapt);
    server_->Post(R"(/.*)", adapt);
    const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (bound <= 0) return false;
    port_ = bound;
  }
  return server_->listen_after_bind();
}

void Service::stop() {
  std::lock_guard lock(server_mutex_);
  if (server_) server_->stop();
}

}  // namespace contrapunctus
