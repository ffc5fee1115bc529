#include <doctest.h>

#include <chrono>
#include <atomic>
#include <thread>

#include <httplib.h>

#include "contrapunctus/service.hpp"

using namespace contrapunctus;

namespace {

Response get(Service& s, const std::string& path, std::map<std::string, std::string> query = {}) {
  return s.handle({"GET", path, std::move(query), ""});
}

const std::map<std::string, std::string> kClassical{{"world", "affine:12"},
                                                    {"kappa", "0,3,4,7,8,9"}};

}  // namespace

TEST_SUITE("service") {

TEST_CASE("worlds") {
  Service s;
  const auto r = get(s, "/worlds");
  CHECK(r.status == 200);
  CHECK(r.body["worlds"].size() == 6);
}

TEST_CASE("contexts") {
  Service s;
  auto r = get(s, "/contexts", kClassical);
  REQUIRE(r.status == 200);
  CHECK(r.body["strong"] == true);
  CHECK(r.body["polarity"] == "e2.5");
  const std::string id = r.body["id"];
  CHECK(get(s, "/contexts", kClassical).body.dump() == r.body.dump());
  CHECK(s.cached_contexts() == 1);

  r = get(s, "/contexts", {{"world", "affine:12"}, {"kappa", "0,2,3,4,7,8"}});
  CHECK(r.status == 422);
  CHECK(r.body["witnesses"] == Json::array({"e1.11", "e9.7"}));
  CHECK(s.cached_contexts() == 1);

  CHECK(get(s, "/contexts", {{"world", "affine:q"}, {"kappa", "0"}}).status == 400);
  CHECK(get(s, "/contexts", {{"world", "affine:12"}}).status == 400);

  r = get(s, "/contexts/" + id + "/successors", {{"interval", "7"}});
  REQUIRE(r.status == 200);
  CHECK(r.body["max_meet_size"] == 60);
  CHECK(get(s, "/contexts/" + id + "/successors").body["entries"].size() == 6);
  CHECK(get(s, "/contexts/" + id + "/successors", {{"interval", "1"}}).status == 400);
  CHECK(get(s, "/contexts/ctx-nope/successors").status == 404);
  CHECK(get(s, "/nowhere").status == 404);

  r = get(s, "/contexts/" + id + "/next", {{"interval", "0"}, {"cantus", "0"}});
  REQUIRE(r.status == 200);
  for (const auto& k : r.body["admitted"]) {
    CHECK((k == 0 || k == 3 || k == 4 || k == 7 || k == 8 || k == 9));
  }
  CHECK(r.body["admitted"] == Json::array({3, 4, 7, 8, 9}));
}

TEST_CASE("next with nothing admitted") {
  Service s;
  // Over powerset:1 the only dichotomy is {0}/{S}; no symmetry survives.
  auto r = get(s, "/contexts", {{"world", "powerset:1"}, {"kappa", "0"}});
  REQUIRE(r.status == 200);
  const std::string id = r.body["id"];
  r = get(s, "/contexts/" + id + "/next", {{"interval", "0"}, {"cantus", "S"}});
  REQUIRE(r.status == 200);
  CHECK(r.body["admitted"].is_array());
}

TEST_CASE("closure") {
  Service s;
  auto r = s.handle({"POST", "/closure", {},
                     R"({"world":"affine:12","map":"e2.5","set":[0],"mode":"involutive"})"});
  REQUIRE(r.status == 200);
  CHECK(r.body["closed"] == Json::array({0, 2}));
  r = s.handle({"POST", "/closure", {}, R"({"world":"affine:12","map":"e1.1","set":"0"})"});
  CHECK(r.body["closed"].size() == 12);
  CHECK(s.handle({"POST", "/closure", {}, "{"}).status == 400);
  r = s.handle({"POST", "/closure", {}, R"({"world":"affine:12","map":"e1.1","set":"0","mode":"x"})"});
  CHECK(r.status == 400);
  CHECK(r.body["token"] == "x");
}

TEST_CASE("concurrent first requests share one computation") {
  Service s;
  std::vector<std::thread> threads;
  std::vector<std::string> bodies(8);
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    threads.emplace_back([&, i] { bodies[i] = get(s, "/contexts", kClassical).body.dump(); });
  }
  for (auto& t : threads) t.join();
  for (const auto& b : bodies) CHECK(b == bodies.front());
  CHECK(s.cached_contexts() == 1);
}

TEST_CASE("live socket") {
  Service s;
  std::atomic<bool> done{false};
  bool bound = false;
  std::thread server([&] {
    bound = s.listen("127.0.0.1", 0);
    done = true;
  });
  for (int i = 0; i < 500 && s.port() == 0 && !done; ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  const int port = s.port();
  int worlds_status = 0, worlds_count = 0, strong_status = 0;
  if (port != 0) {
    httplib::Client client("127.0.0.1", port);
    client.set_connection_timeout(2);
    httplib::Result res;
    for (int i = 0; i < 100 && !res; ++i) {
      res = client.Get("/worlds");
      if (!res) std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
    if (res) {
      worlds_status = res->status;
      worlds_count = static_cast<int>(Json::parse(res->body)["worlds"].size());
    }
    if (auto r = client.Get("/contexts?world=affine:12&kappa=0,2,3,4,7,8")) strong_status = r->status;
  }
  while (!done) {
    s.stop();
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  server.join();
  CHECK(port != 0);
  CHECK(bound);
  CHECK(worlds_status == 200);
  CHECK(worlds_count == 6);
  CHECK(strong_status == 422);
}

}
