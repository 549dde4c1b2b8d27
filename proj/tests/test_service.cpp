#include <doctest.h>

#include <thread>

#include <httplib.h>

#include "surreal/service.hpp"

using namespace surreal;
using nlohmann::json;

namespace {

json eval(CalcService& svc, const std::string& session, const std::string& input) {
  return svc.handleEval(json{{"session", session}, {"input", input}});
}

}  // namespace

TEST_CASE("eval responses") {
  Genealogy tree;
  CalcService svc(tree);

  const json r = eval(svc, "a", "2*2");
  CHECK(r["ok"] == true);
  CHECK(r["display"] == "4 = ⟨3|⟩ (gen 4)");
  CHECK(r["name"] == "4");
  CHECK(r["form"] == "⟨3|⟩");
  CHECK(r["generation"] == 4);
  CHECK(r["millis"].is_number());
  CHECK(r["stats"]["timesEvals"].is_number_unsigned());
  CHECK(r["stats"].contains("geCalls"));
  CHECK(r["stats"].contains("plusEvals"));
  CHECK_FALSE(CalcService::isProtocolError(r));

  const json bad = eval(svc, "a", "1/3");
  CHECK(bad["ok"] == false);
  CHECK(bad["display"] == "error: denominator must be a power of two");
  CHECK_FALSE(bad.contains("name"));
  CHECK_FALSE(CalcService::isProtocolError(bad));

  const json b = eval(svc, "a", "1 < 2");
  CHECK(b["display"] == "true");
  CHECK_FALSE(b.contains("generation"));
}

TEST_CASE("sessions keep separate bindings") {
  Genealogy tree;
  CalcService svc(tree);
  CHECK(eval(svc, "one", "x = 3")["ok"] == true);
  CHECK(eval(svc, "one", "x*x")["display"] == "9 = ⟨8|⟩ (gen 9)");
  CHECK(eval(svc, "two", "x")["display"] == "error: unbound variable x");
}

TEST_CASE("protocol errors") {
  Genealogy tree;
  CalcService svc(tree);
  CHECK(CalcService::isProtocolError(svc.handleEvalBody("{not json")));
  CHECK(CalcService::isProtocolError(svc.handleEvalBody("[1,2]")));
  CHECK(CalcService::isProtocolError(svc.handleEval(json{{"input", "1"}})));
  CHECK(CalcService::isProtocolError(svc.handleEval(json{{"session", ""}, {"input", "1"}})));
  CHECK(CalcService::isProtocolError(svc.handleEval(json{{"session", "s"}, {"input", 1}})));
  CHECK(CalcService::isProtocolError(
      svc.handleEval(json{{"session", "s"}, {"input", std::string(CalcService::kMaxInputBytes + 1, '1')}})));
  CHECK(svc.handleEvalBody(R"({"session":"s","input":"1+1"})")["display"] == "2 = ⟨1|⟩ (gen 2)");
}

TEST_CASE("tree endpoint") {
  Genealogy tree;
  CalcService svc(tree);
  const json d0 = svc.handleTree(0);
  CHECK(d0["dump"] == ".\t0\t⟨|⟩\n");
  REQUIRE(d0["nodes"].size() == 1);
  CHECK(d0["nodes"][0] == json{{"path", "."}, {"name", "0"}, {"form", "⟨|⟩"}, {"generation", 0}});

  const json d1 = svc.handleTree(1);
  CHECK(d1["dump"] == "L\t-1\t⟨|0⟩\n.\t0\t⟨|⟩\nR\t1\t⟨0|⟩\n");

  const json d2 = svc.handleTree(2);
  REQUIRE(d2["nodes"].size() == 7);
  CHECK(d2["nodes"][6]["name"] == "2");
  CHECK(d2["nodes"][6]["path"] == "RR");
  CHECK(d2["nodes"][4]["name"] == "1/2");

  CHECK(svc.handleTree(6)["nodes"].size() == 127);
  CHECK(CalcService::isProtocolError(svc.handleTree(7)));
  CHECK(CalcService::isProtocolError(svc.handleTree(-1)));
}

TEST_CASE("responses do not depend on history") {
  Genealogy tree;
  CalcService warm(tree);
  for (const char* s : {"3*3", "<1/4|3/8>", "-1/2 * 5/2", "7 - 7"}) eval(warm, "w", s);
  Genealogy fresh;
  CalcService cold(fresh);
  for (const char* s : {"-1/2 * 5/2", "3*3", "5/4 + 3/8"}) {
    const json a = eval(warm, "w", s);
    const json b = eval(cold, "c", s);
    CHECK(a["display"] == b["display"]);
    CHECK(a["form"] == b["form"]);
  }
}

TEST_CASE("strategy command through eval") {
  Genealogy tree;
  CalcService svc(tree);
  CHECK(eval(svc, "s", ":strategy memo")["display"] == "strategy memo");
  CHECK(eval(svc, "s", "3*3")["display"] == "9 = ⟨8|⟩ (gen 9)");
  CHECK(eval(svc, "s", ":strategy parents")["display"] == "strategy parents");
  CHECK(eval(svc, "s", "3*3")["display"] == "9 = ⟨8|⟩ (gen 9)");
}

TEST_CASE("http round trip") {
  Genealogy tree;
  CalcService svc(tree);
  const int port = svc.bindToAnyPort("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server([&] { svc.listenAfterBind(); });

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  auto res = client.Post("/api/eval", R"({"session":"h","input":"2*2"})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  const json body = json::parse(res->body);
  CHECK(body["display"] == "4 = ⟨3|⟩ (gen 4)");
  CHECK_FALSE(body.contains("protocolError"));

  auto bad = client.Post("/api/eval", "{oops", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body)["ok"] == false);

  auto t = client.Get("/api/tree?depth=1");
  REQUIRE(t);
  CHECK(t->status == 200);
  CHECK(json::parse(t->body)["nodes"].size() == 3);

  auto deep = client.Get("/api/tree?depth=9");
  REQUIRE(deep);
  CHECK(deep->status == 400);
  auto junk = client.Get("/api/tree?depth=2x");
  REQUIRE(junk);
  CHECK(junk->status == 400);

  svc.stop();
  server.join();
}
