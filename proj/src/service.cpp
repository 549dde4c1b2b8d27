#include "surreal/service.hpp"

#include <filesystem>

#include <httplib.h>

#include "surreal/genealogy.hpp"

namespace surreal {

using nlohmann::json;

namespace {

json protocolError(const std::string& message) {
  return json{{"ok", false}, {"display", "error: " + message}, {"protocolError", true}};
}

json statsJson(const Stats& s) {
  return json{{"geCalls", s.geCalls}, {"plusEvals", s.plusEvals}, {"timesEvals", s.timesEvals}};
}

void reply(httplib::Response& res, const json& body) {
  json out = body;
  const bool bad = CalcService::isProtocolError(out);
  out.erase("protocolError");
  res.status = bad ? 400 : 200;
  res.set_content(out.dump(), "application/json; charset=utf-8");
}

}  // namespace

CalcService::CalcService(const Genealogy& tree, EngineConfig config)
    : tree_(&tree), engine_(tree, config), calc_(engine_) {}

CalcService::~CalcService() = default;

json CalcService::handleEval(const json& request) {
  if (!request.is_object()) return protocolError("request must be a JSON object");
  auto session = request.find("session");
  auto input = request.find("input");
  if (session == request.end() || !session->is_string() || session->get<std::string>().empty())
    return protocolError("session must be a nonempty string");
  if (input == request.end() || !input->is_string()) return protocolError("input must be a string");
  const auto& text = input->get_ref<const std::string&>();
  if (text.size() > kMaxInputBytes) return protocolError("input exceeds 64 KiB");

  Outcome o;
  {
    std::lock_guard lock(mutex_);
    Env& env = sessions_[session->get<std::string>()];
    o = calc_.run(text, env);
  }
  json out{{"ok", o.ok}, {"display", o.display}, {"millis", o.millis}, {"stats", statsJson(o.delta)}};
  if (o.node) {
    out["name"] = o.node->name().toString();
    out["form"] = render(o.node->form());
    out["generation"] = o.node->generation();
  }
  return out;
}

json CalcService::handleEvalBody(std::string_view body) {
  json request = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (request.is_discarded()) return protocolError("malformed JSON");
  return handleEval(request);
}

json CalcService::handleTree(int depth) {
  if (depth < 0 || depth > kMaxTreeDepth)
    return protocolError("depth must be between 0 and " + std::to_string(kMaxTreeDepth));
  json nodes = json::array();
  std::string dump;
  {
    std::lock_guard lock(mutex_);
    dump = dumpTree(*tree_, static_cast<std::uint32_t>(depth));
    for (const CanonicalNode* n : tree_->inOrder(static_cast<std::uint32_t>(depth))) {
      nodes.push_back({{"path", renderPath(pathOf(n))},
                       {"name", n->name().toString()},
                       {"form", render(n->form())},
                       {"generation", n->generation()}});
    }
  }
  return json{{"ok", true}, {"depth", depth}, {"dump", dump}, {"nodes", nodes}};
}

void CalcService::installRoutes(const std::string& webRoot) {
  server_ = std::make_unique<httplib::Server>();
  server_->Post("/api/eval", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, handleEvalBody(req.body));
  });
  server_->Get("/api/tree", [this](const httplib::Request& req, httplib::Response& res) {
    int depth = -1;
    if (req.has_param("depth")) {
      try {
        std::size_t used = 0;
        const std::string raw = req.get_param_value("depth");
        depth = std::stoi(raw, &used);
        if (used != raw.size()) depth = -1;
      } catch (const std::exception&) {
        depth = -1;
      }
    }
    reply(res, handleTree(depth));
  });
  server_->Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    reply(res, json{{"ok", true}});
  });
  if (!webRoot.empty() && std::filesystem::is_directory(webRoot)) server_->set_mount_point("/", webRoot);
}

bool CalcService::listen(const std::string& host, int port, const std::string& webRoot) {
  installRoutes(webRoot);
  return server_->listen(host, port);
}

int CalcService::bindToAnyPort(const std::string& host) {
  installRoutes("");
  return server_->bind_to_any_port(host);
}

bool CalcService::listenAfterBind() { return server_->listen_after_bind(); }

void CalcService::stop() {
  if (server_) server_->stop();
}

}  // namespace surreal
