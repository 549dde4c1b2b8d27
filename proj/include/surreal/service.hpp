#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "surreal/calculator.hpp"

namespace httplib {
class Server;
}

namespace surreal {

/// JSON facade over one shared engine. Sessions hold their own bindings; the
/// genealogy tree and memo tables are shared. Evaluations are serialized.
///
///   POST /api/eval        {"session": "...", "input": "..."}
///   GET  /api/tree?depth  depth in [0, 6]
///   GET  /api/health
class CalcService {
 public:
  static constexpr std::size_t kMaxInputBytes = 64 * 1024;
  static constexpr int kMaxTreeDepth = 6;

  CalcService(const Genealogy& tree, EngineConfig config = {});
  ~CalcService();

  /// Response for a parsed request. Protocol problems give ok=false with
  /// status 400 in the HTTP layer.
  nlohmann::json handleEval(const nlohmann::json& request);
  /// Parses the body first; malformed JSON becomes a protocol error.
  nlohmann::json handleEvalBody(std::string_view body);
  nlohmann::json handleTree(int depth);

  static bool isProtocolError(const nlohmann::json& response) {
    return response.value("protocolError", false);
  }

  /// Binds and serves until stop(). Static files come from webRoot if it exists.
  bool listen(const std::string& host, int port, const std::string& webRoot = "");
  /// Binds to an ephemeral port and returns it; serve with listenAfterBind().
  int bindToAnyPort(const std::string& host);
  bool listenAfterBind();
  void stop();

 private:
  void installRoutes(const std::string& webRoot);

  const Genealogy* tree_;
  Engine engine_;
  Calculator calc_;
  std::mutex mutex_;
  std::map<std::string, Env, std::less<>> sessions_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace surreal
