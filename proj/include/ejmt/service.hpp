#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ejmt/interpretation.hpp"
#include "ejmt/resources.hpp"
#include "ejmt/transfer.hpp"

namespace ejmt {

using Json = nlohmann::ordered_json;

// Wire forms shared by the HTTP service and the CLI.
Json breakdown_to_json(const ScoreBreakdown& breakdown, const std::string& signature);
Json tree_to_json(const TreeNode& tree);
Json sentence_to_json(const SentenceResult& result);
Json response_to_json(const std::vector<SentenceResult>& results);
Json constraints_to_json(const Constraints& constraints);
/// Throws std::invalid_argument on shape errors.
Constraints constraints_from_json(const Json& j);
Json resources_info(const ResourceBundle& bundle);

struct TranslateRequest {
  std::string text;
  std::optional<std::size_t> beam;
  std::optional<std::size_t> kbest;
  Constraints constraints;
};

/// Throws std::invalid_argument for malformed JSON or out-of-range fields.
TranslateRequest parse_translate_request(std::string_view body);

struct HttpReply {
  int status = 200;
  std::string body;
};

/// Stateless request handling over one immutable bundle.
class TranslationService {
 public:
  explicit TranslationService(std::shared_ptr<const ResourceBundle> bundle);

  HttpReply handle_translate(std::string_view body) const;
  HttpReply handle_info() const;

  /// Blocks until stop() is called from another thread. Port 0 picks a free
  /// port; `on_bound` is called with the bound port before serving.
  void serve(const std::string& host, int port, const std::function<void(int)>& on_bound = {});
  void stop();

 private:
  std::shared_ptr<const ResourceBundle> bundle_;
  struct Server;
  std::mutex server_mutex_;
  std::shared_ptr<Server> server_;
};

}  // namespace ejmt
