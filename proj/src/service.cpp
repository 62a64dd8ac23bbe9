#include "ejmt/service.hpp"

#include <mutex>
#include <stdexcept>

#include "httplib.h"

namespace ejmt {

Json breakdown_to_json(const ScoreBreakdown& b, const std::string& signature) {
  Json j;
  j["s_lex"] = b.s_lex;
  j["s_rule"] = b.s_rule;
  j["s_arg"] = b.s_arg;
  j["s_conj"] = b.s_conj;
  j["total"] = b.total;
  j["signature"] = signature;
  return j;
}

Json tree_to_json(const TreeNode& tree) {
  Json j;
  j["cat"] = tree.category;
  j["span"] = {tree.span.begin, tree.span.end};
  if (tree.is_lexical()) {
    j["token"] = tree.token();
    j["surface"] = tree.sense->surface;
    j["sense"] = tree.sense->sense_id;
    j["ja"] = tree.sense->ja;
    return j;
  }
  j["rule"] = tree.rule_id;
  Json kids = Json::array();
  for (const auto& c : tree.children) kids.push_back(tree_to_json(*c));
  j["children"] = std::move(kids);
  return j;
}

Json sentence_to_json(const SentenceResult& r) {
  Json j;
  j["text"] = r.text;
  Json tokens = Json::array();
  for (const auto& t : r.tokens) tokens.push_back({{"surface", t.surface}, {"norm", t.norm}, {"index", t.index}});
  j["tokens"] = std::move(tokens);
  j["status"] = std::string(status_name(r.status));
  j["message"] = r.message;
  j["japanese"] = r.japanese;
  j["parse_count"] = r.parse_count.str();
  j["log10_count"] = r.log10_count ? Json(*r.log10_count) : Json(nullptr);
  if (r.best) {
    j["best"] = {{"signature", r.best->signature},
                 {"breakdown", breakdown_to_json(r.best->breakdown, r.best->signature)},
                 {"tree", tree_to_json(*r.best->tree)}};
  } else {
    j["best"] = nullptr;
  }
  Json alts = Json::array();
  for (const auto& a : r.alternatives) alts.push_back({{"signature", a.signature}, {"total", a.total}, {"japanese", a.japanese}});
  j["alternatives"] = std::move(alts);
  return j;
}

Json response_to_json(const std::vector<SentenceResult>& results) {
  Json sentences = Json::array();
  for (const auto& r : results) sentences.push_back(sentence_to_json(r));
  Json j;
  j["sentences"] = std::move(sentences);
  return j;
}

Json constraints_to_json(const Constraints& c) {
  Json required = Json::array();
  for (const auto& r : c.required_spans) {
    Json entry = {r.span.begin, r.span.end};
    if (r.category) entry.push_back(*r.category);
    required.push_back(std::move(entry));
  }
  Json forbidden = Json::array();
  for (const auto& f : c.forbidden_spans) forbidden.push_back({f.begin, f.end});
  Json pinned = Json::array();
  for (const auto& p : c.pinned_senses) pinned.push_back({{"token_index", p.token}, {"sense_id", p.sense_id}});
  Json j;
  j["required_spans"] = std::move(required);
  j["forbidden_spans"] = std::move(forbidden);
  j["pinned_senses"] = std::move(pinned);
  return j;
}

namespace {

std::size_t index_field(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Span span_field(const Json& v, const char* what, std::size_t max_len) {
  if (!v.is_array() || v.size() < 2 || v.size() > max_len) {
    throw std::invalid_argument(std::string(what) + " entries must be [i, j" + (max_len > 2 ? ", cat?]" : "]"));
  }
  return {index_field(v[0], what), index_field(v[1], what)};
}

}  // namespace

Constraints constraints_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("constraints must be an object");
  Constraints c;
  for (const auto& [key, value] : j.items()) {
    if (key != "required_spans" && key != "forbidden_spans" && key != "pinned_senses") {
      throw std::invalid_argument("unknown constraints field " + key);
    }
    if (!value.is_array()) throw std::invalid_argument(key + " must be an array");
  }
  if (j.contains("required_spans")) {
    for (const auto& e : j["required_spans"]) {
      RequiredSpan r{span_field(e, "required_spans", 3), std::nullopt};
      if (e.size() == 3 && !e[2].is_null()) {
        if (!e[2].is_string()) throw std::invalid_argument("required span category must be a string");
        r.category = e[2].get<std::string>();
      }
      c.required_spans.push_back(std::move(r));
    }
  }
  if (j.contains("forbidden_spans")) {
    for (const auto& e : j["forbidden_spans"]) c.forbidden_spans.push_back(span_field(e, "forbidden_spans", 2));
  }
  if (j.contains("pinned_senses")) {
    for (const auto& e : j["pinned_senses"]) {
      if (!e.is_object() || !e.contains("token_index") || !e.contains("sense_id") || !e["sense_id"].is_string()) {
        throw std::invalid_argument("pinned_senses entries must be {token_index, sense_id}");
      }
      c.pinned_senses.push_back({index_field(e["token_index"], "token_index"), e["sense_id"].get<std::string>()});
    }
  }
  return c;
}

Json resources_info(const ResourceBundle& bundle) {
  Json j;
  j["rules"] = bundle.grammar().size();
  j["senses"] = bundle.sense_count();
  j["sem_nodes"] = bundle.taxonomy().size();
  j["xforms"] = bundle.xforms().size();
  j["fingerprint"] = bundle.fingerprint();
  return j;
}

TranslateRequest parse_translate_request(std::string_view body) {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("request must be a JSON object");
  TranslateRequest req;
  if (!j.contains("text") || !j["text"].is_string()) throw std::invalid_argument("text must be a string");
  req.text = j["text"].get<std::string>();
  if (j.contains("beam") && !j["beam"].is_null()) {
    const auto& b = j["beam"];
    if (b.is_string() && b.get<std::string>() == "inf") {
      req.beam = kUnboundedBeam;
    } else if (b.is_number_integer() && b.get<long long>() >= 1 && b.get<long long>() <= 10000) {
      req.beam = b.get<std::size_t>();
    } else {
      throw std::invalid_argument("beam must be an integer in 1..10000 or \"inf\"");
    }
  }
  if (j.contains("kbest") && !j["kbest"].is_null()) {
    const auto& k = j["kbest"];
    if (!k.is_number_integer() || k.get<long long>() < 1 || k.get<long long>() > 100) {
      throw std::invalid_argument("kbest must be an integer in 1..100");
    }
    req.kbest = k.get<std::size_t>();
  }
  if (j.contains("constraints") && !j["constraints"].is_null()) {
    req.constraints = constraints_from_json(j["constraints"]);
  }
  return req;
}

TranslationService::TranslationService(std::shared_ptr<const ResourceBundle> bundle) : bundle_(std::move(bundle)) {}

namespace {

HttpReply error_reply(const std::string& message) {
  Json j;
  j["error"] = message;
  return {400, j.dump()};
}

}  // namespace

HttpReply TranslationService::handle_translate(std::string_view body) const {
  TranslateRequest req;
  try {
    req = parse_translate_request(body);
  } catch (const std::invalid_argument& e) {
    return error_reply(e.what());
  }
  try {
    auto results = translate(req.text, bundle_, req.constraints, TranslateOptions{req.beam, req.kbest});
    return {200, response_to_json(results).dump()};
  } catch (const ConstraintError& e) {
    return error_reply(e.what());
  }
}

HttpReply TranslationService::handle_info() const { return {200, resources_info(*bundle_).dump()}; }

struct TranslationService::Server {
  httplib::Server http;
};

void TranslationService::serve(const std::string& host, int port, const std::function<void(int)>& on_bound) {
  auto server = std::make_shared<Server>();
  {
    std::lock_guard<std::mutex> lock(server_mutex_);
    server_ = server;
  }
  server->http.Post("/v1/translate", [this](const httplib::Request& req, httplib::Response& res) {
    auto reply = handle_translate(req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json; charset=utf-8");
  });
  server->http.Get("/v1/resources/info", [this](const httplib::Request&, httplib::Response& res) {
    auto reply = handle_info();
    res.status = reply.status;
    res.set_content(reply.body, "application/json; charset=utf-8");
  });
  int bound = port;
  if (port == 0) {
    bound = server->http.bind_to_any_port(host);
  } else if (!server->http.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  if (on_bound) on_bound(bound);
  server->http.listen_after_bind();
}

void TranslationService::stop() {
  std::shared_ptr<Server> server;
  {
    std::lock_guard<std::mutex> lock(server_mutex_);
    server = server_;
  }
  if (!server) return;
  // stop() is a no-op until the listen loop is up
  server->http.wait_until_ready();
  server->http.stop();
}

}  // namespace ejmt
