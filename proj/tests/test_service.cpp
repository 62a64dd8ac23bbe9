#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <future>
#include <thread>

#include "httplib.h"

#include "ejmt/service.hpp"
#include "support.hpp"

using namespace ejmt;

namespace {

Json body_of(const HttpReply& r) { return Json::parse(r.body); }

std::string capture(const std::string& cmd) {
  std::string out;
  std::array<char, 4096> buf{};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::string cli_resources() {
  const std::string f = EJMT_FIXTURES;
  return " --grammar " + f + "/g0.grammar --lexicon " + f + "/l0.lexicon --taxonomy " + f + "/t0.taxonomy --xforms " +
         f + "/x0.xforms --config " + f + "/c0.config";
}

// Starts the HTTP server on a free port for the lifetime of the object.
class LiveServer {
 public:
  explicit LiveServer(std::shared_ptr<const ResourceBundle> b) : service_(std::move(b)) {
    std::promise<int> bound;
    auto port = bound.get_future();
    thread_ = std::thread([this, p = std::move(bound)]() mutable {
      service_.serve("127.0.0.1", 0, [&](int port) { p.set_value(port); });
    });
    port_ = port.get();
  }
  ~LiveServer() {
    service_.stop();
    thread_.join();
  }
  int port() const { return port_; }

 private:
  TranslationService service_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace

TEST(Service, TranslateSimple) {
  TranslationService s(testsupport::bundle());
  auto r = s.handle_translate(R"({"text":"The man saw the dog."})");
  ASSERT_EQ(r.status, 200);
  auto j = body_of(r);
  ASSERT_EQ(j["sentences"].size(), 1u);
  const auto& sent = j["sentences"][0];
  EXPECT_EQ(sent["status"], "ok");
  EXPECT_EQ(sent["japanese"], "男は犬を見た。");
  EXPECT_EQ(sent["parse_count"], "2");
  EXPECT_EQ(sent["tokens"].size(), 5u);
  EXPECT_EQ(sent["tokens"][0]["surface"], "The");
  EXPECT_EQ(sent["best"]["tree"]["cat"], "s");
  const auto& br = sent["best"]["breakdown"];
  EXPECT_NEAR(br["total"].get<double>(),
              br["s_lex"].get<double>() + br["s_rule"].get<double>() + 2 * br["s_arg"].get<double>() +
                  br["s_conj"].get<double>(),
              1e-9);
}

TEST(Service, TranslateAlternatives) {
  TranslationService s(testsupport::bundle());
  auto j = body_of(s.handle_translate(R"({"text":"The man saw the dog with the telescope.","kbest":2})"));
  const auto& alts = j["sentences"][0]["alternatives"];
  ASSERT_EQ(alts.size(), 2u);
  EXPECT_EQ(alts[0]["japanese"], "男は犬を望遠鏡で見た。");
  EXPECT_GE(alts[0]["total"].get<double>(), alts[1]["total"].get<double>());
}

TEST(Service, ConstraintsInRequest) {
  TranslationService s(testsupport::bundle());
  auto j = body_of(s.handle_translate(
      R"({"text":"The man saw the dog with the telescope.","constraints":{"pinned_senses":[{"token_index":2,"sense_id":"cut"}]}})"));
  EXPECT_EQ(j["sentences"][0]["japanese"], "男は犬を望遠鏡で切った。");
  j = body_of(s.handle_translate(
      R"({"text":"The man saw the dog with the telescope.","constraints":{"required_spans":[[3,8,"np"]]}})"));
  EXPECT_EQ(j["sentences"][0]["japanese"], "男は望遠鏡での犬を見た。");
  j = body_of(s.handle_translate(
      R"({"text":"The man saw the dog with the telescope.","beam":"inf","constraints":{"forbidden_spans":[[3,8]]}})"));
  EXPECT_EQ(j["sentences"][0]["japanese"], "男は犬を望遠鏡で見た。");
  j = body_of(s.handle_translate(R"({"text":"The dog ran.","constraints":{"required_spans":[[1,3]]}})"));
  EXPECT_EQ(j["sentences"][0]["status"], "constraints-unsatisfiable");
}

TEST(Service, BadRequests) {
  TranslationService s(testsupport::bundle());
  auto pin = s.handle_translate(R"({"text":"x","constraints":{"pinned_senses":[{"token_index":0,"sense_id":"nope"}]}})");
  EXPECT_EQ(pin.status, 400);
  EXPECT_NE(body_of(pin)["error"].get<std::string>().find("unknown sense for token"), std::string::npos);
  for (const char* body : {"{", "[]", "{}", R"({"text":3})", R"({"text":"a","beam":0})", R"({"text":"a","beam":10001})",
                           R"({"text":"a","beam":"wide"})", R"({"text":"a","kbest":0})", R"({"text":"a","kbest":101})",
                           R"({"text":"a","kbest":1.5})", R"({"text":"a","constraints":{"forbidden_spans":[[1]]}})",
                           R"({"text":"a","constraints":{"colour":[]}})",
                           R"({"text":"The dog ran.","constraints":{"forbidden_spans":[[0,9]]}})"}) {
    auto r = s.handle_translate(body);
    EXPECT_EQ(r.status, 400) << body;
    EXPECT_TRUE(body_of(r).contains("error")) << body;
  }
  // per-sentence trouble is still a 200
  EXPECT_EQ(s.handle_translate(R"({"text":"Colorless green ideas."})").status, 200);
  EXPECT_EQ(s.handle_translate(R"({"text":"a","beam":10000,"kbest":100})").status, 200);
}

TEST(Service, ResourcesInfo) {
  auto b = testsupport::bundle();
  TranslationService s(b);
  auto j = body_of(s.handle_info());
  EXPECT_EQ(j["rules"], 9);
  EXPECT_EQ(j["senses"], b->sense_count());
  EXPECT_EQ(j["sem_nodes"], 7);
  EXPECT_EQ(j["xforms"], 1);
  EXPECT_EQ(j["fingerprint"], b->fingerprint());
}

TEST(Service, IdenticalBodies) {
  TranslationService s(testsupport::bundle());
  const char* req = R"({"text":"The man saw the dog with the telescope. The dog and the man ran.","kbest":3})";
  EXPECT_EQ(s.handle_translate(req).body, s.handle_translate(req).body);
}

TEST(Service, ConstraintsJsonRoundTrip) {
  Constraints c;
  c.required_spans.push_back({{3, 8}, std::string("np")});
  c.required_spans.push_back({{0, 2}, std::nullopt});
  c.forbidden_spans.push_back({2, 5});
  c.pinned_senses.push_back({2, "cut"});
  auto back = constraints_from_json(constraints_to_json(c));
  EXPECT_EQ(constraints_to_json(back), constraints_to_json(c));
}

TEST(Http, EndpointsOverTheWire) {
  auto b = testsupport::bundle();
  LiveServer server(b);
  httplib::Client client("127.0.0.1", server.port());
  const std::string req = R"({"text":"The man saw the dog with the telescope.","kbest":2})";
  auto res = client.Post("/v1/translate", req, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, TranslationService(b).handle_translate(req).body);

  auto bad = client.Post("/v1/translate", "{nope", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  auto info = client.Get("/v1/resources/info");
  ASSERT_TRUE(info);
  EXPECT_EQ(info->status, 200);
  EXPECT_EQ(Json::parse(info->body)["fingerprint"], b->fingerprint());

  auto missing = client.Get("/v1/other");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
}

TEST(Http, ConcurrentRequests) {
  auto b = testsupport::bundle();
  LiveServer server(b);
  const std::string req = R"({"text":"The man and the dog and the cat ran. The man saw the dog with the bone."})";
  const auto expected = TranslationService(b).handle_translate(req).body;
  std::vector<std::future<std::string>> calls;
  for (int i = 0; i < 8; ++i) {
    calls.push_back(std::async(std::launch::async, [&] {
      httplib::Client client("127.0.0.1", server.port());
      auto res = client.Post("/v1/translate", req, "application/json");
      return res ? res->body : std::string();
    }));
  }
  for (auto& c : calls) EXPECT_EQ(c.get(), expected);
}

TEST(Parity, CliMatchesService) {
  auto b = testsupport::bundle();
  TranslationService s(b);
  for (const std::string text : {"The man saw the dog with the telescope.", "The dog ran. Man saw. Colorless ideas."}) {
    auto cli = capture(std::string(EJMT_CLI) + " translate" + cli_resources() + " --kbest 3 --text '" + text + "'");
    Json req;
    req["text"] = text;
    req["kbest"] = 3;
    auto http = s.handle_translate(req.dump());
    ASSERT_FALSE(cli.empty());
    EXPECT_EQ(Json::parse(cli), Json::parse(http.body)) << text;
  }
}
