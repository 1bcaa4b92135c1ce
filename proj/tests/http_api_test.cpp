#include "euclid/http_api.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include <unistd.h>

namespace euclid {
namespace {

using nlohmann::json;

class HttpApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    SessionStore::Options options;
    options.seed = 99;
    store_ = std::make_unique<SessionStore>(options);
    static_dir_ = std::filesystem::temp_directory_path() /
                  ("euclid_http_api_test_" + std::to_string(::getpid()) + "_" +
                   ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(static_dir_);
    std::ofstream(static_dir_ / "index.html") << "<html>euclid</html>";

    ASSERT_TRUE(register_routes(server_, *store_, static_dir_.string()));
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
    std::filesystem::remove_all(static_dir_);
  }

  json post(const std::string& path, const json& body, int expected_status) {
    auto res = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(res);
    if (!res) return {};
    EXPECT_EQ(res->status, expected_status) << res->body;
    return json::parse(res->body);
  }

  json get(const std::string& path, int expected_status) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res);
    if (!res) return {};
    EXPECT_EQ(res->status, expected_status) << res->body;
    return json::parse(res->body);
  }

  std::unique_ptr<SessionStore> store_;
  std::filesystem::path static_dir_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpApiTest, CreateAndReadSession) {
  const json created = post("/sessions", {{"variant", "m"}, {"a", 3}, {"b", 7}, {"human_first", true}}, 201);
  EXPECT_EQ(created["position"], (json{{"a", 3}, {"b", 7}}));
  EXPECT_EQ(created["turn"], "human");
  EXPECT_EQ(created["variant"], "meuclid");
  EXPECT_EQ(created["legal_moves"].size(), 2u);
  EXPECT_EQ(created["analysis"]["grundy"], 2);

  const json state = get("/sessions/" + created["id"].get<std::string>(), 200);
  EXPECT_EQ(state, created);
}

TEST_F(HttpApiTest, EngineFirst) {
  const json s = post("/sessions", {{"variant", "m"}, {"a", 3}, {"b", 7}, {"human_first", false}}, 201);
  EXPECT_EQ(s["status"], "engine_won");
  EXPECT_EQ(s["history"][0]["move"]["result"], (json{{"a", 3}, {"b", 1}}));
}

TEST_F(HttpApiTest, ScriptedFlows) {
  const std::string lose = post("/sessions", {{"variant", "m"}, {"a", 3}, {"b", 7}}, 201)["id"];
  json s = post("/sessions/" + lose + "/moves", {{"target_entry", "larger"}, {"multiplier", 1}}, 200);
  EXPECT_EQ(s["status"], "engine_won");
  EXPECT_EQ(s["history"].size(), 2u);

  const std::string win = post("/sessions", {{"variant", "m"}, {"a", 3}, {"b", 7}}, 201)["id"];
  s = post("/sessions/" + win + "/moves", {{"multiplier", 2}}, 200);
  EXPECT_EQ(s["status"], "human_won");
  EXPECT_TRUE(s["legal_moves"].empty());
}

TEST_F(HttpApiTest, Errors) {
  EXPECT_TRUE(post("/sessions", {{"variant", "g"}, {"a", 4}, {"b", 4}}, 400).contains("error"));
  post("/sessions", {{"variant", "q"}, {"a", 3}, {"b", 7}}, 400);
  post("/sessions", {{"variant", "m"}, {"a", 3}}, 400);
  post("/sessions", {{"variant", "m"}, {"a", -3}, {"b", 7}}, 400);

  auto res = client_->Post("/sessions", "not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  const std::string id = post("/sessions", {{"variant", "m"}, {"a", 3}, {"b", 7}}, 201)["id"];
  post("/sessions/" + id + "/moves", {{"multiplier", 3}}, 400);
  post("/sessions/" + id + "/moves", {{"target_entry", "middle"}, {"multiplier", 1}}, 400);
  post("/sessions/" + id + "/moves", {{"multiplier", 2}}, 200);
  post("/sessions/" + id + "/moves", {{"multiplier", 1}}, 400);  // finished

  get("/sessions/0123abcd", 404);
  post("/sessions/0123abcd/moves", {{"multiplier", 1}}, 404);
}

TEST_F(HttpApiTest, Analyze) {
  json r = get("/analyze?variant=m&a=2&b=5", 200);
  EXPECT_EQ(r["value"], 2);
  EXPECT_EQ(r["cf"], (json{2, 2}));
  EXPECT_EQ(r["index_j"], 0);
  EXPECT_EQ(r["method"], "closed_form");
  EXPECT_EQ(r["winning_move"]["result"], (json{{"a", 2}, {"b", 1}}));
  EXPECT_FALSE(r.contains("oracle_value"));

  r = get("/analyze?variant=e&a=5&b=12&oracle=1", 200);
  EXPECT_EQ(r["value"], 2);
  EXPECT_EQ(r["index_i"], 2);
  EXPECT_EQ(r["oracle_value"], 2);

  r = get("/analyze?variant=m&a=3&b=6", 200);
  EXPECT_EQ(r["terminal"], true);
  EXPECT_EQ(r["value"], 0);
  EXPECT_TRUE(r["winning_move"].is_null());

  r = get("/analyze?variant=m&a=3&b=5000&oracle=1", 200);
  EXPECT_TRUE(r["oracle_value"].is_null());

  get("/analyze?variant=m&a=0&b=5", 400);
  get("/analyze?variant=m&a=x&b=5", 400);
  get("/analyze?a=1&b=5", 400);
}

TEST_F(HttpApiTest, LegalMoveRoundTrip) {
  // Every listed move is accepted, and its result is what the service reports.
  for (const char* variant : {"e", "g", "m"}) {
    for (auto [a, b] : {std::pair{5, 23}, {7, 12}, {4, 9}, {13, 30}}) {
      const json s = post("/sessions", {{"variant", variant}, {"a", a}, {"b", b}}, 201);
      for (const json& m : s["legal_moves"]) {
        const std::string id = post("/sessions", {{"variant", variant}, {"a", a}, {"b", b}}, 201)["id"];
        const json after = post("/sessions/" + id + "/moves", {{"target_entry", m["target_entry"]},
                                                               {"multiplier", m["multiplier"]}},
                                200);
        EXPECT_EQ(after["history"][0]["move"], m);
      }
    }
  }
}

TEST_F(HttpApiTest, ServesStaticAssets) {
  auto res = client_->Get("/index.html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "<html>euclid</html>");
}

}  // namespace
}  // namespace euclid
