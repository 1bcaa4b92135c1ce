#include "euclid/http_api.hpp"

#include <httplib.h>

#include <charconv>

#include "euclid/rules.hpp"
#include "euclid/wire.hpp"

namespace euclid {

namespace {

constexpr const char* kJson = "application/json";

class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void send(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send(res, status, {{"error", message}});
}

// Maps the library's exceptions onto HTTP statuses.
template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
  try {
    handler();
  } catch (const SessionNotFound& e) {
    send_error(res, 404, e.what());
  } catch (const GameError& e) {
    send_error(res, 400, e.what());
  } catch (const BadRequest& e) {
    send_error(res, 400, e.what());
  } catch (const nlohmann::json::exception& e) {
    send_error(res, 400, std::string("malformed request body: ") + e.what());
  }
}

Variant variant_field(const std::string& text) {
  auto v = parse_variant(text);
  if (!v) throw BadRequest("unknown variant '" + text + "'");
  return *v;
}

Entry entry_param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) throw BadRequest(std::string("missing query parameter '") + name + "'");
  const std::string s = req.get_param_value(name);
  Entry value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw BadRequest(std::string("query parameter '") + name + "' must be a nonnegative integer");
  }
  return value;
}

nlohmann::json parse_body(const httplib::Request& req) {
  auto body = nlohmann::json::parse(req.body);
  if (!body.is_object()) throw BadRequest("request body must be a JSON object");
  return body;
}

}  // namespace

bool register_routes(httplib::Server& server, SessionStore& store, const std::optional<std::string>& static_dir) {
  server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto body = parse_body(req);
      const Variant variant = variant_field(body.at("variant").get<std::string>());
      const Position start{body.at("a").get<Entry>(), body.at("b").get<Entry>()};
      const bool human_first = body.value("human_first", true);
      send(res, 201, state_json(store.create(variant, start, human_first)));
    });
  });

  server.Get(R"(/sessions/([0-9a-f]+))", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send(res, 200, state_json(store.get(req.matches[1]))); });
  });

  server.Post(R"(/sessions/([0-9a-f]+)/moves)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto body = parse_body(req);
      const std::string role_text = body.value("target_entry", std::string("larger"));
      const auto role = parse_entry_role(role_text);
      if (!role) throw BadRequest("target_entry must be 'larger' or 'smaller'");
      const Entry multiplier = body.at("multiplier").get<Entry>();
      send(res, 200, state_json(store.play_human_move(req.matches[1], *role, multiplier)));
    });
  });

  server.Get("/analyze", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (!req.has_param("variant")) throw BadRequest("missing query parameter 'variant'");
      const Variant variant = variant_field(req.get_param_value("variant"));
      const Position p{entry_param(req, "a"), entry_param(req, "b")};
      const std::string oracle = req.has_param("oracle") ? req.get_param_value("oracle") : "";
      const bool with_oracle = oracle == "1" || oracle == "true";
      send(res, 200,
           analysis_json(variant, p, with_oracle ? std::optional<Entry>(kAnalyzeOracleBound) : std::nullopt));
    });
  });

  return !static_dir || server.set_mount_point("/", *static_dir);
}

bool serve(const std::string& host, int port, const std::optional<std::string>& static_dir,
           SessionStore::Options options) {
  SessionStore store(options);
  httplib::Server server;
  if (!register_routes(server, store, static_dir)) return false;
  return server.listen(host, port);
}

}  // namespace euclid
