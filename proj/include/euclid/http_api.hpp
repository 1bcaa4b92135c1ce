#pragma once

#include <optional>
#include <string>

#include "euclid/session.hpp"

namespace httplib {
class Server;
}

namespace euclid {

/// Largest entry for which /analyze?oracle=1 runs the brute-force oracle.
inline constexpr Entry kAnalyzeOracleBound = 1000;

/// Routes:
///   POST /sessions               {"variant","a","b","human_first"} -> 201 state
///   GET  /sessions/{id}          -> state
///   POST /sessions/{id}/moves    {"target_entry","multiplier"} -> state
///   GET  /analyze?variant&a&b[&oracle=1]
/// Errors are {"error": message} with 400 (invalid input or illegal move) or
/// 404 (unknown session). `static_dir`, when set, is mounted at "/"; returns
/// false when it does not exist.
bool register_routes(httplib::Server& server, SessionStore& store,
                     const std::optional<std::string>& static_dir = std::nullopt);

/// Blocks serving on host:port. Returns false if the socket cannot be bound
/// or the static directory does not exist.
bool serve(const std::string& host, int port, const std::optional<std::string>& static_dir,
           SessionStore::Options options = {});

}  // namespace euclid
