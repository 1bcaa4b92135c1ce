#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "euclid/oracle.hpp"
#include "euclid/types.hpp"

namespace euclid {

enum class Player { Human, Engine };
enum class SessionStatus { InProgress, HumanWon, EngineWon };

std::string_view to_string(Player p);
std::string_view to_string(SessionStatus s);

struct HistoryEntry {
  Player mover;
  Move move;
};

/// One human-vs-engine game. The status leaves in_progress exactly when the
/// position becomes terminal; whoever made the last move wins.
struct Session {
  std::string id;
  Variant variant = Variant::MEuclid;
  Position initial;
  Position position;
  Player turn = Player::Human;
  SessionStatus status = SessionStatus::InProgress;
  std::vector<HistoryEntry> history;
};

class SessionNotFound : public GameError {
 public:
  using GameError::GameError;
};

/// Engine policy: a move to a Grundy-0 option when one exists, otherwise the
/// canonical first legal move.
Move engine_move(Variant variant, const Position& p);

/// Position reached by replaying the history from the initial position.
/// Throws IllegalMove if any recorded move does not apply.
Position replay(const Session& s);

/// {id, variant, initial, position, turn, status, history}
nlohmann::json to_json(const Session& s);

/// Session record plus "legal_moves" and "analysis" {grundy, winning_move_exists}.
nlohmann::json state_json(const Session& s);

/// In-memory sessions with a capacity cap and least-recently-used eviction.
/// Distinct sessions are independent; mutations of one session are
/// serialized, reads share.
class SessionStore {
 public:
  struct Options {
    std::size_t capacity = 1024;
    /// Largest starting entry accepted; every position of a session lists
    /// its legal moves, and there are floor(b/a) of them.
    Entry max_entry = kDefaultOracleBound;
    std::uint64_t seed = 0;  // 0 draws from std::random_device
  };

  SessionStore();
  explicit SessionStore(Options options);

  /// Throws InvalidPosition for invalid, terminal, or oversized starts.
  Session create(Variant variant, const Position& start, bool human_first);

  /// Snapshot. Throws SessionNotFound.
  Session get(const std::string& id);

  /// Applies the human move and, if the game continues, the engine reply.
  /// Throws SessionNotFound, or IllegalMove for finished sessions, wrong-turn
  /// submissions, and moves that are not legal.
  Session play_human_move(const std::string& id, EntryRole target, Entry multiplier);

  std::size_t size() const;
  std::size_t capacity() const noexcept { return options_.capacity; }

 private:
  struct Slot {
    std::shared_mutex mutex;
    Session session;
  };

  std::shared_ptr<Slot> find(const std::string& id);
  std::string next_id();

  Options options_;
  mutable std::mutex mutex_;  // guards slots_, lru_, and the id generator
  std::unordered_map<std::string, std::pair<std::shared_ptr<Slot>, std::list<std::string>::iterator>> slots_;
  std::list<std::string> lru_;  // most recent at front
  std::uint64_t rng_state_;
};

}  // namespace euclid
