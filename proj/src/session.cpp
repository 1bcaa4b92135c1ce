#include "euclid/session.hpp"

#include <random>

#include "euclid/grundy.hpp"
#include "euclid/rules.hpp"
#include "euclid/wire.hpp"

namespace euclid {

namespace {

// splitmix64; ids only need to be unique and hard to guess by accident.
std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void play(Session& s, Player mover, const Move& m) {
  s.position = apply_move(s.variant, s.position, m);
  s.history.push_back({mover, m});
  if (is_terminal(s.variant, s.position)) {
    s.status = mover == Player::Human ? SessionStatus::HumanWon : SessionStatus::EngineWon;
  }
  s.turn = mover == Player::Human ? Player::Engine : Player::Human;
}

void engine_turn(Session& s) {
  if (s.status == SessionStatus::InProgress && s.turn == Player::Engine) {
    play(s, Player::Engine, engine_move(s.variant, s.position));
  }
}

}  // namespace

std::string_view to_string(Player p) { return p == Player::Human ? "human" : "engine"; }

std::string_view to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::InProgress: return "in_progress";
    case SessionStatus::HumanWon: return "human_won";
    case SessionStatus::EngineWon: return "engine_won";
  }
  return "unknown";
}

Move engine_move(Variant variant, const Position& p) {
  if (auto m = winning_move(variant, p)) return *m;
  return *find_move(variant, p, EntryRole::Larger, 1);
}

Position replay(const Session& s) {
  Position p = s.initial.canonical();
  for (const HistoryEntry& h : s.history) p = apply_move(s.variant, p, h.move);
  return p;
}

nlohmann::json to_json(const Session& s) {
  nlohmann::json history = nlohmann::json::array();
  for (const HistoryEntry& h : s.history) {
    history.push_back({{"mover", to_string(h.mover)}, {"move", to_json(h.move)}});
  }
  return {{"id", s.id},
          {"variant", to_string(s.variant)},
          {"initial", to_json(s.initial)},
          {"position", to_json(s.position)},
          {"turn", to_string(s.turn)},
          {"status", to_string(s.status)},
          {"history", std::move(history)}};
}

nlohmann::json state_json(const Session& s) {
  nlohmann::json out = to_json(s);
  nlohmann::json moves = nlohmann::json::array();
  for (const Move& m : legal_moves(s.variant, s.position)) moves.push_back(to_json(m));
  out["legal_moves"] = std::move(moves);
  const bool terminal = is_terminal(s.variant, s.position);
  const GrundyValue g = grundy_value(s.variant, s.position);
  out["analysis"] = {{"grundy", g}, {"winning_move_exists", !terminal && g > 0}};
  return out;
}

SessionStore::SessionStore() : SessionStore(Options{}) {}

SessionStore::SessionStore(Options options) : options_(options) {
  if (options_.capacity == 0) throw std::invalid_argument("session capacity must be positive");
  rng_state_ = options_.seed != 0 ? options_.seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
}

std::string SessionStore::next_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  for (int part = 0; part < 2; ++part) {
    std::uint64_t r = next_random(rng_state_);
    for (int i = 0; i < 16; ++i, r >>= 4) id += kHex[r & 0xF];
  }
  return id;
}

Session SessionStore::create(Variant variant, const Position& start, bool human_first) {
  validate(variant, start);
  if (start.larger() > options_.max_entry) {
    throw InvalidPosition("starting entries must not exceed " + std::to_string(options_.max_entry));
  }
  if (is_terminal(variant, start)) {
    throw InvalidPosition("starting position " + to_string(start) + " is terminal");
  }

  auto slot = std::make_shared<Slot>();
  Session& s = slot->session;
  s.variant = variant;
  s.initial = start;
  s.position = start.canonical();
  s.turn = human_first ? Player::Human : Player::Engine;
  engine_turn(s);

  std::lock_guard lock(mutex_);
  do {
    s.id = next_id();
  } while (slots_.contains(s.id));
  lru_.push_front(s.id);
  slots_.emplace(s.id, std::make_pair(slot, lru_.begin()));
  while (slots_.size() > options_.capacity) {
    slots_.erase(lru_.back());
    lru_.pop_back();
  }
  return s;
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = slots_.find(id);
  if (it == slots_.end()) throw SessionNotFound("unknown session " + id);
  lru_.splice(lru_.begin(), lru_, it->second.second);
  return it->second.first;
}

Session SessionStore::get(const std::string& id) {
  auto slot = find(id);
  std::shared_lock lock(slot->mutex);
  return slot->session;
}

Session SessionStore::play_human_move(const std::string& id, EntryRole target, Entry multiplier) {
  auto slot = find(id);
  std::unique_lock lock(slot->mutex);
  Session& s = slot->session;
  if (s.status != SessionStatus::InProgress) throw IllegalMove("session " + id + " is finished");
  if (s.turn != Player::Human) throw IllegalMove("it is not the human's turn");

  const auto m = find_move(s.variant, s.position, target, multiplier);
  if (!m) {
    throw IllegalMove("k=" + std::to_string(multiplier) + " on the " + std::string(to_string(target)) +
                      " entry is not legal from " + to_string(s.position));
  }
  play(s, Player::Human, *m);
  engine_turn(s);
  return s;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return slots_.size();
}

}  // namespace euclid
