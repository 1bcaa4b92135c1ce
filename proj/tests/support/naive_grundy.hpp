#pragma once

// Test-only brute force written straight from the game rules. It shares no
// code with the library (no legal_moves, no mex, no memo layout) so it can
// cross-check both the library oracle and the closed forms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

namespace euclid::testing {

enum class Game { Euclid, Grossman, MEuclid };

class NaiveGrundy {
 public:
  explicit NaiveGrundy(Game game) : game_(game) {}

  std::uint64_t operator()(std::uint64_t x, std::uint64_t y) {
    const auto key = std::minmax(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::uint64_t lo = key.first;
    const std::uint64_t hi = key.second;

    bool ends = false;
    switch (game_) {
      case Game::Euclid: ends = lo == 0; break;
      case Game::Grossman: ends = lo == hi; break;
      case Game::MEuclid: ends = hi % lo == 0; break;
    }
    std::uint64_t g = 0;
    if (!ends) {
      std::set<std::uint64_t> seen;
      // Subtract lo repeatedly from hi; Euclid may reach zero.
      for (std::uint64_t rest = hi - lo;; rest -= lo) {
        if (rest == 0 && game_ != Game::Euclid) break;
        seen.insert((*this)(lo, rest));
        if (rest < lo) break;
      }
      while (seen.contains(g)) ++g;
    }
    memo_.emplace(key, g);
    return g;
  }

 private:
  Game game_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> memo_;
};

}  // namespace euclid::testing
