#pragma once

#include <cstdint>
#include <string>

#include "fvkit/structure.hpp"

namespace fvkit {

enum class Player { Duplicator, Spoiler };

std::string player_name(Player p);

struct GameConfig {
  int rounds = 0;
  int tuple_size = 1;
};

inline constexpr std::uint64_t kDefaultGameCap = 50'000'000;

// Spoiler opens on the first board and the boards alternate every round.
// Tuples may repeat elements. Winning is judged on the final position only.
Player prefix_game_winner(const GameConfig& cfg, const Structure& a1, const Tuple& t1,
                          const Structure& a2, const Tuple& t2,
                          std::uint64_t max_positions = kDefaultGameCap);

// Duplicator must win the prefix game in both directions.
Player tree_prefix_game_winner(const GameConfig& cfg, const Structure& a1, const Tuple& t1,
                               const Structure& a2, const Tuple& t2,
                               std::uint64_t max_positions = kDefaultGameCap);

}  // namespace fvkit
