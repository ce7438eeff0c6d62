#include "doctest.h"

#include "fvkit/efgame.hpp"
#include "fvkit/errors.hpp"
#include "helpers.hpp"

using namespace fvkit;

TEST_CASE("linear orders of sizes 5 and 4") {
  Structure l5 = testutil::linear_order(5), l4 = testutil::linear_order(4);
  CHECK(prefix_game_winner({3, 1}, l5, {}, l4, {}) == Player::Spoiler);
  CHECK(tree_prefix_game_winner({3, 1}, l5, {}, l4, {}) == Player::Spoiler);
  CHECK(tree_prefix_game_winner({3, 1}, l4, {}, l5, {}) == Player::Spoiler);
  CHECK(prefix_game_winner({2, 1}, l5, {}, l4, {}) == Player::Duplicator);
}

TEST_CASE("identical structures favour the duplicator") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Structure a = random_structure({{"E", 2}}, 3, seed);
    for (int n = 0; n <= 2; ++n) {
      CHECK(prefix_game_winner({n, 1}, a, {}, a, {}) == Player::Duplicator);
      CHECK(tree_prefix_game_winner({n, 2}, a, {"0"}, a, {"0"}) == Player::Duplicator);
    }
  }
}

TEST_CASE("one unary difference") {
  Structure u = testutil::make({{"U", 1}}, {"a"}, {{"U", {{"a"}}}});
  Structure w = testutil::make({{"U", 1}}, {"b"});
  CHECK(prefix_game_winner({1, 1}, u, {}, w, {}) == Player::Spoiler);
  CHECK(prefix_game_winner({0, 1}, u, {}, w, {}) == Player::Duplicator);
  CHECK(prefix_game_winner({0, 1}, u, {"a"}, w, {"b"}) == Player::Spoiler);
}

TEST_CASE("prefix game is directional") {
  // The spoiler opens on the first board: a U-element there can be matched only if the second has one.
  Structure both = testutil::make({{"U", 1}}, {"a", "b"}, {{"U", {{"a"}}}});
  Structure only_u = testutil::make({{"U", 1}}, {"c"}, {{"U", {{"c"}}}});
  CHECK(prefix_game_winner({1, 1}, only_u, {}, both, {}) == Player::Duplicator);
  CHECK(prefix_game_winner({1, 1}, both, {}, only_u, {}) == Player::Spoiler);
  CHECK(tree_prefix_game_winner({1, 1}, only_u, {}, both, {}) == Player::Spoiler);
}

TEST_CASE("swap symmetry and monotonicity") {
  const Vocabulary v{{"E", 2}};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Structure a = random_structure(v, 1 + seed % 3, seed);
    Structure b = random_structure(v, 1 + seed / 3 % 3, seed + 99);
    for (int k = 1; k <= 2; ++k) {
      Player prev = Player::Duplicator;
      for (int n = 0; n <= 3; ++n) {
        Player w = tree_prefix_game_winner({n, k}, a, {}, b, {});
        CHECK(w == tree_prefix_game_winner({n, k}, b, {}, a, {}));
        if (prev == Player::Spoiler) CHECK(w == Player::Spoiler);
        prev = w;
        Player p = prefix_game_winner({n, k}, a, {}, b, {});
        if (w == Player::Duplicator) CHECK(p == Player::Duplicator);
      }
    }
  }
}

TEST_CASE("game input errors and caps") {
  Structure l5 = testutil::linear_order(5);
  CHECK_THROWS_AS(prefix_game_winner({1, 1}, l5, {"9"}, l5, {"0"}), InputError);
  CHECK_THROWS_AS(prefix_game_winner({1, 1}, l5, {"0"}, l5, {}), InputError);
  CHECK_THROWS_AS(prefix_game_winner({1, 0}, l5, {}, l5, {}), InputError);
  CHECK_THROWS_AS(prefix_game_winner({1, 1}, l5, {}, testutil::loop(), {}), InputError);
  CHECK_THROWS_AS(prefix_game_winner({4, 2}, l5, {}, testutil::linear_order(4), {}, 10), CapExceeded);
  CHECK(player_name(Player::Spoiler) == "spoiler");
  CHECK(player_name(Player::Duplicator) == "duplicator");
}
