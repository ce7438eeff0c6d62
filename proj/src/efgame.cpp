#include "fvkit/efgame.hpp"

#include <unordered_map>
#include <vector>

#include "fvkit/errors.hpp"

namespace fvkit {

std::string player_name(Player p) { return p == Player::Duplicator ? "duplicator" : "spoiler"; }

namespace {

class PrefixGame {
 public:
  PrefixGame(const Structure& a1, const Structure& a2, int k, std::uint64_t cap)
      : boards_{&a1, &a2}, k_(k), cap_(cap) {
    for (int b = 0; b < 2; ++b) moves_[b] = all_index_tuples(boards_[b]->size(), k);
  }

  // spoiler_board is the board Spoiler picks from this round; ts is the tuple
  // on that board, td the tuple on the other one.
  bool duplicator_wins(int n, int spoiler_board, std::vector<int>& ts, std::vector<int>& td) {
    const int dup_board = 1 - spoiler_board;
    if (n == 0) {
      return spoiler_board == 0
                 ? is_partial_isomorphism(*boards_[0], ts, *boards_[1], td)
                 : is_partial_isomorphism(*boards_[0], td, *boards_[1], ts);
    }
    std::string key = make_key(n, spoiler_board, ts, td);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++positions_ > cap_) throw CapExceeded("game position cap exceeded");

    bool result = true;
    for (const auto& pick : moves_[spoiler_board]) {
      ts.insert(ts.end(), pick.begin(), pick.end());
      bool answered = false;
      for (const auto& reply : moves_[dup_board]) {
        td.insert(td.end(), reply.begin(), reply.end());
        // Next round Spoiler moves on the board Duplicator just answered on.
        answered = duplicator_wins(n - 1, dup_board, td, ts);
        td.resize(td.size() - k_);
        if (answered) break;
      }
      ts.resize(ts.size() - k_);
      if (!answered) {
        result = false;
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static std::string make_key(int n, int board, const std::vector<int>& a,
                              const std::vector<int>& b) {
    std::string key;
    key.reserve(8 + 4 * (a.size() + b.size()));
    key.push_back(static_cast<char>(n));
    key.push_back(static_cast<char>(board));
    for (int v : a) key.append(reinterpret_cast<const char*>(&v), sizeof v);
    key.push_back('|');
    for (int v : b) key.append(reinterpret_cast<const char*>(&v), sizeof v);
    return key;
  }

  const Structure* boards_[2];
  std::vector<std::vector<int>> moves_[2];
  int k_;
  std::uint64_t cap_;
  std::uint64_t positions_ = 0;
  std::unordered_map<std::string, bool> memo_;
};

std::vector<int> indices(const Structure& s, const Tuple& t) {
  std::vector<int> out;
  for (const auto& e : t) out.push_back(s.index_of(e));
  return out;
}

void check_game(const GameConfig& cfg, const Structure& a1, const Tuple& t1, const Structure& a2,
                const Tuple& t2) {
  if (cfg.rounds < 0) throw InputError("rounds must be non-negative");
  if (cfg.rounds > 0 && cfg.tuple_size < 1) throw InputError("tuple size must be at least 1");
  if (t1.size() != t2.size()) throw InputError("tuple lengths differ");
  if (a1.vocab() != a2.vocab()) throw InputError("structures have different vocabularies");
}

}  // namespace

Player prefix_game_winner(const GameConfig& cfg, const Structure& a1, const Tuple& t1,
                          const Structure& a2, const Tuple& t2, std::uint64_t max_positions) {
  check_game(cfg, a1, t1, a2, t2);
  std::vector<int> i1 = indices(a1, t1), i2 = indices(a2, t2);
  PrefixGame g(a1, a2, cfg.tuple_size, max_positions);
  return g.duplicator_wins(cfg.rounds, 0, i1, i2) ? Player::Duplicator : Player::Spoiler;
}

Player tree_prefix_game_winner(const GameConfig& cfg, const Structure& a1, const Tuple& t1,
                               const Structure& a2, const Tuple& t2, std::uint64_t max_positions) {
  if (prefix_game_winner(cfg, a1, t1, a2, t2, max_positions) == Player::Spoiler)
    return Player::Spoiler;
  return prefix_game_winner(cfg, a2, t2, a1, t1, max_positions);
}

}  // namespace fvkit
