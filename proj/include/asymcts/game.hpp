#ifndef ASYMCTS_GAME_HPP
#define ASYMCTS_GAME_HPP

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "asymcts/rng.hpp"

namespace asymcts {

enum class Player : std::uint8_t { kFirst = 0, kSecond = 1 };

constexpr Player opponent(Player p) {
    return p == Player::kFirst ? Player::kSecond : Player::kFirst;
}

enum class Outcome : std::uint8_t { kFirstWins, kSecondWins, kDraw };

// Unit-interval reward for `player`: win 1, loss 0, draw 0.5.
constexpr double reward(Outcome o, Player player) {
    if (o == Outcome::kDraw) return 0.5;
    bool won = (o == Outcome::kFirstWins) == (player == Player::kFirst);
    return won ? 1.0 : 0.0;
}

// Uniform two-player zero-sum game capability. Rule objects are stateless;
// states are plain values. `terminal_value` is in [0,1] from kFirst's
// perspective (board games map their Outcome; the synthetic tree domain has
// real-valued leaves). `step_random` applies one uniformly random
// playout-legal move in place; it is the playout fast path and must agree
// with `legal_moves` up to each game's documented playout restrictions.
template <typename G>
concept Game = requires(const G g, const typename G::State& s, typename G::State& ms,
                        const typename G::Move& m, Rng& rng) {
    typename G::State;
    typename G::Move;
    { G::kSingleAgent } -> std::convertible_to<bool>;
    { g.initial_state() } -> std::same_as<typename G::State>;
    { g.legal_moves(s) } -> std::same_as<std::vector<typename G::Move>>;
    { g.apply(s, m) } -> std::same_as<typename G::State>;
    { g.to_move(s) } -> std::same_as<Player>;
    { g.is_terminal(s) } -> std::same_as<bool>;
    { g.terminal_value(s) } -> std::same_as<double>;
    { g.max_game_length() } -> std::same_as<int>;
    { g.step_random(ms, rng) };
};

// Games that resolve to a discrete Outcome (the three board games).
template <typename G>
concept OutcomeGame = Game<G> && requires(const G g, const typename G::State& s) {
    { g.outcome(s) } -> std::same_as<Outcome>;
};

// Uniformly random completion of the game from `state`; returns the terminal
// value in [0,1] from kFirst's perspective. The state is copied once and
// mutated privately (undo-free copy-on-descend).
template <Game G, class R>
double random_playout(const G& game, typename G::State state, R& rng) {
    const int cap = game.max_game_length() + 1;
    for (int step = 0; step <= cap; ++step) {
        if (game.is_terminal(state)) return game.terminal_value(state);
        game.step_random(state, rng);
    }
    throw std::logic_error("random_playout: game exceeded max_game_length");
}

}  // namespace asymcts

#endif  // ASYMCTS_GAME_HPP
