#ifndef ASYMCTS_BIAS_TREE_HPP
#define ASYMCTS_BIAS_TREE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymcts/game.hpp"

namespace asymcts {

enum class BiasAction : std::uint8_t { kLeft = 0, kRight = 1 };

// Value of the leaf reached by taking `action` at a depth-d node of the
// depth-D lower-bound chain: LEFT branches off to a leaf worth (D-d-1)/D
// (so 0 at the bottom), RIGHT is a leaf only at depth D-1, worth 1.
inline double bias_tree_leaf_value(int depth_total, int depth, BiasAction action) {
    if (depth < 0 || depth >= depth_total)
        throw std::invalid_argument("bias_tree_leaf_value: depth out of range");
    if (action == BiasAction::kLeft)
        return double(depth_total - depth - 1) / double(depth_total);
    if (depth != depth_total - 1)
        throw std::invalid_argument("bias_tree_leaf_value: RIGHT is internal above depth D-1");
    return 1.0;
}

// Single-agent binary chain with biased left-branch rewards; the rightmost
// path is uniquely optimal (root value 1). Every decision belongs to the
// same player, so MCTS treats all nodes as max nodes.
class BiasTree {
public:
    using Move = BiasAction;
    struct State {
        std::uint16_t depth = 0;
        bool terminal = false;
        double value = 0.0;  // defined when terminal
    };
    static constexpr bool kSingleAgent = true;

    explicit BiasTree(int depth) : depth_(depth) {
        if (depth < 1) throw std::invalid_argument("BiasTree: depth must be >= 1");
    }

    int depth() const { return depth_; }

    State initial_state() const { return State{}; }

    std::vector<Move> legal_moves(const State& s) const {
        if (s.terminal) return {};
        return {BiasAction::kLeft, BiasAction::kRight};
    }

    State apply(const State& s, Move m) const {
        State n;
        if (m == BiasAction::kLeft || s.depth == depth_ - 1) {
            n.depth = s.depth + 1;
            n.terminal = true;
            n.value = bias_tree_leaf_value(depth_, s.depth, m);
        } else {
            n.depth = s.depth + 1;
        }
        return n;
    }

    Player to_move(const State&) const { return Player::kFirst; }
    bool is_terminal(const State& s) const { return s.terminal; }
    double terminal_value(const State& s) const { return s.value; }
    int max_game_length() const { return depth_; }

    void step_random(State& s, Rng& rng) const {
        Move m = pick_index(rng, 2) == 0 ? BiasAction::kLeft : BiasAction::kRight;
        s = apply(s, m);
    }

    static std::string move_name(Move m) { return m == BiasAction::kLeft ? "left" : "right"; }

private:
    int depth_;
};

}  // namespace asymcts

#endif  // ASYMCTS_BIAS_TREE_HPP
