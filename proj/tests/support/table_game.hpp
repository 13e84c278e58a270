#ifndef ASYMCTS_TESTS_TABLE_GAME_HPP
#define ASYMCTS_TESTS_TABLE_GAME_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "asymcts/game.hpp"

namespace asymcts::testsupport {

// Explicit finite two-player tree for trajectory and conservation tests:
// node 0 is the root, players alternate by depth, leaves carry first-player
// values in [0,1].
class TableGame {
public:
    struct NodeDef {
        std::vector<int> children;
        double value = 0.0;  // used when children is empty
    };
    using State = int;
    using Move = std::uint8_t;  // child ordinal
    static constexpr bool kSingleAgent = false;

    explicit TableGame(std::vector<NodeDef> defs) : defs_(std::move(defs)) {
        depth_.assign(defs_.size(), -1);
        depth_[0] = 0;
        std::vector<int> queue{0};
        max_depth_ = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const int n = queue[i];
            for (int c : defs_[std::size_t(n)].children) {
                depth_[std::size_t(c)] = depth_[std::size_t(n)] + 1;
                max_depth_ = std::max(max_depth_, depth_[std::size_t(c)]);
                queue.push_back(c);
            }
        }
    }

    State initial_state() const { return 0; }

    std::vector<Move> legal_moves(const State& s) const {
        std::vector<Move> out;
        for (std::size_t i = 0; i < defs_[std::size_t(s)].children.size(); ++i)
            out.push_back(Move(i));
        return out;
    }

    State apply(const State& s, Move m) const { return defs_[std::size_t(s)].children[m]; }

    Player to_move(const State& s) const {
        return depth_[std::size_t(s)] % 2 == 0 ? Player::kFirst : Player::kSecond;
    }

    bool is_terminal(const State& s) const { return defs_[std::size_t(s)].children.empty(); }
    double terminal_value(const State& s) const { return defs_[std::size_t(s)].value; }
    int max_game_length() const { return max_depth_; }

    void step_random(State& s, Rng& rng) const {
        const auto& ch = defs_[std::size_t(s)].children;
        s = ch[pick_index(rng, ch.size())];
    }

private:
    std::vector<NodeDef> defs_;
    std::vector<int> depth_;
    int max_depth_ = 0;
};

// A fixed 3-ply tree with distinct leaf values: root -> 3 children, each with
// 2 children, each of those with 2 leaves.
inline TableGame make_three_ply_tree() {
    std::vector<TableGame::NodeDef> d;
    d.resize(22);
    d[0].children = {1, 2, 3};
    d[1].children = {4, 5};
    d[2].children = {6, 7};
    d[3].children = {8, 9};
    const double leaf_values[12] = {0.91, 0.13, 0.55, 0.42, 0.77, 0.30,
                                    0.68, 0.05, 0.24, 0.86, 0.49, 0.61};
    int next = 10;
    for (int mid = 4; mid <= 9; ++mid) {
        d[std::size_t(mid)].children = {next, next + 1};
        next += 2;
    }
    for (int i = 0; i < 12; ++i) d[std::size_t(10 + i)].value = leaf_values[i];
    return TableGame(std::move(d));
}

// Same shape but with a single root move (degenerate root).
inline TableGame make_degenerate_root_tree() {
    std::vector<TableGame::NodeDef> d;
    d.resize(8);
    d[0].children = {1};
    d[1].children = {2, 3};
    d[2].children = {4, 5};
    d[3].children = {6, 7};
    d[4].value = 0.81;
    d[5].value = 0.27;
    d[6].value = 0.66;
    d[7].value = 0.12;
    return TableGame(std::move(d));
}

}  // namespace asymcts::testsupport

#endif
