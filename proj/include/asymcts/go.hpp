#ifndef ASYMCTS_GO_HPP
#define ASYMCTS_GO_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymcts/board9.hpp"
#include "asymcts/game.hpp"

namespace asymcts {

// Area score (stones + territory surrounded exclusively by one color) for
// anything exposing at(p) -> Stone over the 81 points. Returns {black, white}.
template <class BoardLike>
std::pair<int, int> go_area_score(const BoardLike& b) {
    int black = 0, white = 0;
    std::array<std::uint8_t, kB9Points> region{};  // 0 unseen, 1 visited
    for (int p = 0; p < kB9Points; ++p) {
        const Stone s = b.at(p);
        if (s == Stone::kBlack) ++black;
        if (s == Stone::kWhite) ++white;
    }
    for (int p = 0; p < kB9Points; ++p) {
        if (b.at(p) != Stone::kEmpty || region[p]) continue;
        // flood fill this empty region, noting which colors border it
        std::array<std::uint8_t, kB9Points> stack{};
        int top = 0, size = 0;
        bool touches_black = false, touches_white = false;
        stack[top++] = std::uint8_t(p);
        region[p] = 1;
        while (top > 0) {
            const int q = stack[--top];
            ++size;
            const auto& nb = detail::kNeighbors[q];
            for (int i = 0; i < nb.count; ++i) {
                const int w = nb.at[i];
                const Stone t = b.at(w);
                if (t == Stone::kBlack) touches_black = true;
                else if (t == Stone::kWhite) touches_white = true;
                else if (!region[w]) {
                    region[w] = 1;
                    stack[top++] = std::uint8_t(w);
                }
            }
        }
        if (touches_black && !touches_white) black += size;
        if (touches_white && !touches_black) white += size;
    }
    return {black, white};
}

struct GoState {
    ChainBoard board;
    PositionSet history;  // every prior post-move position hash, incl. initial
    std::uint16_t move_count = 0;
    std::uint8_t consecutive_passes = 0;
    Player to_move = Player::kFirst;

    Stone at(int p) const { return board.at(p); }
};

// 9x9 Go, Tromp-Taylor style: area scoring, komi 6.5, suicide illegal,
// positional superko, game over after two consecutive passes or 243 moves
// (the cap triggers immediate area scoring). Playouts additionally skip
// single-point true eyes of the mover (tree-level move generation does not)
// and pass only when no other playable point remains.
class GoGame {
public:
    using State = GoState;
    using Move = std::uint8_t;  // 0..80 board points, kB9Pass
    static constexpr bool kSingleAgent = false;
    static constexpr Move kPass = kB9Pass;
    static constexpr int kMoveCap = 3 * kB9Points;
    static constexpr double kKomi = 6.5;

    GoGame() = default;
    explicit GoGame(bool playout_eye_filter) : eye_filter_(playout_eye_filter) {}

    State initial_state() const {
        State s;
        s.history.insert(s.board.hash());
        return s;
    }

    bool is_legal(const State& s, Move m) const {
        if (is_terminal(s)) return false;
        if (m == kPass) return true;
        if (m >= kB9Points) return false;
        const Stone color = stone_of(s.to_move);
        const auto a = s.board.analyze(m, color);
        if (!a.playable) return false;
        return !s.history.contains(s.board.hash_after(m, color, a));
    }

    std::vector<Move> legal_moves(const State& s) const {
        std::vector<Move> out;
        out.reserve(s.board.empty_count() + 1);
        const Stone color = stone_of(s.to_move);
        for (int p = 0; p < kB9Points; ++p) {
            const auto a = s.board.analyze(p, color);
            if (!a.playable) continue;
            if (s.history.contains(s.board.hash_after(p, color, a))) continue;
            out.push_back(Move(p));
        }
        out.push_back(kPass);
        return out;
    }

    State apply(const State& s, Move m) const {
        State n = s;
        apply_inplace(n, m);
        return n;
    }

    Player to_move(const State& s) const { return s.to_move; }

    bool is_terminal(const State& s) const {
        return s.consecutive_passes >= 2 || s.move_count >= kMoveCap;
    }

    Outcome outcome(const State& s) const {
        if (!is_terminal(s)) throw std::invalid_argument("go: outcome of non-terminal state");
        const auto [black, white] = go_area_score(s.board);
        // black - white > 6.5, in integers; komi makes draws impossible
        return 2 * (black - white) > 13 ? Outcome::kFirstWins : Outcome::kSecondWins;
    }

    double terminal_value(const State& s) const { return reward(outcome(s), Player::kFirst); }

    int max_game_length() const { return kMoveCap; }

    void step_random(State& s, Rng& rng) const {
        const Stone color = stone_of(s.to_move);
        std::array<std::uint8_t, kB9Points> cand;
        int m = s.board.empty_count();
        for (int i = 0; i < m; ++i) cand[i] = s.board.empty_point(i);
        while (m > 0) {
            const std::size_t j = pick_index(rng, std::size_t(m));
            const int p = cand[j];
            cand[j] = cand[--m];
            if (eye_filter_ && s.board.is_single_point_eye(p, color)) continue;
            const auto a = s.board.analyze(p, color);
            if (!a.playable) continue;
            if (s.history.contains(s.board.hash_after(p, color, a))) continue;
            place(s, Move(p), a);
            return;
        }
        apply_inplace(s, kPass);
    }

    // Playout-move restriction (true = playable in playouts). Assumes the
    // candidate is legal at tree level.
    bool playout_move_filter(const State& s, Move m) const {
        if (m == kPass) return true;
        return !s.board.is_single_point_eye(m, stone_of(s.to_move));
    }

    static std::string move_name(Move m) { return point_name_9(m); }
    static Move parse_move(const std::string& s) { return Move(parse_point_9(s)); }
    static std::string diagram(const State& s) { return board_diagram_9(s.board); }

private:
    void apply_inplace(State& s, Move m) const {
        if (m == kPass) {
            ++s.consecutive_passes;
        } else {
            const Stone color = stone_of(s.to_move);
            const auto a = s.board.analyze(m, color);
            place(s, m, a);
            return;
        }
        ++s.move_count;
        s.to_move = opponent(s.to_move);
        s.history.insert(s.board.hash());
    }

    void place(State& s, Move m, const ChainBoard::Analysis& a) const {
        s.board.place(m, stone_of(s.to_move), a);
        s.consecutive_passes = 0;
        ++s.move_count;
        s.to_move = opponent(s.to_move);
        s.history.insert(s.board.hash());
    }

    bool eye_filter_ = true;
};

}  // namespace asymcts

#endif  // ASYMCTS_GO_HPP
