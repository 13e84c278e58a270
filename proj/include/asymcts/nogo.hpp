#ifndef ASYMCTS_NOGO_HPP
#define ASYMCTS_NOGO_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymcts/board9.hpp"
#include "asymcts/game.hpp"

namespace asymcts {

struct NoGoState {
    ChainBoard board;
    std::uint16_t move_count = 0;
    bool terminal = false;  // player to move has no legal move
    Player to_move = Player::kFirst;

    Stone at(int p) const { return board.at(p); }
};

// 9x9 NoGo: placements that capture or commit suicide are illegal, there is
// no pass, and the first player without a legal move loses. No captures ever
// happen, so there is no ko of any kind and every game ends within 81 moves.
class NoGoGame {
public:
    using State = NoGoState;
    using Move = std::uint8_t;  // 0..80 board points
    static constexpr bool kSingleAgent = false;

    State initial_state() const { return State{}; }

    bool is_legal(const State& s, Move m) const {
        if (s.terminal || m >= kB9Points) return false;
        const auto a = s.board.analyze(m, stone_of(s.to_move));
        return a.playable && !a.captures_any();
    }

    std::vector<Move> legal_moves(const State& s) const {
        std::vector<Move> out;
        if (s.terminal) return out;
        out.reserve(s.board.empty_count());
        const Stone color = stone_of(s.to_move);
        for (int p = 0; p < kB9Points; ++p) {
            const auto a = s.board.analyze(p, color);
            if (a.playable && !a.captures_any()) out.push_back(Move(p));
        }
        return out;
    }

    State apply(const State& s, Move m) const {
        State n = s;
        const Stone color = stone_of(n.to_move);
        const auto a = n.board.analyze(m, color);
        n.board.place(m, color, a);
        ++n.move_count;
        n.to_move = opponent(n.to_move);
        n.terminal = !has_legal_move(n.board, stone_of(n.to_move));
        return n;
    }

    Player to_move(const State& s) const { return s.to_move; }
    bool is_terminal(const State& s) const { return s.terminal; }

    Outcome outcome(const State& s) const {
        if (!s.terminal) throw std::invalid_argument("nogo: outcome of non-terminal state");
        return s.to_move == Player::kFirst ? Outcome::kSecondWins : Outcome::kFirstWins;
    }

    double terminal_value(const State& s) const { return reward(outcome(s), Player::kFirst); }

    int max_game_length() const { return kB9Points; }

    void step_random(State& s, Rng& rng) const {
        const Stone color = stone_of(s.to_move);
        std::array<std::uint8_t, kB9Points> cand;
        int m = s.board.empty_count();
        for (int i = 0; i < m; ++i) cand[i] = s.board.empty_point(i);
        while (m > 0) {
            const std::size_t j = pick_index(rng, std::size_t(m));
            const int p = cand[j];
            cand[j] = cand[--m];
            const auto a = s.board.analyze(p, color);
            if (!a.playable || a.captures_any()) continue;
            s.board.place(p, color, a);
            ++s.move_count;
            s.to_move = opponent(s.to_move);
            s.terminal = !has_legal_move(s.board, stone_of(s.to_move));
            return;
        }
        throw std::logic_error("nogo: step_random called on terminal state");
    }

    static std::string move_name(Move m) { return point_name_9(m); }
    static Move parse_move(const std::string& s) { return Move(parse_point_9(s)); }
    static std::string diagram(const State& s) { return board_diagram_9(s.board); }

private:
    static bool has_legal_move(const ChainBoard& b, Stone color) {
        for (int i = 0; i < b.empty_count(); ++i) {
            const auto a = b.analyze(b.empty_point(i), color);
            if (a.playable && !a.captures_any()) return true;
        }
        return false;
    }
};

}  // namespace asymcts

#endif  // ASYMCTS_NOGO_HPP
