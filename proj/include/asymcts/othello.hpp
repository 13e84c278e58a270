#ifndef ASYMCTS_OTHELLO_HPP
#define ASYMCTS_OTHELLO_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymcts/game.hpp"

namespace asymcts {

namespace detail {

// bit index = y*8 + x, x = file a..h, y = rank 1..8 (bottom-up)
inline constexpr std::uint64_t kFileA = 0x0101010101010101ULL;
inline constexpr std::uint64_t kFileH = 0x8080808080808080ULL;

constexpr std::uint64_t oth_shift(std::uint64_t b, int dir) {
    switch (dir) {
        case 0: return (b << 1) & ~kFileA;  // east
        case 1: return (b >> 1) & ~kFileH;  // west
        case 2: return b << 8;              // north
        case 3: return b >> 8;              // south
        case 4: return (b << 9) & ~kFileA;  // north-east
        case 5: return (b << 7) & ~kFileH;  // north-west
        case 6: return (b >> 7) & ~kFileA;  // south-east
        default: return (b >> 9) & ~kFileH; // south-west
    }
}

constexpr std::uint64_t oth_legal_mask(std::uint64_t own, std::uint64_t opp) {
    const std::uint64_t empty = ~(own | opp);
    std::uint64_t moves = 0;
    for (int d = 0; d < 8; ++d) {
        std::uint64_t t = oth_shift(own, d) & opp;
        for (int k = 0; k < 5; ++k) t |= oth_shift(t, d) & opp;
        moves |= oth_shift(t, d) & empty;
    }
    return moves;
}

constexpr std::uint64_t oth_flips(std::uint64_t own, std::uint64_t opp, int sq) {
    std::uint64_t flips = 0;
    const std::uint64_t b = 1ULL << sq;
    for (int d = 0; d < 8; ++d) {
        std::uint64_t run = 0, cur = oth_shift(b, d);
        while (cur & opp) {
            run |= cur;
            cur = oth_shift(cur, d);
        }
        if (cur & own) flips |= run;
    }
    return flips;
}

constexpr int nth_set_bit(std::uint64_t mask, int n) {
    while (n-- > 0) mask &= mask - 1;
    return std::countr_zero(mask);
}

}  // namespace detail

struct OthelloState {
    std::uint64_t black = 0, white = 0;
    std::uint8_t consecutive_passes = 0;
    std::uint8_t ply = 0;
    Player to_move = Player::kFirst;
};

// Standard Othello on 8x8: a placement must flip at least one disc; a player
// with no placement passes; two consecutive passes (or a full board) end the
// game, decided by disc count. Black (kFirst) moves first.
class OthelloGame {
public:
    using State = OthelloState;
    using Move = std::uint8_t;  // 0..63 squares, kPass
    static constexpr bool kSingleAgent = false;
    static constexpr Move kPass = 64;
    static constexpr int kPlyCap = 128;

    State initial_state() const {
        State s;
        // center squares: black e4/d5, white d4/e5
        s.black = bit(4, 3) | bit(3, 4);
        s.white = bit(3, 3) | bit(4, 4);
        return s;
    }

    std::vector<Move> legal_moves(const State& s) const {
        std::vector<Move> out;
        std::uint64_t mask = legal_mask(s);
        if (mask == 0) {
            out.push_back(kPass);
            return out;
        }
        out.reserve(std::size_t(std::popcount(mask)));
        while (mask) {
            out.push_back(Move(std::countr_zero(mask)));
            mask &= mask - 1;
        }
        return out;
    }

    State apply(const State& s, Move m) const {
        State n = s;
        apply_inplace(n, m);
        return n;
    }

    Player to_move(const State& s) const { return s.to_move; }

    bool is_terminal(const State& s) const {
        return s.consecutive_passes >= 2 || (s.black | s.white) == ~0ULL || s.ply >= kPlyCap;
    }

    Outcome outcome(const State& s) const {
        if (!is_terminal(s)) throw std::invalid_argument("othello: outcome of non-terminal state");
        const int b = std::popcount(s.black), w = std::popcount(s.white);
        if (b > w) return Outcome::kFirstWins;
        if (w > b) return Outcome::kSecondWins;
        return Outcome::kDraw;
    }

    double terminal_value(const State& s) const { return reward(outcome(s), Player::kFirst); }

    int max_game_length() const { return kPlyCap; }

    void step_random(State& s, Rng& rng) const {
        const std::uint64_t mask = legal_mask(s);
        if (mask == 0) {
            apply_inplace(s, kPass);
            return;
        }
        const int n = std::popcount(mask);
        const int sq = detail::nth_set_bit(mask, int(pick_index(rng, std::size_t(n))));
        apply_inplace(s, Move(sq));
    }

    std::uint64_t legal_mask(const State& s) const {
        return s.to_move == Player::kFirst ? detail::oth_legal_mask(s.black, s.white)
                                           : detail::oth_legal_mask(s.white, s.black);
    }

    static std::string move_name(Move m) {
        if (m == kPass) return "pass";
        return std::string(1, char('a' + m % 8)) + std::to_string(m / 8 + 1);
    }

    static Move parse_move(const std::string& s) {
        if (s == "pass") return kPass;
        if (s.size() < 2) throw std::invalid_argument("bad othello move: " + s);
        char c = s[0] >= 'A' && s[0] <= 'Z' ? char(s[0] - 'A' + 'a') : s[0];
        const int x = c - 'a';
        const int y = std::stoi(s.substr(1)) - 1;
        if (x < 0 || x >= 8 || y < 0 || y >= 8)
            throw std::invalid_argument("bad othello move: " + s);
        return Move(y * 8 + x);
    }

    static std::string diagram(const State& s) {
        std::string out;
        for (int y = 7; y >= 0; --y) {
            out += char('1' + y);
            out += ' ';
            for (int x = 0; x < 8; ++x) {
                const std::uint64_t b = bit(x, y);
                out += (s.black & b) ? 'X' : (s.white & b) ? 'O' : '.';
                if (x < 7) out += ' ';
            }
            out += '\n';
        }
        out += "  a b c d e f g h\n";
        return out;
    }

private:
    static constexpr std::uint64_t bit(int x, int y) { return 1ULL << (y * 8 + x); }

    void apply_inplace(State& s, Move m) const {
        if (m == kPass) {
            ++s.consecutive_passes;
        } else {
            std::uint64_t& own = s.to_move == Player::kFirst ? s.black : s.white;
            std::uint64_t& opp = s.to_move == Player::kFirst ? s.white : s.black;
            const std::uint64_t flips = detail::oth_flips(own, opp, m);
            own |= flips | (1ULL << m);
            opp &= ~flips;
            s.consecutive_passes = 0;
        }
        ++s.ply;
        s.to_move = opponent(s.to_move);
    }
};

}  // namespace asymcts

#endif  // ASYMCTS_OTHELLO_HPP
