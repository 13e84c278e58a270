#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "asymcts/nogo.hpp"

using namespace asymcts;

namespace {

using RawBoard = std::array<Stone, kB9Points>;

RawBoard raw_of(const NoGoState& s) {
    RawBoard b;
    for (int p = 0; p < kB9Points; ++p) b[p] = s.board.at(p);
    return b;
}

int liberties_from(const RawBoard& b, int p, std::vector<int>* stones_out = nullptr) {
    std::vector<int> stones{p};
    std::array<bool, kB9Points> seen{};
    seen[p] = true;
    std::set<int> libs;
    for (std::size_t i = 0; i < stones.size(); ++i) {
        const auto& nb = detail::kNeighbors[stones[i]];
        for (int k = 0; k < nb.count; ++k) {
            const int q = nb.at[k];
            if (b[q] == Stone::kEmpty)
                libs.insert(q);
            else if (b[q] == b[p] && !seen[q]) {
                seen[q] = true;
                stones.push_back(q);
            }
        }
    }
    if (stones_out) *stones_out = stones;
    return int(libs.size());
}

// brute-force per-point simulation: legal iff the placement captures nothing
// and is not suicide
bool naive_nogo_legal(RawBoard b, int p, Stone color) {
    if (b[p] != Stone::kEmpty) return false;
    b[p] = color;
    const Stone enemy = other(color);
    const auto& nb = detail::kNeighbors[p];
    for (int k = 0; k < nb.count; ++k)
        if (b[nb.at[k]] == enemy && liberties_from(b, nb.at[k]) == 0) return false;  // captures
    return liberties_from(b, p) > 0;  // no suicide
}

}  // namespace

TEST_CASE("empty nogo board offers 81 moves and no pass", "[nogo]") {
    NoGoGame g;
    const auto moves = g.legal_moves(g.initial_state());
    CHECK(moves.size() == 81);
    CHECK(std::find(moves.begin(), moves.end(), kB9Pass) == moves.end());
}

TEST_CASE("capturing placements are illegal", "[nogo]") {
    NoGoGame g;
    // black b1, white a1 (one liberty at a2); black a2 would capture: illegal
    auto s = g.apply(g.initial_state(), NoGoGame::parse_move("b1"));
    s = g.apply(s, NoGoGame::parse_move("a1"));
    REQUIRE(g.to_move(s) == Player::kFirst);
    const auto a2 = NoGoGame::parse_move("a2");
    CHECK_FALSE(g.is_legal(s, a2));
    const auto moves = g.legal_moves(s);
    CHECK(std::find(moves.begin(), moves.end(), a2) == moves.end());
}

TEST_CASE("suicide placements are illegal", "[nogo]") {
    NoGoGame g;
    // black b1 and a2 leave a1 as a suicide point for white
    auto s = g.apply(g.initial_state(), NoGoGame::parse_move("b1"));
    s = g.apply(s, NoGoGame::parse_move("h8"));
    s = g.apply(s, NoGoGame::parse_move("a2"));
    REQUIRE(g.to_move(s) == Player::kSecond);
    CHECK_FALSE(g.is_legal(s, NoGoGame::parse_move("a1")));
}

TEST_CASE("legal move generation matches the brute-force oracle", "[nogo]") {
    NoGoGame g;
    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        auto s = g.initial_state();
        const int depth = int(pick_index(rng, 70));
        for (int i = 0; i < depth && !g.is_terminal(s); ++i) g.step_random(s, rng);
        if (g.is_terminal(s)) continue;
        const RawBoard b = raw_of(s);
        const Stone color = stone_of(g.to_move(s));
        const auto fast = g.legal_moves(s);
        std::set<int> fast_set(fast.begin(), fast.end());
        for (int p = 0; p < kB9Points; ++p) {
            INFO("point " << point_name_9(p));
            CHECK(fast_set.count(p) == std::size_t(naive_nogo_legal(b, p, color)));
        }
    }
}

TEST_CASE("positions with a single legal move return exactly that move", "[nogo]") {
    NoGoGame g;
    Rng rng(808);
    int found = 0;
    for (int trial = 0; trial < 200 && found < 5; ++trial) {
        auto s = g.initial_state();
        while (!g.is_terminal(s)) {
            const RawBoard b = raw_of(s);
            const Stone color = stone_of(g.to_move(s));
            std::vector<int> oracle;
            for (int p = 0; p < kB9Points; ++p)
                if (naive_nogo_legal(b, p, color)) oracle.push_back(p);
            if (oracle.size() == 1) {
                const auto fast = g.legal_moves(s);
                REQUIRE(fast.size() == 1);
                CHECK(int(fast[0]) == oracle[0]);
                ++found;
            }
            g.step_random(s, rng);
        }
    }
    CHECK(found >= 5);
}

TEST_CASE("the player without a legal move loses", "[nogo]") {
    NoGoGame g;
    Rng rng(606);
    int first_losses = 0, second_losses = 0;
    for (int game = 0; game < 40; ++game) {
        auto s = g.initial_state();
        while (!g.is_terminal(s)) g.step_random(s, rng);
        CHECK(g.legal_moves(s).empty());
        const Outcome o = g.outcome(s);
        if (s.to_move == Player::kFirst) {
            CHECK(o == Outcome::kSecondWins);
            ++first_losses;
        } else {
            CHECK(o == Outcome::kFirstWins);
            ++second_losses;
        }
        CHECK(o != Outcome::kDraw);
    }
    CHECK(first_losses + second_losses == 40);
}

TEST_CASE("outcome with legal moves available is an error", "[nogo]") {
    NoGoGame g;
    CHECK_THROWS_AS(g.outcome(g.initial_state()), std::invalid_argument);
}

TEST_CASE("stone count equals move count and never decreases", "[nogo]") {
    NoGoGame g;
    Rng rng(909);
    for (int game = 0; game < 10; ++game) {
        auto s = g.initial_state();
        int prev = 0;
        while (!g.is_terminal(s)) {
            g.step_random(s, rng);
            const int stones = s.board.stones_on_board();
            CHECK(stones == s.move_count);
            CHECK(stones == prev + 1);
            prev = stones;
            s.board.validate();
        }
        CHECK(s.move_count <= 81);
    }
}

TEST_CASE("nogo playouts terminate within 81 moves", "[nogo]") {
    NoGoGame g;
    Rng rng(2321);
    for (int i = 0; i < 3000; ++i) {
        const double v = random_playout(g, g.initial_state(), rng);
        CHECK((v == 0.0 || v == 1.0));
    }
}
