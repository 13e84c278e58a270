#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <vector>

#include "asymcts/match.hpp"

using namespace asymcts;

namespace {

MatchConfig quick_othello(int games, int playouts, std::uint64_t seed) {
    MatchConfig cfg;
    cfg.game = "othello";
    cfg.engine_a = default_engine("othello", SchemeKind::kUct);
    cfg.engine_b = default_engine("othello", SchemeKind::kUct);
    cfg.games = games;
    cfg.playouts = playouts;
    cfg.seed = seed;
    return cfg;
}

bool same_result(const MatchResult& a, const MatchResult& b) {
    if (a.wins_a != b.wins_a || a.wins_b != b.wins_b || a.draws != b.draws) return false;
    if (a.win_rate_a != b.win_rate_a || a.ci_halfwidth != b.ci_halfwidth) return false;
    if (a.per_game.size() != b.per_game.size()) return false;
    for (std::size_t i = 0; i < a.per_game.size(); ++i) {
        const auto &x = a.per_game[i], &y = b.per_game[i];
        if (x.seed != y.seed || x.color_of_a != y.color_of_a || x.move_count != y.move_count ||
            x.outcome != y.outcome)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("win rate confidence interval formula", "[harness]") {
    CHECK(normal_z(0.95) == Catch::Approx(1.959964).margin(1e-5));

    const auto t1 = win_rate_ci(1150, 2300, 0.95);
    CHECK(t1.p == Catch::Approx(0.5));
    CHECK(t1.halfwidth == Catch::Approx(0.020434037090466947).margin(1e-9));

    const auto t4 = win_rate_ci(1500, 2300, 0.95);
    CHECK(t4.p == Catch::Approx(0.6521739130434783).margin(1e-12));
    CHECK(t4.halfwidth == Catch::Approx(0.0194646661832104).margin(1e-9));

    CHECK(win_rate_ci(2300, 2300, 0.95).halfwidth == 0.0);
    CHECK_THROWS_AS(win_rate_ci(0, 0, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(win_rate_ci(5, 4, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(normal_z(1.0), std::invalid_argument);
}

TEST_CASE("ci halfwidth shrinks with more games", "[harness]") {
    double prev = 1.0;
    for (int n : {10, 40, 160, 640, 2560}) {
        const auto ci = win_rate_ci(0.3 * n, n, 0.95);
        CHECK(ci.halfwidth < prev);
        prev = ci.halfwidth;
    }
}

TEST_CASE("two-game match alternates colors", "[harness]") {
    auto cfg = quick_othello(2, 4, 11);
    const auto r = play_match(cfg);
    REQUIRE(r.per_game.size() == 2);
    CHECK(r.per_game[0].color_of_a == Player::kFirst);
    CHECK(r.per_game[1].color_of_a == Player::kSecond);
    CHECK(r.wins_a + r.wins_b + r.draws == 2);
}

TEST_CASE("color assignment is balanced", "[harness]") {
    for (int games : {5, 8}) {
        auto cfg = quick_othello(games, 4, 3);
        const auto r = play_match(cfg);
        int as_black = 0;
        for (const auto& g : r.per_game)
            if (g.color_of_a == Player::kFirst) ++as_black;
        CHECK(std::abs(2 * as_black - games) <= 1);
    }
}

TEST_CASE("matches are reproducible and thread-count invariant", "[harness]") {
    auto cfg = quick_othello(12, 16, 77);
    cfg.threads = 1;
    const auto r1 = play_match(cfg);
    cfg.threads = 4;
    const auto r2 = play_match(cfg);
    CHECK(same_result(r1, r2));

    std::ostringstream c1, c2;
    write_match_csv(c1, cfg, r1);
    write_match_csv(c2, cfg, r2);
    CHECK(c1.str() == c2.str());
}

TEST_CASE("match aggregates count draws as half wins", "[harness]") {
    auto cfg = quick_othello(30, 8, 5);
    const auto r = play_match(cfg);
    CHECK(r.wins_a + r.wins_b + r.draws == 30);
    const double successes = r.wins_a + 0.5 * r.draws;
    CHECK(r.win_rate_a == Catch::Approx(successes / 30.0));
    const auto ci = win_rate_ci(successes, 30, 0.95);
    CHECK(r.ci_halfwidth == Catch::Approx(ci.halfwidth));
}

TEST_CASE("self-play null holds across seeded repetitions", "[harness][slow]") {
    // 30 of 30 A-vs-A matches stay within three halfwidths of one half
    int within = 0;
    for (std::uint64_t rep = 1; rep <= 30; ++rep) {
        auto cfg = quick_othello(200, 12, 1000 + rep);
        const auto r = play_match(cfg);
        if (std::abs(r.win_rate_a - 0.5) < 3.0 * r.ci_halfwidth) ++within;
    }
    CHECK(within == 30);
}

TEST_CASE("sweep produces one row per value with shared seeds", "[harness]") {
    auto cfg = quick_othello(6, 6, 21);
    const std::vector<double> values{0.2, 0.6};
    const auto rows = sweep(cfg, "c", values);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].value == 0.2);
    CHECK(rows[1].value == 0.6);
    for (const auto& row : rows) {
        REQUIRE(row.result.per_game.size() == 6);
        // identical per-game seeds across rows
        CHECK(row.result.per_game[0].seed == rows[0].result.per_game[0].seed);
    }

    CHECK(sweep(cfg, "playouts", std::vector<double>{}).empty());
    CHECK_THROWS_AS(sweep(cfg, "komi", values), std::invalid_argument);

    std::ostringstream os;
    write_sweep_csv(os, "c", rows);
    const std::string header = os.str().substr(0, os.str().find('\n'));
    CHECK(header == "param,value,games,wins_a,wins_b,draws,win_rate_a,ci_halfwidth");
}

TEST_CASE("sweep over playouts changes the per-move budget", "[harness]") {
    auto cfg = quick_othello(2, 2, 9);
    const auto rows = sweep(cfg, "playouts", std::vector<double>{2, 8});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].result.per_game[0].move_count > 0);
}

TEST_CASE("default engine table carries the paper-tuned constants", "[harness]") {
    CHECK(default_engine("go", SchemeKind::kAsymmetric).c_r == 0.5);
    CHECK(default_engine("go", SchemeKind::kAsymmetric).c_s == 0.4);
    CHECK(default_engine("go", SchemeKind::kUct).c_r == 0.3);
    CHECK(default_engine("nogo", SchemeKind::kUct).c_r == 0.4);
    CHECK(default_engine("nogo", SchemeKind::kSrCr).c_s == 0.9);
    CHECK(default_engine("othello", SchemeKind::kAsymmetric).c_r == 0.7);
    CHECK(default_engine("othello", SchemeKind::kUct).c_r == 0.6);
    CHECK(default_engine("othello", SchemeKind::kSrCr).c_s == 0.4);
}

TEST_CASE("unknown game id is rejected", "[harness]") {
    MatchConfig cfg;
    cfg.game = "chess";
    CHECK_THROWS_AS(play_match(cfg), std::invalid_argument);
}

TEST_CASE("invalid match configs are rejected", "[harness]") {
    auto cfg = quick_othello(0, 4, 1);
    CHECK_THROWS_AS(play_match(cfg), std::invalid_argument);
    cfg = quick_othello(1, 0, 1);
    CHECK_THROWS_AS(play_match(cfg), std::invalid_argument);
}
