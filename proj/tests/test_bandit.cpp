#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "asymcts/bandit.hpp"

using namespace asymcts;

TEST_CASE("ucb index formula", "[bandit]") {
    // ln(1) = 0 kills the exploration term
    CHECK(ucb_index(0.5, 4, 1, 0.4) == Catch::Approx(0.5).margin(1e-15));
    // sqrt(ln e / 1) = 1
    CHECK(ucb_index(0.0, 1, std::exp(1.0), 1.0) == Catch::Approx(1.0).epsilon(1e-12));
    // frozen from an independent arbitrary-precision evaluation of
    // 0.5 + 0.4*sqrt(ln 16 / 4)
    CHECK(ucb_index(0.5, 4, 16, 0.4) == Catch::Approx(0.8330218444630791).epsilon(1e-12));
}

TEST_CASE("ucb sqrt index formula", "[bandit]") {
    CHECK(ucb_sqrt_index(0.0, 4, 16, 1.0) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(ucb_sqrt_index(0.5, 1, 1, 0.4) == Catch::Approx(0.9).epsilon(1e-12));
    CHECK(ucb_sqrt_index(0.5, 4, 16, 0.4) == Catch::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("index monotonicity", "[bandit]") {
    // nondecreasing in t for fixed t_i; strictly decreasing in t_i for fixed t
    const double w = 0.3, c = 0.7;
    for (double t = 2; t <= 1e6; t *= 3.0) {
        CHECK(ucb_index(w, 5, t * 2, c) >= ucb_index(w, 5, t, c));
        CHECK(ucb_sqrt_index(w, 5, t * 2, c) >= ucb_sqrt_index(w, 5, t, c));
        for (double ti = 1; ti <= t; ti *= 4.0) {
            CHECK(ucb_index(w, ti + 1, t, c) < ucb_index(w, ti, t, c));
            CHECK(ucb_sqrt_index(w, ti + 1, t, c) < ucb_sqrt_index(w, ti, t, c));
        }
    }
}

TEST_CASE("sqrt bonus dominates log bonus for t > 1", "[bandit]") {
    // sqrt(t) > ln(t) for all t > 1, so the ucb_sqrt exploration term is larger
    const double w = 0.0, c = 1.0;
    for (double t = 2; t <= 1e6; t = std::max(t + 1, t * 1.7)) {
        for (double ti : {1.0, 2.0, t / 2, t}) {
            if (ti < 1 || ti > t) continue;
            CHECK(ucb_sqrt_index(w, ti, t, c) - w > ucb_index(w, ti, t, c) - w);
        }
    }
}

TEST_CASE("select_arm gives unplayed arms absolute priority", "[bandit]") {
    Rng rng(42);
    std::vector<ArmStats> stats = {{0.9, 5}, {0.1, 5}, {0.0, 0}};
    for (int i = 0; i < 20; ++i)
        CHECK(select_arm(std::span<const ArmStats>(stats), {PolicyKind::kUcb, 0.4}, 10, rng) == 2);
}

TEST_CASE("select_arm picks the dominating index", "[bandit]") {
    Rng rng(7);
    // gap 1.0 dominates the equal exploration bonuses
    std::vector<ArmStats> stats = {{1.0, 10}, {0.0, 10}};
    CHECK(select_arm(std::span<const ArmStats>(stats), {PolicyKind::kUcb, 0.1}, 20, rng) == 0);
}

TEST_CASE("select_arm never picks a pulled arm while an unpulled one exists", "[bandit]") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ArmStats> stats(6);
        int unpulled = 0;
        for (auto& s : stats) {
            if (pick_index(rng, 3) > 0) {
                s = {0.5 + 0.1 * double(pick_index(rng, 4)), 1 + pick_index(rng, 9)};
            } else {
                ++unpulled;
            }
        }
        if (unpulled == 0) stats[0].pulls = 0, unpulled = 1;
        auto i = select_arm(std::span<const ArmStats>(stats), {PolicyKind::kUcb, 1.0}, 60, rng);
        CHECK(stats[i].pulls == 0);
    }
}

TEST_CASE("select_arm breaks exact ties uniformly", "[bandit]") {
    Rng rng(2024);
    std::vector<ArmStats> stats = {{0.5, 10}, {0.5, 10}};
    int first = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i)
        if (select_arm(std::span<const ArmStats>(stats), {PolicyKind::kUcb, 1.0}, 20, rng) == 0)
            ++first;
    CHECK(double(first) / trials == Catch::Approx(0.5).margin(0.05));
}

TEST_CASE("select_arm rejects an empty arm set", "[bandit]") {
    Rng rng(1);
    std::vector<ArmStats> stats;
    CHECK_THROWS_AS(select_arm(std::span<const ArmStats>(stats), BanditPolicy{}, 1, rng),
                    std::invalid_argument);
}

TEST_CASE("update_arm incremental mean", "[bandit]") {
    ArmStats s;
    s = update_arm(s, 1.0);
    CHECK(s.mean_reward == 1.0);
    CHECK(s.pulls == 1);
    s = update_arm(ArmStats{0.5, 1}, 0.0);
    CHECK(s.mean_reward == Catch::Approx(0.25).epsilon(1e-15));
    CHECK(s.pulls == 2);
}

TEST_CASE("update_arm matches the batch mean on alternating rewards", "[bandit]") {
    ArmStats s;
    for (int i = 0; i < 1000; ++i) {
        s = update_arm(s, i % 2 == 0 ? 0.0 : 1.0);
        if (i % 2 == 1) CHECK(s.mean_reward == Catch::Approx(0.5).epsilon(1e-12));
    }
    CHECK(s.pulls == 1000);
}

TEST_CASE("update_arm is permutation invariant within tolerance", "[bandit]") {
    Rng rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> rewards(10000);
    for (double& r : rewards) r = u(rng);

    ArmStats fwd;
    for (double r : rewards) fwd = update_arm(fwd, r);
    std::shuffle(rewards.begin(), rewards.end(), rng);
    ArmStats shuf;
    for (double r : rewards) shuf = update_arm(shuf, r);

    const double batch =
        std::accumulate(rewards.begin(), rewards.end(), 0.0) / double(rewards.size());
    CHECK(fwd.mean_reward == Catch::Approx(shuf.mean_reward).margin(1e-9));
    CHECK(fwd.mean_reward == Catch::Approx(batch).margin(1e-9));
}
