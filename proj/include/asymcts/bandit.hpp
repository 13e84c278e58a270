#ifndef ASYMCTS_BANDIT_HPP
#define ASYMCTS_BANDIT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>

#include "asymcts/rng.hpp"

namespace asymcts {

// Running statistics of one arm: empirical mean w_i and pull count t_i.
// mean_reward is meaningless until the arm has been pulled at least once;
// selection gives unpulled arms absolute priority and never reads it.
struct ArmStats {
    double mean_reward = 0.0;
    std::uint64_t pulls = 0;
};

enum class PolicyKind : std::uint8_t { kUcb, kUcbSqrt };

struct BanditPolicy {
    PolicyKind kind = PolicyKind::kUcb;
    double c = 1.0;  // exploration constant, > 0
};

inline const char* policy_kind_name(PolicyKind k) {
    return k == PolicyKind::kUcb ? "ucb" : "ucb_sqrt";
}

// Cumulative-regret index: w + c * sqrt(ln(t) / t_i).
// Requires t_i >= 1 and t >= 1; callers must short-circuit unpulled arms.
inline double ucb_index(double w, double t_i, double t, double c) {
    return w + c * std::sqrt(std::log(t) / t_i);
}

// Simple-regret index: w + c * sqrt(sqrt(t) / t_i). The bonus shrinks more
// slowly than ln(t), so sampling spreads more evenly across arms.
inline double ucb_sqrt_index(double w, double t_i, double t, double c) {
    return w + c * std::sqrt(std::sqrt(t) / t_i);
}

inline double policy_index(const BanditPolicy& p, double w, double t_i, double t) {
    return p.kind == PolicyKind::kUcb ? ucb_index(w, t_i, t, p.c)
                                      : ucb_sqrt_index(w, t_i, t, p.c);
}

// Arm selection shared by the testbed and (in spirit) the search tree:
// any unpulled arm is chosen first, uniformly at random among the unpulled;
// otherwise the arm maximizing the policy index, ties broken uniformly.
// `t` is the number of completed plays. Allocation-free: two passes.
template <class R>
std::size_t select_arm(std::span<const ArmStats> stats, const BanditPolicy& policy,
                       std::uint64_t t, R& rng) {
    if (stats.empty()) throw std::invalid_argument("select_arm: no arms");

    std::size_t unplayed = 0;
    for (const ArmStats& s : stats)
        if (s.pulls == 0) ++unplayed;
    if (unplayed > 0) {
        std::size_t k = pick_index(rng, unplayed);
        for (std::size_t i = 0; i < stats.size(); ++i) {
            if (stats[i].pulls != 0) continue;
            if (k == 0) return i;
            --k;
        }
        throw std::logic_error("select_arm: unplayed scan failed");  // unreachable
    }

    double best = -std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    for (const ArmStats& s : stats) {
        double v = policy_index(policy, s.mean_reward, double(s.pulls), double(t));
        if (v > best) {
            best = v;
            ties = 1;
        } else if (v == best) {
            ++ties;
        }
    }
    std::size_t k = pick_index(rng, ties);
    for (std::size_t i = 0; i < stats.size(); ++i) {
        double v = policy_index(policy, stats[i].mean_reward, double(stats[i].pulls), double(t));
        if (v == best) {
            if (k == 0) return i;
            --k;
        }
    }
    throw std::logic_error("select_arm: tie scan failed");  // unreachable
}

// Incremental mean update: w <- (w*t + r)/(t+1), t <- t+1.
inline ArmStats update_arm(ArmStats s, double reward) {
    if (s.pulls == 0) {
        s.mean_reward = reward;
        s.pulls = 1;
        return s;
    }
    s.mean_reward = (s.mean_reward * double(s.pulls) + reward) / double(s.pulls + 1);
    s.pulls += 1;
    return s;
}

}  // namespace asymcts

#endif  // ASYMCTS_BANDIT_HPP
