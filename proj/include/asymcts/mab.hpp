#ifndef ASYMCTS_MAB_HPP
#define ASYMCTS_MAB_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "asymcts/bandit.hpp"
#include "asymcts/csv.hpp"
#include "asymcts/rng.hpp"

namespace asymcts {

enum class RewardBias : std::uint8_t { kNone, kAscending, kDescending };

inline const char* bias_name(RewardBias b) {
    switch (b) {
        case RewardBias::kNone: return "none";
        case RewardBias::kAscending: return "ascending";
        default: return "descending";
    }
}

inline RewardBias parse_bias(const std::string& s) {
    if (s == "none") return RewardBias::kNone;
    if (s == "ascending" || s == "asc") return RewardBias::kAscending;
    if (s == "descending" || s == "desc") return RewardBias::kDescending;
    throw std::invalid_argument("unknown bias: " + s);
}

// A K-armed Gaussian problem: true means i.i.d. N(0,1), unit reward variance.
struct MabProblem {
    std::vector<double> true_means;
    std::size_t optimal_arm = 0;
};

// ties resolve to the lowest index (probability zero for generated means)
inline MabProblem problem_from_means(std::vector<double> means) {
    MabProblem pr;
    pr.true_means = std::move(means);
    for (std::size_t i = 1; i < pr.true_means.size(); ++i)
        if (pr.true_means[i] > pr.true_means[pr.optimal_arm]) pr.optimal_arm = i;
    return pr;
}

template <class R>
MabProblem generate_problem(int arms, R& rng) {
    if (arms < 2) throw std::invalid_argument("generate_problem: need at least 2 arms");
    std::normal_distribution<double> n01(0.0, 1.0);
    std::vector<double> means(static_cast<std::size_t>(arms));
    for (double& m : means) m = n01(rng);
    return problem_from_means(std::move(means));
}

// Pre-drawn per-arm reward sequences; under a sorting bias the k-th pull of
// an arm consumes the k-th element of that arm's fully sorted sequence.
struct RewardStream {
    std::vector<std::vector<double>> per_arm;
    RewardBias bias = RewardBias::kNone;
};

template <class R>
RewardStream generate_stream(const MabProblem& pr, int plays, RewardBias bias, R& rng) {
    if (plays < 1) throw std::invalid_argument("generate_stream: plays must be >= 1");
    RewardStream st;
    st.bias = bias;
    st.per_arm.resize(pr.true_means.size());
    for (std::size_t a = 0; a < pr.true_means.size(); ++a) {
        std::normal_distribution<double> d(pr.true_means[a], 1.0);
        auto& seq = st.per_arm[a];
        seq.resize(std::size_t(plays));
        for (double& r : seq) r = d(rng);
        if (bias == RewardBias::kAscending) std::sort(seq.begin(), seq.end());
        if (bias == RewardBias::kDescending) std::sort(seq.begin(), seq.end(), std::greater<>());
    }
    return st;
}

struct PlayLog {
    std::vector<std::uint32_t> chosen;
    std::vector<double> rewards;
    std::map<int, std::uint32_t> recommendation_at;
};

enum class MabRecommend : std::uint8_t { kEmpiricalBest, kMostPulled };

inline std::uint32_t recommend_arm(std::span<const ArmStats> stats, MabRecommend rule) {
    std::uint32_t best = 0;
    bool found = false;
    for (std::uint32_t i = 0; i < stats.size(); ++i) {
        if (stats[i].pulls == 0) continue;
        if (!found) {
            best = i;
            found = true;
            continue;
        }
        const ArmStats &a = stats[i], &b = stats[best];
        bool better;
        if (rule == MabRecommend::kEmpiricalBest)
            better = a.mean_reward > b.mean_reward ||
                     (a.mean_reward == b.mean_reward && a.pulls > b.pulls);
        else
            better = a.pulls > b.pulls || (a.pulls == b.pulls && a.mean_reward > b.mean_reward);
        if (better) best = i;
    }
    if (!found) throw std::logic_error("recommend_arm: no arm pulled yet");
    return best;
}

// Play loop: plays 1..K pull arms 0..K-1 once each (ascending index), then
// the policy's select_arm governs; at each checkpoint play the recommended
// arm is recorded.
template <class R>
PlayLog run_policy(const RewardStream& stream, const MabProblem& pr, const BanditPolicy& policy,
                   int plays, std::span<const int> checkpoints, R& rng,
                   MabRecommend rule = MabRecommend::kEmpiricalBest) {
    const int arms = int(pr.true_means.size());
    if (plays < arms) throw std::invalid_argument("run_policy: plays must be >= number of arms");

    std::vector<int> cps(checkpoints.begin(), checkpoints.end());
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());

    std::vector<ArmStats> stats(static_cast<std::size_t>(arms));
    PlayLog log;
    log.chosen.reserve(std::size_t(plays));
    log.rewards.reserve(std::size_t(plays));

    for (int q = 1; q <= plays; ++q) {
        const std::size_t arm = q <= arms
                                    ? std::size_t(q - 1)
                                    : select_arm(std::span<const ArmStats>(stats), policy,
                                                 std::uint64_t(q - 1), rng);
        const double r = stream.per_arm[arm][stats[arm].pulls];
        stats[arm] = update_arm(stats[arm], r);
        log.chosen.push_back(std::uint32_t(arm));
        log.rewards.push_back(r);
        if (std::binary_search(cps.begin(), cps.end(), q))
            log.recommendation_at[q] = recommend_arm(stats, rule);
    }
    return log;
}

// Expected-value cumulative regret: prefix sums of (best true mean - true
// mean of the chosen arm); uses true means, not realized rewards.
inline std::vector<double> cumulative_regret(const PlayLog& log, const MabProblem& pr) {
    const double best = pr.true_means[pr.optimal_arm];
    std::vector<double> out;
    out.reserve(log.chosen.size());
    double run = 0.0;
    for (std::uint32_t a : log.chosen) {
        run += best - pr.true_means[a];
        out.push_back(run);
    }
    return out;
}

inline double simple_regret(const PlayLog& log, const MabProblem& pr, int checkpoint) {
    auto it = log.recommendation_at.find(checkpoint);
    if (it == log.recommendation_at.end())
        throw std::invalid_argument("simple_regret: checkpoint not recorded");
    return pr.true_means[pr.optimal_arm] - pr.true_means[it->second];
}

struct TestbedPolicy {
    std::string name;
    BanditPolicy policy;
};

struct TestbedConfig {
    int problems = 200;
    int arms = 20;
    int plays = 2000;
    std::vector<RewardBias> biases{RewardBias::kAscending, RewardBias::kDescending};
    std::vector<TestbedPolicy> policies;  // empty -> ucb and ucb_sqrt, c = 1.0
    std::vector<int> checkpoints;         // empty -> ~100 evenly spaced + final
    std::uint64_t seed = 1;
    int threads = 0;  // 0 -> hardware
    MabRecommend recommend = MabRecommend::kEmpiricalBest;
};

struct TestbedRow {
    std::string policy;
    RewardBias bias = RewardBias::kNone;
    int play = 0;
    double optimal_pct = 0.0;   // fraction of problems whose play-t choice was optimal
    double cum_regret = 0.0;    // mean over problems
    double simple_regret = 0.0; // mean over problems
};

// Averages optimal-arm percentage (instantaneous), cumulative regret and
// simple regret over independently generated problems. Problem i derives its
// rngs from (seed, i), so results are identical for any thread count; the
// same raw reward draws are re-sorted for each bias and every policy replays
// the same stream.
inline std::vector<TestbedRow> run_experiment(const TestbedConfig& cfg) {
    if (cfg.problems < 1) throw std::invalid_argument("run_experiment: problems must be >= 1");
    if (cfg.arms < 2) throw std::invalid_argument("run_experiment: need at least 2 arms");
    if (cfg.plays < cfg.arms)
        throw std::invalid_argument("run_experiment: plays must be >= number of arms");

    std::vector<TestbedPolicy> policies = cfg.policies;
    if (policies.empty()) {
        policies.push_back({"ucb", {PolicyKind::kUcb, 1.0}});
        policies.push_back({"ucb_sqrt", {PolicyKind::kUcbSqrt, 1.0}});
    }
    std::vector<int> cps = cfg.checkpoints;
    if (cps.empty()) {
        const int step = std::max(1, cfg.plays / 100);
        for (int q = step; q <= cfg.plays; q += step) cps.push_back(q);
    }
    cps.push_back(cfg.plays);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    if (cps.front() < 1 || cps.back() > cfg.plays)
        throw std::invalid_argument("run_experiment: checkpoints must lie in [1, plays]");

    const std::size_t cells = policies.size() * cfg.biases.size() * cps.size();
    struct Cell {
        double optimal = 0.0, cum = 0.0, sr = 0.0;
    };

    // one problem -> one vector of cells, reduced strictly in problem order
    auto run_problem = [&](int pi) {
        std::vector<Cell> out(cells);
        Rng prng(derive_seed(cfg.seed, std::uint64_t(pi), 0));
        const MabProblem pr = generate_problem(cfg.arms, prng);
        std::size_t cell = 0;
        for (std::size_t pj = 0; pj < policies.size(); ++pj) {
            for (std::size_t bj = 0; bj < cfg.biases.size(); ++bj) {
                Rng srng(derive_seed(cfg.seed, std::uint64_t(pi), 1));
                const RewardStream st =
                    generate_stream(pr, cfg.plays, cfg.biases[bj], srng);
                Rng arng(derive_seed(cfg.seed, std::uint64_t(pi), 2 + pj));
                const PlayLog log =
                    run_policy(st, pr, policies[pj].policy, cfg.plays, cps, arng, cfg.recommend);
                const std::vector<double> cr = cumulative_regret(log, pr);
                for (int cp : cps) {
                    Cell& c = out[cell++];
                    c.optimal = log.chosen[std::size_t(cp - 1)] == pr.optimal_arm ? 1.0 : 0.0;
                    c.cum = cr[std::size_t(cp - 1)];
                    c.sr = simple_regret(log, pr, cp);
                }
            }
        }
        return out;
    };

    std::vector<Cell> total(cells);
    int nt = cfg.threads > 0 ? cfg.threads : int(std::thread::hardware_concurrency());
    nt = std::max(1, std::min(nt, cfg.problems));
    const int block = std::max(1, 8 * nt);
    std::vector<std::vector<Cell>> buf(static_cast<std::size_t>(block));
    for (int start = 0; start < cfg.problems; start += block) {
        const int n = std::min(block, cfg.problems - start);
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                for (;;) {
                    const int k = next.fetch_add(1);
                    if (k >= n) return;
                    buf[std::size_t(k)] = run_problem(start + k);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> ts;
        for (int w = 0; w < std::min(nt, n); ++w) ts.emplace_back(work);
        for (auto& t : ts) t.join();
        if (failure) std::rethrow_exception(failure);
        for (int k = 0; k < n; ++k)
            for (std::size_t c = 0; c < cells; ++c) {
                total[c].optimal += buf[std::size_t(k)][c].optimal;
                total[c].cum += buf[std::size_t(k)][c].cum;
                total[c].sr += buf[std::size_t(k)][c].sr;
            }
    }

    std::vector<TestbedRow> rows;
    rows.reserve(cells);
    std::size_t cell = 0;
    for (const TestbedPolicy& pol : policies)
        for (RewardBias b : cfg.biases)
            for (int cp : cps) {
                const Cell& c = total[cell++];
                rows.push_back({pol.name, b, cp, c.optimal / cfg.problems, c.cum / cfg.problems,
                                c.sr / cfg.problems});
            }
    return rows;
}

inline void write_testbed_csv(std::ostream& os, const std::vector<TestbedRow>& rows) {
    CsvWriter w(os);
    w.field("policy").field("bias").field("play").field("optimal_pct").field("cum_regret")
        .field("simple_regret");
    w.endrow();
    for (const TestbedRow& r : rows) {
        w.field(r.policy)
            .field(bias_name(r.bias))
            .field(r.play)
            .field(r.optimal_pct)
            .field(r.cum_regret)
            .field(r.simple_regret);
        w.endrow();
    }
}

}  // namespace asymcts

#endif  // ASYMCTS_MAB_HPP
