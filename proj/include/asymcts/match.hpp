#ifndef ASYMCTS_MATCH_HPP
#define ASYMCTS_MATCH_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "asymcts/csv.hpp"
#include "asymcts/game.hpp"
#include "asymcts/go.hpp"
#include "asymcts/mcts.hpp"
#include "asymcts/nogo.hpp"
#include "asymcts/othello.hpp"
#include "asymcts/rng.hpp"

namespace asymcts {

inline double normal_z(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("normal_z: confidence must be in (0,1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(),
                                 0.5 + confidence / 2.0);
}

struct WinRateCi {
    double p = 0.0;
    double halfwidth = 0.0;
};

// Normal-approximation binomial interval: p = successes/n,
// halfwidth = z * sqrt(p(1-p)/n). Successes may be fractional (draws = 0.5).
inline WinRateCi win_rate_ci(double successes, int n, double confidence) {
    if (n <= 0) throw std::invalid_argument("win_rate_ci: n must be positive");
    if (successes < 0.0 || successes > double(n))
        throw std::invalid_argument("win_rate_ci: successes out of range");
    const double p = successes / double(n);
    return {p, normal_z(confidence) * std::sqrt(p * (1.0 - p) / double(n))};
}

struct EngineSpec {
    SchemeKind scheme = SchemeKind::kUct;
    double c_r = 0.5;
    double c_s = 0.4;

    SearchScheme search_scheme() const { return {scheme, c_r, c_s}; }
};

// Paper-tuned per-game constants; the UCT baseline carries only c (stored in
// c_r).
inline EngineSpec default_engine(const std::string& game, SchemeKind kind) {
    EngineSpec e;
    e.scheme = kind;
    if (kind == SchemeKind::kUct) {
        e.c_r = game == "go" ? 0.3 : game == "nogo" ? 0.4 : 0.6;
    } else if (kind == SchemeKind::kAsymmetric) {
        e.c_r = game == "othello" ? 0.7 : 0.5;
        e.c_s = 0.4;
    } else {  // SR+CR
        e.c_r = game == "go" ? 0.4 : game == "nogo" ? 0.3 : 0.6;
        e.c_s = game == "othello" ? 0.4 : 0.9;
    }
    return e;
}

struct MatchConfig {
    std::string game = "go";
    EngineSpec engine_a;
    EngineSpec engine_b;
    int playouts = 1000;  // per move, same for both engines
    int games = 200;
    std::uint64_t seed = 1;
    bool alternate_colors = true;
    int threads = 0;  // 0 -> hardware
    bool eye_filter = true;
    MoveRecommend recommend = MoveRecommend::kRobustChild;
};

struct GameRecord {
    std::uint64_t seed = 0;
    Player color_of_a = Player::kFirst;
    int move_count = 0;
    Outcome outcome = Outcome::kDraw;
};

struct MatchResult {
    int wins_a = 0, wins_b = 0, draws = 0;
    double win_rate_a = 0.0;   // draws counted as half wins
    double ci_halfwidth = 0.0; // 95% interval
    std::vector<GameRecord> per_game;
};

namespace detail {

template <OutcomeGame G>
GameRecord play_single_game(const G& game, const MatchConfig& cfg, int index) {
    GameRecord rec;
    rec.seed = derive_seed(cfg.seed, std::uint64_t(index));
    rec.color_of_a =
        (!cfg.alternate_colors || index % 2 == 0) ? Player::kFirst : Player::kSecond;
    Rng rng_a(derive_seed(rec.seed, 1));
    Rng rng_b(derive_seed(rec.seed, 2));
    const SearchScheme scheme_a = cfg.engine_a.search_scheme();
    const SearchScheme scheme_b = cfg.engine_b.search_scheme();

    typename G::State state = game.initial_state();
    while (!game.is_terminal(state)) {
        const bool a_moves = game.to_move(state) == rec.color_of_a;
        auto res = run_search(game, state, a_moves ? scheme_a : scheme_b, cfg.playouts,
                              a_moves ? rng_a : rng_b, cfg.recommend);
        state = game.apply(state, res.best_move);
        ++rec.move_count;
    }
    rec.outcome = game.outcome(state);
    return rec;
}

}  // namespace detail

// Engine-vs-engine match; game i derives every seed from (master seed, i),
// so the result is identical for any worker count. A plays Black on even
// game indices when colors alternate.
template <OutcomeGame G>
MatchResult play_match_on(const G& game, const MatchConfig& cfg) {
    if (cfg.games < 1) throw std::invalid_argument("play_match: games must be >= 1");
    if (cfg.playouts < 1) throw std::invalid_argument("play_match: playouts must be >= 1");

    std::vector<GameRecord> recs(std::size_t(cfg.games));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= cfg.games) return;
                recs[std::size_t(i)] = detail::play_single_game(game, cfg, i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    int nt = cfg.threads > 0 ? cfg.threads : int(std::thread::hardware_concurrency());
    nt = std::max(1, std::min(nt, cfg.games));
    if (nt == 1) {
        work();
    } else {
        std::vector<std::thread> ts;
        for (int w = 0; w < nt; ++w) ts.emplace_back(work);
        for (auto& t : ts) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    MatchResult out;
    out.per_game = std::move(recs);
    for (const GameRecord& r : out.per_game) {
        if (r.outcome == Outcome::kDraw) {
            ++out.draws;
        } else {
            const Player winner =
                r.outcome == Outcome::kFirstWins ? Player::kFirst : Player::kSecond;
            if (winner == r.color_of_a)
                ++out.wins_a;
            else
                ++out.wins_b;
        }
    }
    const double successes = out.wins_a + 0.5 * out.draws;
    const WinRateCi ci = win_rate_ci(successes, cfg.games, 0.95);
    out.win_rate_a = ci.p;
    out.ci_halfwidth = ci.halfwidth;
    return out;
}

inline MatchResult play_match(const MatchConfig& cfg) {
    if (cfg.game == "go") return play_match_on(GoGame(cfg.eye_filter), cfg);
    if (cfg.game == "nogo") return play_match_on(NoGoGame(), cfg);
    if (cfg.game == "othello") return play_match_on(OthelloGame(), cfg);
    throw std::invalid_argument("unknown game: " + cfg.game);
}

struct SweepRow {
    double value = 0.0;
    MatchResult result;
};

// Rows share the base config's seed, so per-game seeds are identical across
// rows (variance reduction). Parameters: c (engine B's constant), c_r / c_s
// (engine A's constants), playouts (both engines).
inline std::vector<SweepRow> sweep(const MatchConfig& base, const std::string& parameter,
                                   std::span<const double> values) {
    if (parameter != "c" && parameter != "c_r" && parameter != "c_s" && parameter != "playouts")
        throw std::invalid_argument("sweep: unknown parameter: " + parameter);
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        MatchConfig cfg = base;
        if (parameter == "c")
            cfg.engine_b.c_r = v;
        else if (parameter == "c_r")
            cfg.engine_a.c_r = v;
        else if (parameter == "c_s")
            cfg.engine_a.c_s = v;
        else
            cfg.playouts = int(v);
        rows.push_back({v, play_match(cfg)});
    }
    return rows;
}

inline void write_match_csv(std::ostream& os, const MatchConfig& cfg, const MatchResult& r) {
    CsvWriter w(os);
    w.field("game").field("playouts").field("games").field("wins_a").field("wins_b")
        .field("draws").field("win_rate_a").field("ci_halfwidth");
    w.endrow();
    w.field(cfg.game)
        .field(cfg.playouts)
        .field(cfg.games)
        .field(r.wins_a)
        .field(r.wins_b)
        .field(r.draws)
        .field(r.win_rate_a)
        .field(r.ci_halfwidth);
    w.endrow();
}

inline void write_sweep_csv(std::ostream& os, const std::string& parameter,
                            const std::vector<SweepRow>& rows) {
    CsvWriter w(os);
    w.field("param").field("value").field("games").field("wins_a").field("wins_b")
        .field("draws").field("win_rate_a").field("ci_halfwidth");
    w.endrow();
    for (const SweepRow& row : rows) {
        w.field(parameter)
            .field(row.value)
            .field(int(row.result.per_game.size()))
            .field(row.result.wins_a)
            .field(row.result.wins_b)
            .field(row.result.draws)
            .field(row.result.win_rate_a)
            .field(row.result.ci_halfwidth);
        w.endrow();
    }
}

}  // namespace asymcts

#endif  // ASYMCTS_MATCH_HPP
