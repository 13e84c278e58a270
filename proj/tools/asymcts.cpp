// Experiment front end: MAB testbed runs, engine-vs-engine matches, constant
// sweeps and playout-scaling studies. Results land in CSV files with a JSON
// sidecar holding the fully resolved configuration.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymcts/mab.hpp"
#include "asymcts/match.hpp"
#include "asymcts/mcts.hpp"

using namespace asymcts;
using nlohmann::json;

namespace {

std::string timestamp_name() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%d-%H%M%S", std::gmtime(&t));
    return buf;
}

// --out overrides the default results/<experiment>/<timestamp>.csv
std::filesystem::path resolve_out(const std::string& out, const std::string& experiment) {
    if (!out.empty()) return out;
    const auto dir = std::filesystem::path("results") / experiment;
    std::filesystem::create_directories(dir);
    return dir / (timestamp_name() + ".csv");
}

void write_outputs(const std::filesystem::path& csv_path, const std::string& csv,
                   const json& config) {
    std::filesystem::path dir = csv_path.parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + csv_path.string());
        f << csv;
    }
    std::filesystem::path sidecar = csv_path;
    sidecar += ".json";
    std::ofstream f(sidecar, std::ios::binary);
    f << config.dump(2) << '\n';
    std::cout << "wrote " << csv_path.string() << " and " << sidecar.string() << "\n";
}

json engine_json(const EngineSpec& e) {
    return {{"scheme", scheme_name(e.scheme)}, {"c_r", e.c_r}, {"c_s", e.c_s}};
}

json match_config_json(const MatchConfig& cfg) {
    return {{"game", cfg.game},
            {"engine_a", engine_json(cfg.engine_a)},
            {"engine_b", engine_json(cfg.engine_b)},
            {"playouts", cfg.playouts},
            {"games", cfg.games},
            {"seed", cfg.seed},
            {"alternate_colors", cfg.alternate_colors},
            {"threads", cfg.threads},
            {"eye_filter", cfg.eye_filter},
            {"recommend",
             cfg.recommend == MoveRecommend::kRobustChild ? "robust" : "max_mean"}};
}

struct MatchFlags {
    std::string game = "go";
    std::string a_scheme = "asymmetric";
    std::string b_scheme = "uct";
    double a_cr = -1.0, a_cs = -1.0, b_c = -1.0, b_cs = -1.0;
    int playouts = 1000;
    int games = 200;
    std::uint64_t seed = 1;
    int threads = 0;
    bool no_eye_filter = false;
    bool no_alternate = false;
    std::string recommend = "robust";
    std::string out;
};

void add_match_flags(CLI::App* cmd, MatchFlags& f) {
    cmd->add_option("--game", f.game, "go | nogo | othello")->capture_default_str();
    cmd->add_option("--a-scheme", f.a_scheme, "engine A scheme: uct | sr_cr | asymmetric")
        ->capture_default_str();
    cmd->add_option("--a-cr", f.a_cr, "engine A c_r (default: per-game tuned constant)");
    cmd->add_option("--a-cs", f.a_cs, "engine A c_s (default: per-game tuned constant)");
    cmd->add_option("--b-scheme", f.b_scheme, "engine B scheme")->capture_default_str();
    cmd->add_option("--b-c", f.b_c, "engine B exploration constant");
    cmd->add_option("--b-cs", f.b_cs, "engine B c_s (non-UCT engine B only)");
    cmd->add_option("--playouts", f.playouts, "playouts per move, both engines")
        ->capture_default_str();
    cmd->add_option("--games", f.games, "games per match")->capture_default_str();
    cmd->add_option("--seed", f.seed, "master seed")->capture_default_str();
    cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)");
    cmd->add_flag("--no-eye-filter", f.no_eye_filter,
                  "disable the single-point-eye playout filter (go)");
    cmd->add_flag("--no-alternate", f.no_alternate, "engine A always plays Black");
    cmd->add_option("--recommend", f.recommend, "move recommendation: robust | max_mean")
        ->capture_default_str();
    cmd->add_option("--out", f.out, "output CSV path (default results/<cmd>/<timestamp>.csv)");
}

MatchConfig build_match_config(const MatchFlags& f) {
    MatchConfig cfg;
    cfg.game = f.game;
    if (cfg.game != "go" && cfg.game != "nogo" && cfg.game != "othello")
        throw std::invalid_argument("unknown game: " + cfg.game);
    cfg.engine_a = default_engine(f.game, parse_scheme(f.a_scheme));
    cfg.engine_b = default_engine(f.game, parse_scheme(f.b_scheme));
    if (f.a_cr >= 0) cfg.engine_a.c_r = f.a_cr;
    if (f.a_cs >= 0) cfg.engine_a.c_s = f.a_cs;
    if (f.b_c >= 0) cfg.engine_b.c_r = f.b_c;
    if (f.b_cs >= 0) cfg.engine_b.c_s = f.b_cs;
    cfg.playouts = f.playouts;
    cfg.games = f.games;
    cfg.seed = f.seed;
    cfg.threads = f.threads;
    cfg.eye_filter = !f.no_eye_filter;
    cfg.alternate_colors = !f.no_alternate;
    cfg.recommend = parse_recommend(f.recommend);
    return cfg;
}

int run_testbed(const std::vector<std::string>& biases, const std::vector<std::string>& policies,
                const std::vector<double>& cs, int problems, int arms, int plays,
                std::uint64_t seed, int threads, const std::string& recommend,
                const std::string& out) {
    TestbedConfig cfg;
    cfg.problems = problems;
    cfg.arms = arms;
    cfg.plays = plays;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.recommend = recommend == "most_pulled" ? MabRecommend::kMostPulled
                                               : MabRecommend::kEmpiricalBest;
    if (recommend != "most_pulled" && recommend != "empirical_best")
        throw std::invalid_argument("unknown recommendation rule: " + recommend);
    if (!biases.empty()) {
        cfg.biases.clear();
        for (const auto& b : biases) cfg.biases.push_back(parse_bias(b));
    }
    if (!policies.empty()) {
        if (!cs.empty() && cs.size() != policies.size())
            throw std::invalid_argument("--c must be given once per --policy");
        for (std::size_t i = 0; i < policies.size(); ++i) {
            BanditPolicy p;
            if (policies[i] == "ucb")
                p.kind = PolicyKind::kUcb;
            else if (policies[i] == "ucb_sqrt")
                p.kind = PolicyKind::kUcbSqrt;
            else
                throw std::invalid_argument("unknown policy: " + policies[i]);
            p.c = cs.empty() ? 1.0 : cs[i];
            cfg.policies.push_back({policies[i], p});
        }
    }

    const auto rows = run_experiment(cfg);
    std::ostringstream csv;
    write_testbed_csv(csv, rows);

    json jc = {{"problems", cfg.problems}, {"arms", cfg.arms},     {"plays", cfg.plays},
               {"seed", cfg.seed},         {"threads", cfg.threads}};
    jc["biases"] = json::array();
    for (auto b : cfg.biases) jc["biases"].push_back(bias_name(b));
    jc["policies"] = json::array();
    for (const auto& p :
         cfg.policies.empty()
             ? std::vector<TestbedPolicy>{{"ucb", {PolicyKind::kUcb, 1.0}},
                                          {"ucb_sqrt", {PolicyKind::kUcbSqrt, 1.0}}}
             : cfg.policies)
        jc["policies"].push_back({{"name", p.name}, {"c", p.policy.c}});
    jc["recommend"] = recommend;

    write_outputs(resolve_out(out, "testbed"), csv.str(), jc);
    return 0;
}

void print_match(const MatchConfig& cfg, const MatchResult& r) {
    std::printf("%s: %d games, %d playouts/move: A %d wins, B %d wins, %d draws\n",
                cfg.game.c_str(), cfg.games, cfg.playouts, r.wins_a, r.wins_b, r.draws);
    std::printf("win rate A = %.4f +- %.4f (95%% CI)\n", r.win_rate_a, r.ci_halfwidth);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymmetric-MCTS experiment harness"};
    app.require_subcommand(1);

    // testbed
    auto* tb = app.add_subcommand("testbed", "biased-reward bandit testbed");
    int tb_problems = 200, tb_arms = 20, tb_plays = 2000, tb_threads = 0;
    std::uint64_t tb_seed = 1;
    std::vector<std::string> tb_bias, tb_policy;
    std::vector<double> tb_c;
    std::string tb_recommend = "empirical_best", tb_out;
    tb->add_option("--problems", tb_problems)->capture_default_str();
    tb->add_option("--arms", tb_arms)->capture_default_str();
    tb->add_option("--plays", tb_plays)->capture_default_str();
    tb->add_option("--bias", tb_bias, "none | ascending | descending (repeatable)");
    tb->add_option("--policy", tb_policy, "ucb | ucb_sqrt (repeatable)");
    tb->add_option("--c", tb_c, "exploration constant per --policy");
    tb->add_option("--seed", tb_seed)->capture_default_str();
    tb->add_option("--threads", tb_threads);
    tb->add_option("--recommend", tb_recommend, "empirical_best | most_pulled")
        ->capture_default_str();
    tb->add_option("--out", tb_out);

    // match
    auto* mt = app.add_subcommand("match", "engine-vs-engine match");
    MatchFlags mf;
    add_match_flags(mt, mf);

    // sweep
    auto* sw = app.add_subcommand("sweep", "parameter sweep of repeated matches");
    MatchFlags sf;
    add_match_flags(sw, sf);
    std::string sw_param = "c";
    std::vector<double> sw_values;
    sw->add_option("--param", sw_param, "c | c_r | c_s | playouts")->capture_default_str();
    sw->add_option("--values", sw_values, "swept values")->required();

    // scaling
    auto* sc = app.add_subcommand("scaling", "playout-scaling study");
    MatchFlags cf;
    add_match_flags(sc, cf);
    std::vector<int> sc_playouts{1000, 3000, 5000, 7000, 9000, 11000};
    sc->add_option("--playouts-list", sc_playouts, "playout budgets")->capture_default_str();

    try {
        app.parse(argc, argv);

        if (tb->parsed())
            return run_testbed(tb_bias, tb_policy, tb_c, tb_problems, tb_arms, tb_plays, tb_seed,
                               tb_threads, tb_recommend, tb_out);

        if (mt->parsed()) {
            const MatchConfig cfg = build_match_config(mf);
            const MatchResult r = play_match(cfg);
            print_match(cfg, r);
            std::ostringstream csv;
            write_match_csv(csv, cfg, r);
            write_outputs(resolve_out(mf.out, "match"), csv.str(), match_config_json(cfg));
            return 0;
        }

        if (sw->parsed()) {
            const MatchConfig base = build_match_config(sf);
            const auto rows = sweep(base, sw_param, sw_values);
            for (const auto& row : rows) {
                std::printf("%s = %g: ", sw_param.c_str(), row.value);
                print_match(base, row.result);
            }
            std::ostringstream csv;
            write_sweep_csv(csv, sw_param, rows);
            json jc = match_config_json(base);
            jc["sweep_param"] = sw_param;
            jc["sweep_values"] = sw_values;
            write_outputs(resolve_out(sf.out, "sweep"), csv.str(), jc);
            return 0;
        }

        if (sc->parsed()) {
            const MatchConfig base = build_match_config(cf);
            std::vector<double> values(sc_playouts.begin(), sc_playouts.end());
            const auto rows = sweep(base, "playouts", values);
            for (const auto& row : rows) {
                std::printf("playouts = %d: ", int(row.value));
                print_match(base, row.result);
            }
            std::ostringstream csv;
            write_sweep_csv(csv, "playouts", rows);
            json jc = match_config_json(base);
            jc["playouts_list"] = sc_playouts;
            write_outputs(resolve_out(cf.out, "scaling"), csv.str(), jc);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
