#ifndef ASYMCTS_MCTS_HPP
#define ASYMCTS_MCTS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asymcts/bandit.hpp"
#include "asymcts/game.hpp"

namespace asymcts {

enum class NodeType : std::uint8_t { kMax, kMin };

// Root is depth 0 and a max node; single-agent domains are all-max.
constexpr NodeType node_type_of(int depth, bool single_agent = false) {
    if (single_agent) return NodeType::kMax;
    return depth % 2 == 0 ? NodeType::kMax : NodeType::kMin;
}

enum class SchemeKind : std::uint8_t { kUct, kSrCr, kAsymmetric };

inline const char* scheme_name(SchemeKind k) {
    switch (k) {
        case SchemeKind::kUct: return "uct";
        case SchemeKind::kSrCr: return "sr_cr";
        default: return "asymmetric";
    }
}

inline SchemeKind parse_scheme(const std::string& s) {
    if (s == "uct") return SchemeKind::kUct;
    if (s == "sr_cr" || s == "srcr") return SchemeKind::kSrCr;
    if (s == "asymmetric" || s == "asym") return SchemeKind::kAsymmetric;
    throw std::invalid_argument("unknown scheme: " + s);
}

// UCT uses the UCB index with c_r everywhere (c_s unused); SR+CR applies the
// UCB-sqrt index with c_s at the root only; Asymmetric applies UCB-sqrt at
// every max node and UCB at every min node.
struct SearchScheme {
    SchemeKind kind = SchemeKind::kUct;
    double c_r = 0.5;
    double c_s = 0.4;
};

// Selection priority of a child from its parent's frame. Unvisited children
// have absolute priority (the pseudocode's "ucb <- infinity"); selection
// breaks those (and index ties) uniformly at random rather than keeping the
// last maximal child.
inline double child_index(NodeType parent_type, bool parent_is_root, const SearchScheme& scheme,
                          double w, std::uint64_t t_child, std::uint64_t t_parent) {
    if (t_child == 0) return std::numeric_limits<double>::infinity();
    switch (scheme.kind) {
        case SchemeKind::kUct:
            return ucb_index(w, double(t_child), double(t_parent), scheme.c_r);
        case SchemeKind::kSrCr:
            return parent_is_root ? ucb_sqrt_index(w, double(t_child), double(t_parent), scheme.c_s)
                                  : ucb_index(w, double(t_child), double(t_parent), scheme.c_r);
        default:
            return parent_type == NodeType::kMax
                       ? ucb_sqrt_index(w, double(t_child), double(t_parent), scheme.c_s)
                       : ucb_index(w, double(t_child), double(t_parent), scheme.c_r);
    }
}

enum class MoveRecommend : std::uint8_t { kRobustChild, kMaxMean };

inline MoveRecommend parse_recommend(const std::string& s) {
    if (s == "robust") return MoveRecommend::kRobustChild;
    if (s == "max_mean") return MoveRecommend::kMaxMean;
    throw std::invalid_argument("unknown recommendation rule: " + s);
}

// w is stored from the perspective of the player choosing among this node's
// siblings (the chooser at the parent), so plain argmax selection is correct
// at both node types; max_node records who chooses at this node itself.
template <class MoveT>
struct SearchNode {
    MoveT move{};
    double w = 0.0;
    std::uint32_t t = 0;
    std::int32_t first_child = -1;
    std::uint16_t n_children = 0;
    bool expanded = false;
    bool max_node = false;
};

template <class MoveT>
struct RootChildStat {
    MoveT move{};
    double w = 0.0;
    std::uint32_t t = 0;
};

template <class MoveT>
struct SearchResult {
    MoveT best_move{};
    std::vector<RootChildStat<MoveT>> root_children_stats;
    int playouts_used = 0;
};

// One line per iteration: the selected path (moves from the root) and the
// backed-up result in the root player's perspective.
template <class MoveT>
struct IterationTrace {
    std::vector<MoveT> path;
    double result = 0.0;
};

namespace detail {

template <class MoveT, class R>
int select_child(const std::vector<SearchNode<MoveT>>& nodes, int ni, bool is_root,
                 const SearchScheme& scheme, R& rng) {
    const SearchNode<MoveT>& n = nodes[ni];
    const int first = n.first_child, count = n.n_children;

    int unvisited = 0;
    for (int i = 0; i < count; ++i)
        if (nodes[first + i].t == 0) ++unvisited;
    if (unvisited > 0) {
        std::size_t k = pick_index(rng, std::size_t(unvisited));
        for (int i = 0; i < count; ++i) {
            if (nodes[first + i].t != 0) continue;
            if (k == 0) return i;
            --k;
        }
    }

    const NodeType type = n.max_node ? NodeType::kMax : NodeType::kMin;
    double best = -std::numeric_limits<double>::infinity();
    int ties = 0;
    for (int i = 0; i < count; ++i) {
        const SearchNode<MoveT>& c = nodes[first + i];
        const double v = child_index(type, is_root, scheme, c.w, c.t, n.t);
        if (v > best) {
            best = v;
            ties = 1;
        } else if (v == best) {
            ++ties;
        }
    }
    std::size_t k = pick_index(rng, std::size_t(ties));
    for (int i = 0; i < count; ++i) {
        const SearchNode<MoveT>& c = nodes[first + i];
        const double v = child_index(type, is_root, scheme, c.w, c.t, n.t);
        if (v == best) {
            if (k == 0) return i;
            --k;
        }
    }
    throw std::logic_error("select_child: tie scan failed");  // unreachable
}

}  // namespace detail

// One full search from root_state: the root is pre-expanded, then exactly
// `playouts` iterations of select / (expand | simulate) / backpropagate.
// Selection descends by child_index until it reaches a child with t = 0
// (random playout from there) or a terminal state (its exact value is backed
// up, and terminal nodes are never expanded); an unexpanded visited node is
// expanded and descent continues one step into it. Every node on the path,
// root included, has its visit count incremented exactly once per iteration.
template <Game G, class R>
SearchResult<typename G::Move> run_search(
    const G& game, const typename G::State& root_state, const SearchScheme& scheme, int playouts,
    R& rng, MoveRecommend recommend = MoveRecommend::kRobustChild,
    std::vector<IterationTrace<typename G::Move>>* trace = nullptr,
    std::vector<SearchNode<typename G::Move>>* dump_tree = nullptr) {
    using MoveT = typename G::Move;

    if (playouts <= 0) throw std::invalid_argument("run_search: playouts must be positive");
    if (game.is_terminal(root_state)) throw std::invalid_argument("run_search: root is terminal");

    const Player root_player = game.to_move(root_state);
    std::vector<SearchNode<MoveT>> nodes;
    nodes.reserve(1024);
    nodes.push_back(SearchNode<MoveT>{});
    nodes[0].max_node = true;

    auto expand = [&](int ni, const typename G::State& s) {
        auto moves = game.legal_moves(s);
        if (moves.empty()) throw std::logic_error("run_search: no moves at non-terminal state");
        const bool child_max = G::kSingleAgent ? true : !nodes[ni].max_node;
        nodes[ni].first_child = std::int32_t(nodes.size());
        nodes[ni].n_children = std::uint16_t(moves.size());
        nodes[ni].expanded = true;
        for (const MoveT& m : moves) {
            SearchNode<MoveT> c;
            c.move = m;
            c.max_node = child_max;
            nodes.push_back(c);
        }
    };
    expand(0, root_state);

    const int depth_cap = game.max_game_length() + 2;
    std::vector<int> path;
    path.reserve(64);

    for (int it = 0; it < playouts; ++it) {
        typename G::State state = root_state;
        path.clear();
        path.push_back(0);
        int ni = 0;
        double r_first = 0.0;
        for (int depth = 0;; ++depth) {
            if (depth > depth_cap) throw std::logic_error("run_search: descent exceeded game length");
            if (game.is_terminal(state)) {
                r_first = game.terminal_value(state);
                break;
            }
            if (ni != 0 && nodes[ni].t == 0) {
                r_first = random_playout(game, state, rng);
                break;
            }
            if (!nodes[ni].expanded) expand(ni, state);
            const int ci = detail::select_child(nodes, ni, ni == 0, scheme, rng);
            const int child = nodes[ni].first_child + ci;
            state = game.apply(state, nodes[child].move);
            path.push_back(child);
            ni = child;
        }

        const double r_root = root_player == Player::kFirst ? r_first : 1.0 - r_first;
        for (std::size_t k = 0; k < path.size(); ++k) {
            SearchNode<MoveT>& n = nodes[path[k]];
            const double contrib =
                k == 0 ? r_root : (nodes[path[k - 1]].max_node ? r_root : 1.0 - r_root);
            n.w = (n.w * n.t + contrib) / double(n.t + 1);
            n.t += 1;
        }

        if (trace) {
            IterationTrace<MoveT> tr;
            tr.result = r_root;
            tr.path.reserve(path.size() - 1);
            for (std::size_t k = 1; k < path.size(); ++k) tr.path.push_back(nodes[path[k]].move);
            trace->push_back(std::move(tr));
        }
    }

    if (dump_tree) *dump_tree = nodes;

    SearchResult<MoveT> res;
    res.playouts_used = playouts;
    const int first = nodes[0].first_child, count = nodes[0].n_children;
    res.root_children_stats.reserve(count);
    for (int i = 0; i < count; ++i) {
        const SearchNode<MoveT>& c = nodes[first + i];
        res.root_children_stats.push_back({c.move, c.w, c.t});
    }

    auto key = [&](const SearchNode<MoveT>& c) {
        return recommend == MoveRecommend::kRobustChild ? std::pair<double, double>(double(c.t), c.w)
                                                        : std::pair<double, double>(c.w, double(c.t));
    };
    std::pair<double, double> best(-1.0, -1.0);
    int ties = 0;
    for (int i = 0; i < count; ++i) {
        const auto v = key(nodes[first + i]);
        if (v > best) {
            best = v;
            ties = 1;
        } else if (v == best) {
            ++ties;
        }
    }
    std::size_t k = pick_index(rng, std::size_t(ties));
    for (int i = 0; i < count; ++i) {
        if (key(nodes[first + i]) == best) {
            if (k == 0) {
                res.best_move = nodes[first + i].move;
                break;
            }
            --k;
        }
    }
    return res;
}

}  // namespace asymcts

#endif  // ASYMCTS_MCTS_HPP
