#ifndef ASYMCTS_BOARD9_HPP
#define ASYMCTS_BOARD9_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "asymcts/game.hpp"

namespace asymcts {

inline constexpr int kB9Size = 9;
inline constexpr int kB9Points = 81;
inline constexpr std::uint8_t kB9Pass = 81;

enum class Stone : std::uint8_t { kEmpty = 0, kBlack = 1, kWhite = 2 };

constexpr Stone stone_of(Player p) {
    return p == Player::kFirst ? Stone::kBlack : Stone::kWhite;
}
constexpr Stone other(Stone s) {
    return s == Stone::kBlack ? Stone::kWhite : Stone::kBlack;
}

namespace detail {

struct PointList {
    std::array<std::uint8_t, 4> at{};
    std::uint8_t count = 0;
};

constexpr std::array<PointList, kB9Points> make_adjacency(bool diagonal) {
    std::array<PointList, kB9Points> t{};
    for (int y = 0; y < kB9Size; ++y)
        for (int x = 0; x < kB9Size; ++x) {
            PointList& l = t[y * kB9Size + x];
            auto add = [&](int nx, int ny) {
                if (nx >= 0 && nx < kB9Size && ny >= 0 && ny < kB9Size)
                    l.at[l.count++] = std::uint8_t(ny * kB9Size + nx);
            };
            if (diagonal) {
                add(x + 1, y + 1);
                add(x + 1, y - 1);
                add(x - 1, y + 1);
                add(x - 1, y - 1);
            } else {
                add(x + 1, y);
                add(x - 1, y);
                add(x, y + 1);
                add(x, y - 1);
            }
        }
    return t;
}

inline constexpr auto kNeighbors = make_adjacency(false);
inline constexpr auto kDiagonals = make_adjacency(true);

constexpr std::array<std::array<std::uint64_t, kB9Points>, 3> make_zobrist() {
    std::array<std::array<std::uint64_t, kB9Points>, 3> z{};
    std::uint64_t s = 0x6b79b95f1c5a0e23ULL;
    for (int c = 1; c <= 2; ++c)
        for (int p = 0; p < kB9Points; ++p) {
            s = splitmix64(s);
            z[c][p] = s;
        }
    return z;
}

inline constexpr auto kZobrist = make_zobrist();

// Salt keeping reachable positions away from hash 0, which PositionSet uses
// as its empty-slot sentinel.
inline constexpr std::uint64_t kEmptyBoardHash = 0x9d3c8f1b2a47e655ULL;

}  // namespace detail

// Fixed-capacity open-addressing set of position hashes (superko ledger).
// Trivially copyable so states stay memcpy-able; capacity comfortably above
// the 243-move cap.
class PositionSet {
public:
    static constexpr std::size_t kSlots = 512;

    bool contains(std::uint64_t h) const {
        h = fix(h);
        std::size_t i = probe(h);
        while (slot_[i] != 0) {
            if (slot_[i] == h) return true;
            i = (i + 1) & (kSlots - 1);
        }
        return false;
    }

    void insert(std::uint64_t h) {
        h = fix(h);
        std::size_t i = probe(h);
        while (slot_[i] != 0) {
            if (slot_[i] == h) return;
            i = (i + 1) & (kSlots - 1);
        }
        slot_[i] = h;
        ++count_;
        if (count_ > kSlots / 2) throw std::logic_error("PositionSet: overfull");
    }

    std::uint16_t size() const { return count_; }

private:
    static std::uint64_t fix(std::uint64_t h) { return h == 0 ? 1 : h; }
    static std::size_t probe(std::uint64_t h) {
        return std::size_t(splitmix64(h)) & (kSlots - 1);
    }
    std::array<std::uint64_t, kSlots> slot_{};
    std::uint16_t count_ = 0;
};

// 9x9 stone board with chain tracking via pseudo-liberties. A chain's
// pseudo-liberty count is the sum over its stones of adjacent empty points
// (duplicates included); it is zero exactly when the real liberty count is
// zero, which is all capture/suicide logic needs. root_[p] points directly
// at the chain representative for every occupied p (relabelled on merge, so
// lookups are a single read), next_[p] is a circular list of chain stones.
class ChainBoard {
public:
    ChainBoard() { clear(); }

    void clear() {
        stone_.fill(std::uint8_t(Stone::kEmpty));
        root_.fill(0);
        next_.fill(0);
        pseudo_.fill(0);
        size_.fill(0);
        hash_ = detail::kEmptyBoardHash;
        empty_count_ = kB9Points;
        for (int p = 0; p < kB9Points; ++p) {
            empties_[p] = std::uint8_t(p);
            empty_pos_[p] = std::uint8_t(p);
        }
    }

    Stone at(int p) const { return Stone(stone_[p]); }
    std::uint64_t hash() const { return hash_; }
    int empty_count() const { return empty_count_; }
    std::uint8_t empty_point(int i) const { return empties_[i]; }
    int stones_on_board() const { return kB9Points - empty_count_; }

    struct Analysis {
        bool occupied = false;
        bool playable = false;  // has a liberty after resolving captures
        std::uint8_t empty_adj = 0;
        std::uint8_t n_captured = 0;
        std::array<std::uint8_t, 4> captured_roots{};
        bool captures_any() const { return n_captured > 0; }
    };

    // Consequences of placing `color` at empty point p; does not mutate.
    Analysis analyze(int p, Stone color) const {
        Analysis a;
        if (Stone(stone_[p]) != Stone::kEmpty) {
            a.occupied = true;
            return a;
        }
        std::array<std::uint8_t, 4> own_roots{}, en_roots{};
        std::array<std::uint8_t, 4> own_adj{}, en_adj{};
        int n_own = 0, n_en = 0;
        const auto& nb = detail::kNeighbors[p];
        for (int i = 0; i < nb.count; ++i) {
            const int q = nb.at[i];
            const Stone s = Stone(stone_[q]);
            if (s == Stone::kEmpty) {
                ++a.empty_adj;
            } else if (s == color) {
                const std::uint8_t r = root_[q];
                int j = 0;
                while (j < n_own && own_roots[j] != r) ++j;
                if (j == n_own) own_roots[n_own++] = r;
                ++own_adj[j];
            } else {
                const std::uint8_t r = root_[q];
                int j = 0;
                while (j < n_en && en_roots[j] != r) ++j;
                if (j == n_en) en_roots[n_en++] = r;
                ++en_adj[j];
            }
        }
        for (int j = 0; j < n_en; ++j)
            if (pseudo_[en_roots[j]] == en_adj[j])
                a.captured_roots[a.n_captured++] = en_roots[j];

        bool own_breathes = false;
        for (int j = 0; j < n_own && !own_breathes; ++j)
            own_breathes = pseudo_[own_roots[j]] > own_adj[j];
        a.playable = a.empty_adj > 0 || a.n_captured > 0 || own_breathes;
        return a;
    }

    // Position hash after the move described by `a` (captures included).
    std::uint64_t hash_after(int p, Stone color, const Analysis& a) const {
        std::uint64_t h = hash_ ^ detail::kZobrist[int(color)][p];
        const Stone enemy = other(color);
        for (int j = 0; j < a.n_captured; ++j) {
            const int r = a.captured_roots[j];
            int s = r;
            do {
                h ^= detail::kZobrist[int(enemy)][s];
                s = next_[s];
            } while (s != r);
        }
        return h;
    }

    // Executes a placement previously analyzed as playable.
    void place(int p, Stone color, const Analysis& a) {
        const Stone enemy = other(color);
        occupy(p, color);

        root_[p] = std::uint8_t(p);
        next_[p] = std::uint8_t(p);
        pseudo_[p] = a.empty_adj;
        size_[p] = 1;

        // Neighboring chains lose p as a liberty.
        std::array<std::uint8_t, 4> own_roots{};
        int n_own = 0;
        const auto& nb = detail::kNeighbors[p];
        for (int i = 0; i < nb.count; ++i) {
            const int q = nb.at[i];
            const Stone s = Stone(stone_[q]);
            if (s == Stone::kEmpty) continue;
            const std::uint8_t r = root_[q];
            --pseudo_[r];
            if (s == color) {
                bool seen = false;
                for (int j = 0; j < n_own; ++j) seen = seen || own_roots[j] == r;
                if (!seen) own_roots[n_own++] = r;
            }
        }

        for (int j = 0; j < a.n_captured; ++j) remove_chain(a.captured_roots[j], enemy);

        // Merge the new stone with adjacent friendly chains (largest survives).
        std::uint8_t surv = std::uint8_t(p);
        for (int j = 0; j < n_own; ++j)
            if (size_[own_roots[j]] > size_[surv]) surv = own_roots[j];
        for (int j = 0; j < n_own; ++j) merge_into(surv, own_roots[j]);
        if (surv != p) merge_into(surv, std::uint8_t(p));
    }

    // True eye of `color` at empty point p: every on-board orthogonal
    // neighbor is own color, and enemy diagonals are at most 1 in the
    // interior, 0 on the edge/corner.
    bool is_single_point_eye(int p, Stone color) const {
        const auto& nb = detail::kNeighbors[p];
        for (int i = 0; i < nb.count; ++i)
            if (Stone(stone_[nb.at[i]]) != color) return false;
        const auto& dg = detail::kDiagonals[p];
        int enemy_diag = 0;
        const Stone enemy = other(color);
        for (int i = 0; i < dg.count; ++i)
            if (Stone(stone_[dg.at[i]]) == enemy) ++enemy_diag;
        if (dg.count == 4) return enemy_diag <= 1;
        return enemy_diag == 0;
    }

    // Full consistency check against a from-scratch recomputation: chain
    // membership, pseudo-liberties, sizes, hash and the empty-point index.
    void validate() const {
        std::array<int, kB9Points> seen{};
        std::uint64_t h = detail::kEmptyBoardHash;
        for (int p = 0; p < kB9Points; ++p) {
            if (Stone(stone_[p]) == Stone::kEmpty) continue;
            h ^= detail::kZobrist[stone_[p]][p];
            if (seen[p]) continue;
            // flood fill the chain from p
            std::array<std::uint8_t, kB9Points> stack{};
            std::array<bool, kB9Points> in{};
            int top = 0, n_stones = 0, pseudo = 0;
            stack[top++] = std::uint8_t(p);
            in[p] = true;
            const std::uint8_t r = root_[p];
            while (top > 0) {
                const int q = stack[--top];
                seen[q] = 1;
                ++n_stones;
                if (root_[q] != r) throw std::logic_error("validate: split root");
                const auto& nb = detail::kNeighbors[q];
                for (int i = 0; i < nb.count; ++i) {
                    const int w = nb.at[i];
                    if (Stone(stone_[w]) == Stone::kEmpty) {
                        ++pseudo;
                    } else if (stone_[w] == stone_[q] && !in[w]) {
                        in[w] = true;
                        stack[top++] = std::uint8_t(w);
                    }
                }
            }
            if (Stone(stone_[r]) != Stone(stone_[p]) || !in[r])
                throw std::logic_error("validate: root not in chain");
            if (pseudo_[r] != pseudo) throw std::logic_error("validate: pseudo-liberty mismatch");
            if (pseudo == 0) throw std::logic_error("validate: chain with zero liberties");
            if (size_[r] != n_stones) throw std::logic_error("validate: size mismatch");
            // next_ ring must visit exactly the chain
            int ring = 0, s = r;
            do {
                if (!in[s]) throw std::logic_error("validate: ring leaves chain");
                ++ring;
                s = next_[s];
            } while (s != r && ring <= kB9Points);
            if (ring != n_stones) throw std::logic_error("validate: ring size mismatch");
        }
        if (h != hash_) throw std::logic_error("validate: hash mismatch");
        int empties = 0;
        for (int p = 0; p < kB9Points; ++p)
            if (Stone(stone_[p]) == Stone::kEmpty) {
                ++empties;
                if (empties_[empty_pos_[p]] != p) throw std::logic_error("validate: empty index");
            }
        if (empties != empty_count_) throw std::logic_error("validate: empty count");
    }

private:
    void occupy(int p, Stone color) {
        stone_[p] = std::uint8_t(color);
        hash_ ^= detail::kZobrist[int(color)][p];
        const std::uint8_t last = empties_[--empty_count_];
        const std::uint8_t pos = empty_pos_[p];
        empties_[pos] = last;
        empty_pos_[last] = pos;
    }

    void vacate(int p, Stone color) {
        stone_[p] = std::uint8_t(Stone::kEmpty);
        hash_ ^= detail::kZobrist[int(color)][p];
        empties_[empty_count_] = std::uint8_t(p);
        empty_pos_[p] = empty_count_;
        ++empty_count_;
    }

    void remove_chain(std::uint8_t r, Stone color) {
        int s = r;
        // first pass: restore liberties to adjacent surviving chains
        do {
            const auto& nb = detail::kNeighbors[s];
            for (int i = 0; i < nb.count; ++i) {
                const int q = nb.at[i];
                if (Stone(stone_[q]) == Stone::kEmpty) continue;
                if (root_[q] == r) continue;  // same dying chain
                ++pseudo_[root_[q]];
            }
            s = next_[s];
        } while (s != r);
        // second pass: clear the stones
        s = r;
        do {
            const int nxt = next_[s];
            vacate(s, color);
            s = nxt;
        } while (s != r);
    }

    void merge_into(std::uint8_t surv, std::uint8_t r) {
        if (surv == r) return;
        // relabel and splice the circular lists
        int s = r;
        do {
            root_[s] = surv;
            s = next_[s];
        } while (s != r);
        std::uint8_t tmp = next_[surv];
        next_[surv] = next_[r];
        next_[r] = tmp;
        pseudo_[surv] = std::uint16_t(pseudo_[surv] + pseudo_[r]);
        size_[surv] = std::uint8_t(size_[surv] + size_[r]);
    }

    std::array<std::uint8_t, kB9Points> stone_;
    std::array<std::uint8_t, kB9Points> root_;
    std::array<std::uint8_t, kB9Points> next_;
    std::array<std::uint16_t, kB9Points> pseudo_;
    std::array<std::uint8_t, kB9Points> size_;
    std::array<std::uint8_t, kB9Points> empties_;
    std::array<std::uint8_t, kB9Points> empty_pos_;
    std::uint64_t hash_;
    std::uint8_t empty_count_;
};

// Coordinates: columns a..j skipping i, rows 1..9 bottom-up ("a1".."j9").
inline std::string point_name_9(int p) {
    if (p == kB9Pass) return "pass";
    const int x = p % kB9Size, y = p / kB9Size;
    char col = char('a' + x + (x >= 8 ? 1 : 0));  // skip 'i'
    return std::string(1, col) + std::to_string(y + 1);
}

inline int parse_point_9(const std::string& s) {
    if (s == "pass") return kB9Pass;
    if (s.size() < 2) throw std::invalid_argument("bad point: " + s);
    char c = s[0];
    if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
    if (c == 'i' || c < 'a' || c > 'j') throw std::invalid_argument("bad column: " + s);
    const int x = (c > 'i') ? c - 'a' - 1 : c - 'a';
    const int y = std::stoi(s.substr(1)) - 1;
    if (y < 0 || y >= kB9Size) throw std::invalid_argument("bad row: " + s);
    return y * kB9Size + x;
}

// Text diagram, one char per point (`.XO`), row 9 on top, with axes.
template <class BoardLike>
std::string board_diagram_9(const BoardLike& b) {
    std::string out;
    for (int y = kB9Size - 1; y >= 0; --y) {
        out += char('1' + y);
        out += ' ';
        for (int x = 0; x < kB9Size; ++x) {
            const Stone s = b.at(y * kB9Size + x);
            out += s == Stone::kEmpty ? '.' : (s == Stone::kBlack ? 'X' : 'O');
            if (x + 1 < kB9Size) out += ' ';
        }
        out += '\n';
    }
    out += "  a b c d e f g h j\n";
    return out;
}

}  // namespace asymcts

#endif  // ASYMCTS_BOARD9_HPP
