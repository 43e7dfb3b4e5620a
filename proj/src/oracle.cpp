#include "mcm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace mcm::oracle {

namespace {

struct Exhaustive {
    const Graph& g;
    std::vector<char> used;
    int best = 0;

    void run(Vertex from, int count, int unused) {
        if (count + unused / 2 <= best) return;
        Vertex v = from;
        while (v <= g.vertex_count() && used[v]) ++v;
        if (v > g.vertex_count()) {
            best = std::max(best, count);
            return;
        }
        used[v] = 1;
        for (int id : g.incident(v)) {
            Vertex w = g.other(id, v);
            if (used[w]) continue;
            used[w] = 1;
            run(v + 1, count + 1, unused - 2);
            used[w] = 0;
        }
        run(v + 1, count, unused - 1);
        used[v] = 0;
    }
};

}  // namespace

int brute_force_max(const Graph& g) {
    if (g.edge_count() > kBruteForceEdgeLimit)
        throw TooLarge("brute_force_max: more than " + std::to_string(kBruteForceEdgeLimit) + " edges");
    Exhaustive ex{g, std::vector<char>(g.vertex_count() + 1, 0)};
    ex.run(1, 0, g.vertex_count());
    return ex.best;
}

namespace {

// Textbook Edmonds search with explicit blossom bases (0-based internally).
class Edmonds {
public:
    explicit Edmonds(const Graph& g) : n_(g.vertex_count()), adj_(n_) {
        for (const Edge& e : g.edges()) {
            adj_[e.u - 1].push_back(e.v - 1);
            adj_[e.v - 1].push_back(e.u - 1);
        }
        match_.assign(n_, -1);
        parent_.assign(n_, -1);
        base_.resize(n_);
        used_.assign(n_, 0);
        in_blossom_.assign(n_, 0);
        lca_mark_.assign(n_, 0);
    }

    Matching solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : adj_[v]) {
                if (match_[w] == -1) {
                    match_[w] = v;
                    match_[v] = w;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int t = search(v);
            while (t != -1) {
                int pv = parent_[t];
                int ppv = match_[pv];
                match_[t] = pv;
                match_[pv] = t;
                t = ppv;
            }
        }
        Matching m(n_);
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) m.set_pair(v + 1, match_[v] + 1);
        return m;
    }

private:
    int lca(int a, int b) {
        ++stamp_;
        for (;;) {
            a = base_[a];
            lca_mark_[a] = stamp_;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (lca_mark_[b] == stamp_) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int search(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        std::queue<int> q;
        used_[root] = 1;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
    std::vector<int> lca_mark_;
    int stamp_ = 0;
};

}  // namespace

Matching reference_blossom_max(const Graph& g) {
    return Edmonds(g).solve();
}

Levels level_oracle(const Graph& g, const Matching& m) {
    const int n = g.vertex_count();
    if (n > 200) throw TooLarge("level_oracle: more than 200 vertices");
    Levels lv{std::vector<int>(n + 1, kInfinity), std::vector<int>(n + 1, kInfinity)};
    std::queue<std::pair<Vertex, int>> q;
    for (Vertex v = 1; v <= n; ++v) {
        if (m.is_free(v)) {
            lv.even[v] = 0;
            q.push({v, 0});
        }
    }
    while (!q.empty()) {
        auto [v, parity] = q.front();
        q.pop();
        if (parity == 0) {
            for (int id : g.incident(v)) {
                Vertex w = g.other(id, v);
                if (m.mate(v) == w || lv.odd[w] != kInfinity) continue;
                lv.odd[w] = lv.even[v] + 1;
                q.push({w, 1});
            }
        } else {
            Vertex w = m.mate(v);
            if (w != kNone && lv.even[w] == kInfinity) {
                lv.even[w] = lv.odd[v] + 1;
                q.push({w, 0});
            }
        }
    }
    return lv;
}

namespace {

// reach[v][mask]: a simple alternating path from a free vertex uses exactly
// the vertices of mask and ends at v. Its length is popcount(mask) - 1.
struct PathStates {
    const Graph& g;
    const Matching& m;
    int n;
    std::vector<std::vector<char>> reach;

    PathStates(const Graph& graph, const Matching& mm) : g(graph), m(mm), n(graph.vertex_count()) {
        if (n > 12) throw TooLarge("path enumeration: more than 12 vertices");
        const std::uint32_t full = 1u << n;
        reach.assign(n + 1, std::vector<char>(full, 0));
        for (Vertex f = 1; f <= n; ++f)
            if (m.is_free(f)) reach[f][bit(f)] = 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            int len = std::popcount(mask) - 1;
            for (Vertex v = 1; v <= n; ++v) {
                if (!reach[v][mask]) continue;
                for_each_next(v, len, [&](Vertex w) {
                    if (!(mask & bit(w))) reach[w][mask | bit(w)] = 1;
                });
            }
        }
    }

    static std::uint32_t bit(Vertex v) { return 1u << (v - 1); }

    // Edge allowed after a prefix of length len ending at v.
    template <class F>
    void for_each_next(Vertex v, int len, F&& f) const {
        if (len % 2 == 0) {
            for (int id : g.incident(v)) {
                Vertex w = g.other(id, v);
                if (m.mate(v) != w) f(w);
            }
        } else if (m.mate(v) != kNone) {
            f(m.mate(v));
        }
    }

    bool edge_ok(Vertex x, Vertex v, int len_before) const {
        bool matched = m.mate(x) == v;
        return len_before % 2 == 0 ? !matched && g.has_edge(x, v) : matched;
    }

    Levels levels() const {
        Levels lv{std::vector<int>(n + 1, kInfinity), std::vector<int>(n + 1, kInfinity)};
        for (Vertex v = 1; v <= n; ++v) {
            for (std::uint32_t mask = 1; mask < reach[v].size(); ++mask) {
                if (!reach[v][mask]) continue;
                int len = std::popcount(mask) - 1;
                int& slot = len % 2 == 0 ? lv.even[v] : lv.odd[v];
                slot = std::min(slot, len);
            }
        }
        return lv;
    }
};

}  // namespace

Levels path_levels(const Graph& g, const Matching& m) {
    return PathStates(g, m).levels();
}

PetalCheck petal_property_check(const Graph& g, const Matching& m, const std::vector<PetalReport>& petals) {
    PetalCheck res;
    if (petals.empty()) return res;
    PathStates ps(g, m);
    Levels lv = ps.levels();
    const int n = g.vertex_count();
    auto fail = [&](std::string s) {
        res.ok = false;
        res.counterexample = std::move(s);
        return res;
    };
    for (const PetalReport& p : petals) {
        const Vertex b = p.bud;
        const std::uint32_t bb = PathStates::bit(b);
        std::vector<char> in_petal(n + 1, 0), in_union(n + 1, 0);
        for (Vertex v : p.members) in_petal[v] = 1;
        if (!in_petal[b]) return fail("bud " + std::to_string(b) + " not among petal members");
        in_union[b] = 1;
        for (Vertex v : p.members) {
            if (v == b) continue;
            const int L = lv.minlevel(v);
            if (L >= kInfinity) return fail("member " + std::to_string(v) + " has no alternating path");
            // Backward search over states of minlevel paths ending at v.
            std::vector<std::pair<Vertex, std::uint32_t>> stack;
            std::vector<std::vector<char>> seen(n + 1, std::vector<char>(ps.reach[1].size(), 0));
            for (std::uint32_t mask = 1; mask < ps.reach[v].size(); ++mask) {
                if (!ps.reach[v][mask] || std::popcount(mask) - 1 != L) continue;
                if (!(mask & bb))
                    return fail("a minlevel path of " + std::to_string(v) + " avoids bud " + std::to_string(b));
                seen[v][mask] = 1;
                stack.push_back({v, mask});
            }
            while (!stack.empty()) {
                auto [y, mask] = stack.back();
                stack.pop_back();
                if (y == b) continue;
                in_union[y] = 1;
                std::uint32_t prev = mask & ~PathStates::bit(y);
                int len_before = std::popcount(prev) - 1;
                for (Vertex x = 1; x <= n; ++x) {
                    if (!(prev & PathStates::bit(x)) || !ps.reach[x][prev] || seen[x][prev]) continue;
                    if (!ps.edge_ok(x, y, len_before)) continue;
                    seen[x][prev] = 1;
                    stack.push_back({x, prev});
                }
            }
        }
        for (Vertex v = 1; v <= n; ++v) {
            if (in_petal[v] != in_union[v])
                return fail("petal with bud " + std::to_string(b) + " differs from the union of minlevel paths at vertex " +
                            std::to_string(v));
        }
    }
    return res;
}

}  // namespace mcm::oracle
