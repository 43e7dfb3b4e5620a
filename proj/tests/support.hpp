#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mcm/graph.hpp"

namespace testing_support {

using mcm::Edge;
using mcm::Graph;
using mcm::Matching;
using mcm::Vertex;

inline Graph make_graph(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

inline Matching make_matching(int n, const std::vector<Edge>& pairs) {
    Matching m(n);
    for (const Edge& e : pairs) m.set_pair(e.u, e.v);
    return m;
}

struct Fixture {
    Graph graph;
    Matching matching;
};

// Triangle 3-4-5 hanging off the path 1-2-3.
inline Fixture fixture_g1() {
    return {make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}), make_matching(5, {{2, 3}, {4, 5}})};
}

// The triangle with a second free vertex attached at 5.
inline Fixture fixture_g2() {
    return {make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}), make_matching(6, {{2, 3}, {4, 5}})};
}

inline Fixture fixture_g9() {
    return {make_graph(8, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {6, 7}, {7, 8}}),
            make_matching(8, {{2, 3}, {4, 5}, {6, 7}})};
}

// Two components: the path 6..13 (edges listed first) and the G1 shape on 1..5.
inline Fixture fixture_g20() {
    return {make_graph(13, {{6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13},
                            {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
            make_matching(13, {{7, 8}, {9, 10}, {11, 12}, {2, 3}, {4, 5}})};
}

inline Graph petersen() {
    return make_graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                           {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [&](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

inline bool connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (int e : g.incident(v)) {
            Vertex w = g.other(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

// Graph on n vertices whose edge set is the given bitmask over all pairs
// (u<v) in lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

// Random connected graph: a random spanning tree plus extra random pairs,
// with the edge list shuffled so edge order carries no structure.
inline Graph random_connected(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::vector<std::vector<char>> has(n + 1, std::vector<char>(n + 1, 0));
    auto add = [&](Vertex u, Vertex v) {
        if (u == v || has[u][v]) return;
        has[u][v] = has[v][u] = 1;
        edges.push_back({u, v});
    };
    for (Vertex v = 2; v <= n; ++v) add(v, static_cast<Vertex>(1 + rng() % (v - 1)));
    const int pairs = n * (n - 1) / 2;
    const int extra = static_cast<int>(rng() % (pairs - (n - 1) + 1));
    for (int k = 0; k < extra; ++k) add(static_cast<Vertex>(1 + rng() % n), static_cast<Vertex>(1 + rng() % n));
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<Vertex> perm(n + 1);
    for (Vertex v = 0; v <= n; ++v) perm[v] = v;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(perm[e.u], perm[e.v]);
    return g;
}

// A random maximal-or-not matching: edges in random order, each kept with
// probability 1/2 when both ends are free.
inline Matching random_matching(const Graph& g, std::mt19937_64& rng) {
    Matching m(g.vertex_count());
    std::vector<int> ids(g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k) ids[k] = k;
    std::shuffle(ids.begin(), ids.end(), rng);
    for (int id : ids) {
        const Edge& e = g.edge(id);
        if (m.is_free(e.u) && m.is_free(e.v) && rng() % 2) m.set_pair(e.u, e.v);
    }
    return m;
}

}  // namespace testing_support
