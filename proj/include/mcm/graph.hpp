#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <unordered_set>
#include <vector>

#include "mcm/stats.hpp"

namespace mcm {

// Vertex ids are 1..n; 0 means "none".
using Vertex = int;
inline constexpr Vertex kNone = 0;

struct Edge {
    Vertex u;
    Vertex v;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n + 1) {}

    // Adds an undirected edge; returns false (and adds nothing) for a
    // duplicate. Throws on a self-loop or out-of-range endpoint.
    bool add_edge(Vertex u, Vertex v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }
    Vertex other(int id, Vertex x) const {
        return edges_[id].u == x ? edges_[id].v : edges_[id].u;
    }

    // Incident edge ids of v in insertion order.
    const std::vector<int>& incident(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

private:
    static std::uint64_t key(Vertex u, Vertex v);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_{1};
    std::unordered_set<std::uint64_t> keys_;
};

class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(n + 1, kNone) {}

    int vertex_count() const { return static_cast<int>(mate_.size()) - 1; }
    Vertex mate(Vertex v) const { return mate_[v]; }
    bool is_free(Vertex v) const { return mate_[v] == kNone; }
    void set_pair(Vertex u, Vertex v) {
        mate_[u] = v;
        mate_[v] = u;
    }
    void clear(Vertex v) { mate_[v] = kNone; }
    int size() const;
    // Matched pairs (u < v), ascending.
    std::vector<Edge> pairs() const;
    const std::vector<Vertex>& raw() const { return mate_; }
    std::vector<Vertex>& raw() { return mate_; }

private:
    std::vector<Vertex> mate_{kNone};
};

struct ParseError : std::runtime_error {
    enum class Kind { MalformedHeader, VertexOutOfRange, SelfLoop, EdgeCountMismatch, Syntax };
    ParseError(Kind k, int line, const std::string& what);
    Kind kind;
    int line;
};

struct ParseResult {
    Graph graph;
    std::vector<std::string> notes;
};

ParseResult parse_dimacs(std::istream& in);
ParseResult parse_dimacs_string(const std::string& text);

// Reads "m u v" lines (other lines ignored except "s"/"c"); validates ranges.
Matching parse_matching(std::istream& in, int n);

// Deterministic: draws uniform vertex pairs from std::mt19937_64 seeded by
// `seed` (multiply-shift reduction), rejecting self-loops and repeats, and
// adds edges in draw order. When m exceeds half of all pairs the complement
// is drawn instead and the remaining pairs are added in lexicographic order.
Graph generate_random(int n, int m, std::uint64_t seed);

Matching greedy_matching(const Graph& g);

struct Validation {
    bool ok = true;
    std::vector<std::string> problems;
};
Validation validate_matching(const Graph& g, const Matching& m);
// Same check for a raw pair list, which can also express a vertex used twice.
Validation validate_matching(const Graph& g, const std::vector<Edge>& pairs);

std::string write_result(const Matching& m, const std::vector<PhaseStats>* stats = nullptr);

}  // namespace mcm
