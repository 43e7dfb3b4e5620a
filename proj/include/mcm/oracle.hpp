#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mcm/graph.hpp"

namespace mcm::oracle {

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kBruteForceEdgeLimit = 28;

// Exhaustive maximum matching size; at most kBruteForceEdgeLimit edges.
int brute_force_max(const Graph& g);

// Edmonds' blossom-shrinking search, one BFS per free vertex.
Matching reference_blossom_max(const Graph& g);

struct Levels {
    std::vector<int> even;  // kInfinity when unreachable
    std::vector<int> odd;
    int minlevel(Vertex v) const { return even[v] < odd[v] ? even[v] : odd[v]; }
};

// Shortest alternating walks from free vertices, BFS over (vertex, parity).
// Intended for n <= 200.
Levels level_oracle(const Graph& g, const Matching& m);

// Shortest simple alternating paths from free vertices, found by searching
// over (vertex, parity, vertices used) states. n <= 12.
Levels path_levels(const Graph& g, const Matching& m);

struct PetalReport {
    Vertex bud = kNone;
    std::vector<Vertex> members;  // includes the bud
};

struct PetalCheck {
    bool ok = true;
    std::string counterexample;
};

// For every petal: every shortest alternating path realizing minlevel(v) of a
// member v passes through the bud, and the petal equals the union of the
// bud-to-v parts of those paths. n <= 12.
PetalCheck petal_property_check(const Graph& g, const Matching& m, const std::vector<PetalReport>& petals);

}  // namespace mcm::oracle
