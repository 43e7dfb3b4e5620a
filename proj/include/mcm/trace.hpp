#pragma once

#include <vector>

#include "mcm/graph.hpp"

namespace mcm {

struct PetalEvent {
    int phase = 0;
    int level = 0;  // search level i (tenacity 2i+1)
    bool in_augmentation = false;
    bool graph_intact = true;  // no deletion or augmentation yet in this phase
    Edge bridge{};
    Vertex bud = kNone;
    std::vector<Vertex> support;
    std::vector<Vertex> members;  // whole petal*, bud included, ascending
    std::vector<Vertex> deleted;  // vertices already removed in this phase
};

struct AnchorEvent {
    enum class Kind { BridgeReached, Rejected, Bottleneck, DeadEnd, Augmented };
    int phase = 0;
    Kind kind = Kind::BridgeReached;
    Edge bridge{};
    int epsilon = 0;
    Vertex bud = kNone;                 // bottleneck bud or popped element's bud
    std::vector<Vertex> a_hat;          // state after the event
    std::vector<Vertex> b_hat;
    std::vector<std::pair<Vertex, Vertex>> stacked;  // (v, bud*(v)) for v in a_hat
    std::vector<Vertex> path;           // Augmented only
};

struct PhaseTrace {
    int phase = 0;
    std::vector<Vertex> start_mate;
    std::vector<int> even;  // levels when the assignment subphase stops
    std::vector<int> odd;
    std::vector<Vertex> find_at_switch;  // forest find(v), kNone if unleveled
    int l_m = kInfinity;
    Edge first_ap_bridge{};
    std::vector<std::vector<Vertex>> aps;
};

struct Trace {
    std::vector<PhaseTrace> phases;
    std::vector<PetalEvent> petals;
    std::vector<AnchorEvent> anchors;
};

}  // namespace mcm
