#pragma once

#include <vector>

#include "mcm/graph.hpp"
#include "mcm/merge_forest.hpp"
#include "mcm/stats.hpp"
#include "mcm/trace.hpp"

namespace mcm {

enum class InitialMatching { Greedy, Empty, Explicit };

struct MatchOptions {
    InitialMatching initial = InitialMatching::Greedy;
    Matching explicit_matching;  // used verbatim when initial == Explicit
    Backend backend = Backend::Reference;
    Trace* trace = nullptr;
};

struct MatchResult {
    Matching matching;
    std::vector<PhaseStats> phases;  // the last phase is the one that found nothing
};

// Throws std::invalid_argument for an explicit matching that does not fit g.
MatchResult maximum_matching(const Graph& g, const MatchOptions& opts = {});

// One phase on m; returns the number of augmenting paths applied.
int run_phase(const Graph& g, Matching& m, MergeForest& forest, PhaseStats& stats, Trace* trace = nullptr);

}  // namespace mcm
