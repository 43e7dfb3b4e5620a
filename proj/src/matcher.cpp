#include "mcm/matcher.hpp"

#include <chrono>
#include <stdexcept>

#include "mcm/phase.hpp"

namespace mcm {

int PhaseEngine::run() {
    init_phase();
    bool found = false;
    for (int i = 0; !assignment_exhausted(i); ++i) {
        min_step(i);
        if (max_step(i) == Outcome::FirstApFound) {
            found = true;
            break;
        }
    }
    if (trace_) {
        PhaseTrace& pt = trace_->phases.back();
        pt.even = even_;
        pt.odd = odd_;
        pt.find_at_switch.assign(n_ + 1, kNone);
        for (Vertex v = 1; v <= n_; ++v)
            if (minlevel(v) < kInfinity) pt.find_at_switch[v] = forest_.find(v);
        pt.l_m = l_m_;
        if (found) pt.first_ap_bridge = g_.edge(first_ap_edge_);
    }
    if (!found) return 0;
    stats_.l_m = l_m_;
    begin_augmentation();
    while (extend_anchor_path() == Extend::BridgeReached) {
        DdfsResult r = anchored_ddfs();
        switch (r.kind) {
            case DdfsResult::Kind::Degenerate: reject_bridge(); break;
            case DdfsResult::Kind::Petal: finish_bottleneck(r); break;
            case DdfsResult::Kind::AugPath: finish_ap(r); break;
        }
    }
    if (stats_.aps == 0) throw InternalError("augmentation subphase found no path after the assignment subphase did");
    return stats_.aps;
}

int run_phase(const Graph& g, Matching& m, MergeForest& forest, PhaseStats& stats, Trace* trace) {
    const ForestCounters before = forest.counters();
    const auto t0 = std::chrono::steady_clock::now();
    PhaseEngine engine(g, m, forest, stats, trace, stats.phase);
    int aps = engine.run();
    const ForestCounters& after = forest.counters();
    stats.grows += after.grows - before.grows;
    stats.unions += after.unions - before.unions;
    stats.finds += after.finds - before.finds;
    stats.forest_work += after.work - before.work;
    stats.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    return aps;
}

MatchResult maximum_matching(const Graph& g, const MatchOptions& opts) {
    MatchResult res;
    switch (opts.initial) {
        case InitialMatching::Greedy: res.matching = greedy_matching(g); break;
        case InitialMatching::Empty: res.matching = Matching(g.vertex_count()); break;
        case InitialMatching::Explicit: {
            if (opts.explicit_matching.vertex_count() != g.vertex_count())
                throw std::invalid_argument("initial matching has the wrong number of vertices");
            Validation v = validate_matching(g, opts.explicit_matching);
            if (!v.ok) throw std::invalid_argument("initial matching is invalid: " + v.problems.front());
            res.matching = opts.explicit_matching;
            break;
        }
    }
    auto forest = make_forest(opts.backend, g.vertex_count() > 0 ? g.vertex_count() : 1);
    for (int phase = 1;; ++phase) {
        PhaseStats st;
        st.phase = phase;
        int aps = run_phase(g, res.matching, *forest, st, opts.trace);
        res.phases.push_back(st);
        if (aps == 0) break;
    }
    return res;
}

}  // namespace mcm
