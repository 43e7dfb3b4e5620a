#include <algorithm>

#include "mcm/phase.hpp"

namespace mcm {

void PhaseEngine::List::init(int owners, int items) {
    head.assign(owners, -1);
    tail.assign(owners, -1);
    next.assign(items, -1);
}

void PhaseEngine::List::append(int owner, int item) {
    next[item] = -1;
    if (head[owner] < 0)
        head[owner] = item;
    else
        next[tail[owner]] = item;
    tail[owner] = item;
}

void PhaseEngine::List::concat(int dst, int src) {
    if (dst == src || head[src] < 0) return;
    if (head[dst] < 0)
        head[dst] = head[src];
    else
        next[tail[dst]] = head[src];
    tail[dst] = tail[src];
    head[src] = tail[src] = -1;
}

int PhaseEngine::List::pop(int owner) {
    int item = head[owner];
    if (item >= 0) {
        head[owner] = next[item];
        if (head[owner] < 0) tail[owner] = -1;
    }
    return item;
}

PhaseEngine::PhaseEngine(const Graph& g, Matching& m, MergeForest& forest, PhaseStats& stats,
                         Trace* trace, int phase)
    : g_(g), m_(m), forest_(forest), stats_(stats), trace_(trace), phase_(phase),
      n_(g.vertex_count()), edges_(g.edge_count()) {
    const int n1 = n_ + 1;
    mate_edge_.assign(n1, -1);
    even_.assign(n1, kInfinity);
    odd_.assign(n1, kInfinity);
    prop_tail_.assign(edges_, kNone);
    pred_head_.assign(n1, -1);
    pred_last_.assign(n1, -1);
    pred_next_.assign(edges_, -1);
    succ_head_.assign(n1, -1);
    succ_next_.assign(edges_, -1);
    pred_count_.assign(n1, 0);
    park_even_.assign(n1, -1);
    park_next_.assign(edges_, -1);
    park_odd_.assign(n1, -1);
    bridged_.assign(edges_, 0);
    bridge_used_.assign(edges_, 0);
    seen_.assign(n1, 0);
    dside_.assign(n1, 0);
    cursor_.assign(n1, -1);
    forced_.assign(n1, 0);
    owner_.assign(n1, -1);
    color_.assign(n1, 0);
    fp_seen_.assign(n1, 0);
    a_.assign(n1, 0);
    elem_of_.assign(n1, 0);
    elem_entry_.assign(n1 + 1, -1);
    deleted_.assign(n1, 0);
}

Vertex PhaseEngine::center_of(Vertex v) {
    return augmenting_ ? bud_star(v) : forest_.find(v);
}

int PhaseEngine::endpoint_level(int e, Vertex x) const {
    return mate_edge_[x] == e ? odd_[x] : even_[x];
}

void PhaseEngine::init_phase() {
    forest_.reset();
    mate_ = m_.raw();
    for (int e = 0; e < edges_; ++e) {
        const Edge& ed = g_.edge(e);
        if (mate_[ed.u] == ed.v) mate_edge_[ed.u] = mate_edge_[ed.v] = e;
    }
    // Roots are queued in order of their first incident edge; isolated free
    // vertices come last.
    std::vector<char> rooted(n_ + 1, 0);
    auto root = [&](Vertex v) {
        if (mate_[v] != kNone || rooted[v]) return;
        rooted[v] = 1;
        forest_.make_root(v);
        set_level(v, 0);
    };
    for (const Edge& ed : g_.edges()) {
        root(ed.u);
        root(ed.v);
    }
    for (Vertex v = 1; v <= n_; ++v) root(v);
    if (trace_) {
        PhaseTrace pt;
        pt.phase = phase_;
        pt.start_mate = mate_;
        trace_->phases.push_back(std::move(pt));
    }
}

void PhaseEngine::set_level(Vertex v, int level) {
    if (level % 2 == 0)
        even_[v] = level;
    else
        odd_[v] = level;
    if (augmenting_) return;
    if (static_cast<int>(by_level_.size()) <= level) by_level_.resize(level + 1);
    by_level_[level].push_back(v);
    top_level_ = std::max(top_level_, level);
    if (level % 2 == 0) {
        for (int e = park_even_[v]; e >= 0; e = park_next_[e]) add_bridge(e, even_[g_.other(e, v)] + level + 1);
        park_even_[v] = -1;
    } else if (park_odd_[v] >= 0) {
        int e = park_odd_[v];
        park_odd_[v] = -1;
        add_bridge(e, odd_[g_.other(e, v)] + level + 1);
    }
}

void PhaseEngine::park(int e, Vertex v, bool even_side) {
    if (even_side) {
        park_next_[e] = park_even_[v];
        park_even_[v] = e;
    } else {
        park_odd_[v] = e;
    }
}

void PhaseEngine::add_prop(Vertex tail, Vertex head, int e) {
    prop_tail_[e] = tail;
    prop_order_.push_back(e);
    if (pred_head_[head] < 0)
        pred_head_[head] = e;
    else
        pred_next_[pred_last_[head]] = e;
    pred_last_[head] = e;
    succ_next_[e] = succ_head_[tail];
    succ_head_[tail] = e;
    ++pred_count_[head];
}

void PhaseEngine::add_bridge(int e, int tenacity) {
    if (bridged_[e]) return;
    bridged_[e] = 1;
    if (tenacity < 2 * level_ + 1) {
        ++stats_.stale_bridges;
        return;
    }
    int k = (tenacity - 1) / 2;
    if (static_cast<int>(buckets_.size()) <= k) buckets_.resize(k + 1);
    buckets_[k].push_back(e);
    top_bucket_ = std::max(top_bucket_, k);
}

void PhaseEngine::min_step(int i) {
    level_ = i;
    if (i >= static_cast<int>(by_level_.size())) return;
    const bool even_step = i % 2 == 0;
    for (std::size_t idx = 0; idx < by_level_[i].size(); ++idx) {
        Vertex u = by_level_[i][idx];
        if (deleted_[u]) continue;
        auto scan = [&](int e) {
            ++stats_.edge_scans;
            if (prop_tail_[e] != kNone || bridged_[e]) return;
            Vertex v = g_.other(e, u);
            int& same = even_step ? even_[v] : odd_[v];   // level of v the edge would complete a bridge with
            int& reach = even_step ? odd_[v] : even_[v];  // level of v the edge can assign
            if (same < kInfinity) {
                add_bridge(e, i + same + 1);
            } else if (reach == kInfinity) {
                set_level(v, i + 1);
                add_prop(u, v, e);
                forest_.grow(forest_.find(u), v);
            } else if (reach == i + 1) {
                add_prop(u, v, e);
            } else {
                park(e, v, even_step);
            }
        };
        if (even_step) {
            for (int e : g_.incident(u))
                if (e != mate_edge_[u]) scan(e);
        } else if (mate_edge_[u] >= 0) {
            scan(mate_edge_[u]);
        }
    }
}

PhaseEngine::Outcome PhaseEngine::max_step(int i) {
    level_ = i;
    for (std::size_t idx = 0; i < static_cast<int>(buckets_.size()) && idx < buckets_[i].size(); ++idx) {
        int e = buckets_[i][idx];
        if (bridge_used_[e]) continue;
        DdfsResult res = ddfs(e);
        if (res.kind == DdfsResult::Kind::AugPath) {
            l_m_ = 2 * i + 1;
            first_ap_edge_ = e;
            return Outcome::FirstApFound;
        }
        bridge_used_[e] = 1;
        if (res.kind == DdfsResult::Kind::Petal) merge_petal(e, g_.edge(e).u, g_.edge(e).v, res);
    }
    return Outcome::Continue;
}

bool PhaseEngine::assignment_exhausted(int i) const {
    return i > top_level_ && i > top_bucket_;
}

DdfsResult PhaseEngine::ddfs(int e) {
    anchored_ = false;
    return run_ddfs(g_.edge(e).u, g_.edge(e).v);
}

void PhaseEngine::merge_petal(int e, Vertex r, Vertex g, const DdfsResult& res) {
    int idx = static_cast<int>(petals_.size());
    petals_.push_back(Petal{r, g, e, res.bud});
    const int t = 2 * level_ + 1;
    for (Vertex c : res.support) {
        owner_[c] = idx;
        color_[c] = dside_[c];
        forest_.union_up(c);
    }
    for (Vertex c : res.support) {
        if (even_[c] < kInfinity && odd_[c] < kInfinity) throw InternalError("petal support vertex already has both levels");
        set_level(c, t - minlevel(c));
    }
    trace_petal(e, res);
}

void PhaseEngine::trace_petal(int e, const DdfsResult& res) {
    if (!trace_) return;
    PetalEvent ev;
    ev.phase = phase_;
    ev.level = level_;
    ev.in_augmentation = augmenting_;
    ev.graph_intact = intact_;
    ev.bridge = g_.edge(e);
    ev.bud = res.bud;
    ev.support = res.support;
    std::sort(ev.support.begin(), ev.support.end());
    if (augmenting_) {
        for (int w = members_.head[res.bud]; w >= 0; w = members_.next[w]) ev.members.push_back(w);
    } else {
        for (Vertex v = 1; v <= n_; ++v)
            if (minlevel(v) < kInfinity && forest_.find(v) == res.bud) ev.members.push_back(v);
    }
    std::sort(ev.members.begin(), ev.members.end());
    for (Vertex v = 1; v <= n_; ++v)
        if (deleted_[v]) ev.deleted.push_back(v);
    trace_->petals.push_back(std::move(ev));
}

std::vector<Vertex> PhaseEngine::props_into(Vertex v) const {
    std::vector<Vertex> out;
    for (int e = pred_head_[v]; e >= 0; e = pred_next_[e]) out.push_back(prop_tail_[e]);
    return out;
}

}  // namespace mcm
