#include <algorithm>

#include "mcm/phase.hpp"

namespace mcm {

void PhaseEngine::begin_augmentation() {
    augmenting_ = true;
    level_ = (l_m_ - 1) / 2;
    const int n1 = n_ + 1;
    members_.init(n1, n1);
    props_.init(n1, edges_);
    bridges_.init(n1, 2 * edges_);
    for (Vertex v = 1; v <= n_; ++v)
        if (minlevel(v) < kInfinity) members_.append(forest_.find(v), v);
    for (int e : prop_order_) {
        Vertex c = forest_.find(prop_tail_[e]);
        if (forest_.find(g_.other(e, prop_tail_[e])) != c) props_.append(c, e);
    }
    if (level_ < static_cast<int>(buckets_.size())) {
        for (int e : buckets_[level_]) {
            if (bridge_used_[e]) continue;
            Vertex cu = forest_.find(g_.edge(e).u);
            Vertex cv = forest_.find(g_.edge(e).v);
            if (cu == cv) {
                bridge_used_[e] = 1;
                continue;
            }
            bridges_.append(cu, 2 * e);
            bridges_.append(cv, 2 * e + 1);
        }
    }
    for (Vertex v = 1; v <= n_; ++v)
        if (mate_[v] == kNone) free_order_.push_back(v);
}

Vertex PhaseEngine::bud_star(Vertex v) {
    if (deleted_[v]) throw InternalError("bud* of a deleted vertex");
    if (!a_[v]) return forest_.find(v);
    // Largest i with a[B[i]] <= a[v].
    auto it = std::upper_bound(b_hat_.begin(), b_hat_.end(), a_[v],
                               [&](int pos, Vertex b) { return pos < a_[b]; });
    if (it == b_hat_.begin()) throw InternalError("stacked vertex below the first bud");
    return *(it - 1);
}

void PhaseEngine::push_element(Vertex c, int entry) {
    b_hat_.push_back(c);
    int k = static_cast<int>(b_hat_.size());
    elem_of_[c] = k;
    elem_entry_[k] = entry;
    a_hat_.push_back(c);
    a_[c] = static_cast<int>(a_hat_.size());
    for (int w = members_.head[c]; w >= 0; w = members_.next[w]) {
        if (w == c) continue;
        a_hat_.push_back(w);
        a_[w] = static_cast<int>(a_hat_.size());
    }
}

PhaseEngine::Extend PhaseEngine::extend_anchor_path() {
    for (;;) {
        if (b_hat_.empty()) {
            while (next_free_ < free_order_.size() && deleted_[free_order_[next_free_]]) ++next_free_;
            if (next_free_ == free_order_.size()) return Extend::Exhausted;
            push_element(free_order_[next_free_], -1);
        }
        const Vertex tip = b_hat_.back();
        int item;
        while ((item = bridges_.pop(tip)) >= 0) {
            ++stats_.edge_scans;
            int e = item / 2;
            if (bridge_used_[e]) continue;
            const Edge& ed = g_.edge(e);
            Vertex x = item % 2 == 0 ? ed.u : ed.v;
            Vertex y = item % 2 == 0 ? ed.v : ed.u;
            if (deleted_[x] || deleted_[y]) continue;
            if (bud_star(x) != tip) throw InternalError("bridge list out of sync with its petal");
            cur_edge_ = e;
            red_end_ = x;
            green_end_ = y;
            trace_anchor(AnchorEvent::Kind::BridgeReached, static_cast<int>(b_hat_.size()), tip);
            return Extend::BridgeReached;
        }
        bool pushed = false;
        while ((item = props_.pop(tip)) >= 0) {
            ++stats_.edge_scans;
            Vertex h = g_.other(item, prop_tail_[item]);
            if (deleted_[h] || a_[h] || minlevel(h) > level_) continue;
            if (forest_.find(h) != h) throw InternalError("prop enters a petal away from its bud");
            push_element(h, item);
            pushed = true;
            break;
        }
        if (!pushed) pop_dead_end();
    }
}

void PhaseEngine::pop_dead_end() {
    const Vertex tip = b_hat_.back();
    const int k = static_cast<int>(b_hat_.size());
    const int start = a_[tip];
    delete_petal(tip);
    cascade();
    for (int p = start; p <= static_cast<int>(a_hat_.size()); ++p) a_[a_hat_[p - 1]] = 0;
    a_hat_.resize(start - 1);
    b_hat_.pop_back();
    elem_of_[tip] = 0;
    for (Vertex v : a_hat_)
        if (deleted_[v]) throw InternalError("dead-end deletion reached the anchor path");
    intact_ = false;
    trace_anchor(AnchorEvent::Kind::DeadEnd, k, tip);
}

void PhaseEngine::delete_petal(Vertex c) {
    for (int w = members_.head[c]; w >= 0; w = members_.next[w]) {
        if (deleted_[w]) continue;
        deleted_[w] = 1;
        for (int e = succ_head_[w]; e >= 0; e = succ_next_[e]) {
            Vertex h = g_.other(e, w);
            if (--pred_count_[h] == 0 && !deleted_[h]) doomed_.push_back(h);
        }
    }
}

void PhaseEngine::cascade() {
    while (!doomed_.empty()) {
        Vertex h = doomed_.back();
        doomed_.pop_back();
        if (deleted_[h] || mate_[h] == kNone) continue;
        if (bud_star(h) == h) delete_petal(h);
    }
}

DdfsResult PhaseEngine::anchored_ddfs() {
    anchored_ = true;
    DdfsResult res = run_ddfs(red_end_, green_end_);
    anchored_ = false;
    return res;
}

void PhaseEngine::reject_bridge() {
    bridge_used_[cur_edge_] = 1;
    trace_anchor(AnchorEvent::Kind::Rejected, static_cast<int>(b_hat_.size()), kNone);
}

void PhaseEngine::finish_bottleneck(const DdfsResult& r) {
    bridge_used_[cur_edge_] = 1;
    const Vertex b = r.bud;
    const int eps = a_[b] ? elem_of_[b] : 0;
    if (eps == 0) throw InternalError("anchored DDFS: bottleneck is not a bud of the anchor path");
    const int ell = static_cast<int>(b_hat_.size());
    int stacked = 0;
    for (Vertex c : r.support) {
        if (!a_[c]) continue;
        if (elem_of_[c] <= eps) throw InternalError("anchored DDFS: visited an anchor element below the bottleneck");
        ++stacked;
    }
    if (stacked != ell - eps) throw InternalError("anchored DDFS: skipped an anchor element above the bottleneck");

    int idx = static_cast<int>(petals_.size());
    petals_.push_back(Petal{red_end_, green_end_, cur_edge_, b});
    for (Vertex c : r.support) {
        owner_[c] = idx;
        color_[c] = dside_[c];
        if (!a_[c]) {
            for (int w = members_.head[c]; w >= 0; w = members_.next[w]) {
                a_hat_.push_back(w);
                a_[w] = static_cast<int>(a_hat_.size());
            }
        }
        elem_of_[c] = 0;
        members_.concat(b, c);
        props_.concat(b, c);
        bridges_.concat(b, c);
        if (even_[c] < kInfinity && odd_[c] < kInfinity) throw InternalError("petal support vertex already has both levels");
        set_level(c, l_m_ - minlevel(c));
    }
    b_hat_.resize(eps);
    trace_petal(cur_edge_, r);
    trace_anchor(AnchorEvent::Kind::Bottleneck, eps, b);
}

std::vector<Vertex> PhaseEngine::finish_ap(const DdfsResult& r) {
    bridge_used_[cur_edge_] = 1;
    std::vector<Vertex> red = find_path(red_end_, endpoint_level(cur_edge_, red_end_), r.red_free, kRed, -1);
    std::vector<Vertex> green = find_path(green_end_, endpoint_level(cur_edge_, green_end_), r.green_free, kGreen, -1);
    std::vector<Vertex> path(red.rbegin(), red.rend());
    path.insert(path.end(), green.begin(), green.end());
    check_ap(path);
    for (std::size_t k = 0; k + 1 < path.size(); k += 2) m_.set_pair(path[k], path[k + 1]);

    for (Vertex c : r.support)
        if (!deleted_[c]) delete_petal(c);
    cascade();
    for (Vertex v : a_hat_) {
        if (!deleted_[v]) throw InternalError("augmentation left part of the anchor path in the graph");
        a_[v] = 0;
    }
    for (Vertex b : b_hat_) elem_of_[b] = 0;
    a_hat_.clear();
    b_hat_.clear();
    ++stats_.aps;
    intact_ = false;
    trace_anchor(AnchorEvent::Kind::Augmented, 0, kNone, path);
    if (trace_) trace_->phases.back().aps.push_back(path);
    return path;
}

void PhaseEngine::trace_anchor(AnchorEvent::Kind kind, int epsilon, Vertex bud, std::vector<Vertex> path) {
    if (!trace_) return;
    AnchorEvent ev;
    ev.phase = phase_;
    ev.kind = kind;
    ev.bridge = Edge{red_end_, green_end_};
    ev.epsilon = epsilon;
    ev.bud = bud;
    ev.a_hat = a_hat_;
    ev.b_hat = b_hat_;
    for (Vertex v : a_hat_) ev.stacked.emplace_back(v, bud_star(v));
    ev.path = std::move(path);
    trace_->anchors.push_back(std::move(ev));
}

}  // namespace mcm
