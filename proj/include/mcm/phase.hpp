#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mcm/graph.hpp"
#include "mcm/merge_forest.hpp"
#include "mcm/stats.hpp"
#include "mcm/trace.hpp"

namespace mcm {

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DdfsResult {
    enum class Kind { Petal, AugPath, Degenerate };
    Kind kind = Kind::Degenerate;
    Vertex bud = kNone;         // Petal
    Vertex red_free = kNone;    // AugPath
    Vertex green_free = kNone;
    std::vector<Vertex> support;  // visited centers except the bud
};

// One phase over a fixed graph and the matching it starts with. The
// assignment subphase runs MIN/MAX level by level until a DDFS meets two free
// vertices; the augmentation subphase then redoes that last level with the
// anchor stack and applies every shortest augmenting path it finds.
class PhaseEngine {
public:
    PhaseEngine(const Graph& g, Matching& m, MergeForest& forest, PhaseStats& stats,
                Trace* trace = nullptr, int phase = 1);

    // Whole phase; returns the number of augmenting paths applied.
    int run();

    // Assignment subphase.
    enum class Outcome { Continue, FirstApFound };
    void init_phase();
    void min_step(int i);
    Outcome max_step(int i);
    DdfsResult ddfs(int edge);
    bool assignment_exhausted(int i) const;

    // Augmentation subphase.
    enum class Extend { BridgeReached, Exhausted };
    void begin_augmentation();
    Extend extend_anchor_path();
    DdfsResult anchored_ddfs();
    void reject_bridge();
    void finish_bottleneck(const DdfsResult& r);
    std::vector<Vertex> finish_ap(const DdfsResult& r);
    Vertex bud_star(Vertex v);

    int evenlevel(Vertex v) const { return even_[v]; }
    int oddlevel(Vertex v) const { return odd_[v]; }
    int minlevel(Vertex v) const { return even_[v] < odd_[v] ? even_[v] : odd_[v]; }
    int l_m() const { return l_m_; }
    bool is_bridge(int e) const { return bridged_[e] != 0; }
    bool is_prop(int e) const { return prop_tail_[e] != kNone; }
    Edge pending_bridge() const { return Edge{red_end_, green_end_}; }
    int epsilon_of(Vertex bud) const { return elem_of_[bud]; }
    const std::vector<Vertex>& a_hat() const { return a_hat_; }
    const std::vector<Vertex>& b_hat() const { return b_hat_; }
    int a_index(Vertex v) const { return a_[v]; }
    bool deleted(Vertex v) const { return deleted_[v] != 0; }
    std::vector<Vertex> props_into(Vertex v) const;

private:
    enum Side { kRed = 0, kGreen = 1 };
    struct Petal {
        Vertex r, g;
        int edge;
        Vertex bud;
    };
    struct List {
        std::vector<int> head, tail, next;
        void init(int owners, int items);
        void append(int owner, int item);
        void concat(int dst, int src);
        int pop(int owner);
    };

    // levels and edge classification
    void set_level(Vertex v, int level);
    void add_prop(Vertex tail, Vertex head, int e);
    void add_bridge(int e, int tenacity);
    void park(int e, Vertex v, bool even_side);
    int endpoint_level(int e, Vertex x) const;

    // DDFS
    Vertex center_of(Vertex v);
    DdfsResult run_ddfs(Vertex r, Vertex g);
    int next_pred(Vertex c);
    void visit(Vertex c, int side);
    void merge_petal(int e, Vertex r, Vertex g, const DdfsResult& res);

    // path reconstruction
    Vertex center_at(Vertex v, int petal);
    std::vector<Vertex> find_path(Vertex end, int end_level, Vertex target, int side, int petal);
    void walk(Vertex x, Vertex target, int level, std::vector<Vertex>& out);
    void open(Vertex x, Vertex target, std::vector<Vertex>& out);
    void check_ap(const std::vector<Vertex>& path) const;

    // augmentation
    void push_element(Vertex c, int entry);
    void pop_dead_end();
    void delete_petal(Vertex c);
    void cascade();
    void trace_anchor(AnchorEvent::Kind kind, int epsilon, Vertex bud, std::vector<Vertex> path = {});
    void trace_petal(int e, const DdfsResult& res);

    const Graph& g_;
    Matching& m_;
    MergeForest& forest_;
    PhaseStats& stats_;
    Trace* trace_;
    int phase_;
    int n_;
    int edges_;

    std::vector<Vertex> mate_;
    std::vector<int> mate_edge_;
    std::vector<int> even_, odd_;
    std::vector<std::vector<Vertex>> by_level_;
    std::vector<std::vector<int>> buckets_;  // bucket k holds tenacity 2k+1
    int top_level_ = -1;
    int top_bucket_ = -1;
    int level_ = 0;

    std::vector<Vertex> prop_tail_;
    std::vector<int> prop_order_;
    std::vector<int> pred_head_, pred_last_, pred_next_;
    std::vector<int> succ_head_, succ_next_;
    std::vector<int> pred_count_;
    std::vector<int> park_even_, park_next_;  // unmatched edges waiting for an even level
    std::vector<int> park_odd_;               // matched edge waiting for an odd level
    std::vector<char> bridged_, bridge_used_;

    int l_m_ = kInfinity;
    int first_ap_edge_ = -1;
    bool augmenting_ = false;
    bool intact_ = true;

    // DDFS scratch
    int stamp_ = 0;
    std::vector<int> seen_;
    std::vector<char> dside_;
    std::vector<int> cursor_;
    std::vector<char> forced_;
    std::vector<Vertex> stack_[2];
    std::vector<Vertex> visited_;
    bool anchored_ = false;

    // petals, for path reconstruction
    std::vector<Petal> petals_;
    std::vector<int> owner_;
    std::vector<char> color_;
    int fp_stamp_ = 0;
    std::vector<int> fp_seen_;

    // augmentation state
    std::vector<Vertex> free_order_;
    std::size_t next_free_ = 0;
    std::vector<int> a_;
    std::vector<Vertex> a_hat_, b_hat_;
    std::vector<int> elem_entry_;
    std::vector<int> elem_of_;
    std::vector<char> deleted_;
    List members_, props_, bridges_;
    std::vector<Vertex> doomed_;
    int cur_edge_ = -1;
    Vertex red_end_ = kNone, green_end_ = kNone;
};

}  // namespace mcm
