#include "mcm/phase.hpp"

namespace mcm {

void PhaseEngine::visit(Vertex c, int side) {
    seen_[c] = stamp_;
    dside_[c] = static_cast<char>(side);
    cursor_[c] = pred_head_[c];
    forced_[c] = 0;
    visited_.push_back(c);
}

// Next unexplored prop into c. In an anchored search a stacked bud first
// offers the prop by which its element was entered, so both sides descend
// along the anchor path before trying anything else.
int PhaseEngine::next_pred(Vertex c) {
    if (anchored_ && !forced_[c]) {
        forced_[c] = 1;
        int k = a_[c] ? elem_of_[c] : 0;
        if (k >= 2) {
            ++stats_.edge_scans;
            return elem_entry_[k];
        }
    }
    while (cursor_[c] >= 0) {
        int e = cursor_[c];
        cursor_[c] = pred_next_[e];
        ++stats_.edge_scans;
        if (!deleted_[prop_tail_[e]]) return e;
    }
    return -1;
}

DdfsResult PhaseEngine::run_ddfs(Vertex r, Vertex g) {
    DdfsResult res;
    ++stamp_;
    visited_.clear();
    Vertex cr = center_of(r);
    Vertex cg = center_of(g);
    if (cr == cg) return res;

    auto& red = stack_[kRed];
    auto& green = stack_[kGreen];
    red.assign(1, cr);
    green.assign(1, cg);
    visit(cr, kRed);
    visit(cg, kGreen);
    Vertex barrier = cg;
    Vertex dcv = kNone;

    auto petal = [&](Vertex bud) {
        res.kind = DdfsResult::Kind::Petal;
        res.bud = bud;
        for (Vertex v : visited_)
            if (v != bud) res.support.push_back(v);
        return res;
    };

    for (;;) {
        Vertex rt = red.back();
        Vertex gt = green.back();
        if (minlevel(rt) == 0 && minlevel(gt) == 0) {
            res.kind = DdfsResult::Kind::AugPath;
            res.red_free = rt;
            res.green_free = gt;
            res.support = visited_;
            return res;
        }
        const int side = minlevel(rt) >= minlevel(gt) ? kRed : kGreen;
        const Vertex top = side == kRed ? rt : gt;
        int e = next_pred(top);
        if (e >= 0) {
            Vertex y = center_of(prop_tail_[e]);
            if (seen_[y] != stamp_) {
                visit(y, side);
                stack_[side].push_back(y);
            } else if (side == kGreen && y == rt) {
                dcv = y;
            } else if (side == kRed && y == gt) {
                dcv = y;
                if (y != barrier) {
                    green.pop_back();
                    red.push_back(y);
                    dside_[y] = kRed;
                }
            }
            continue;
        }
        if (side == kRed) {
            red.pop_back();
            if (red.empty()) {
                if (dcv == kNone) throw InternalError("DDFS: red side exhausted without a meeting vertex");
                return petal(dcv);
            }
            continue;
        }
        if (gt != barrier) {
            green.pop_back();
            continue;
        }
        // Green cannot get around the meeting vertex: it keeps it and red
        // looks for another way down.
        if (dcv == kNone || dcv != rt) throw InternalError("DDFS: green side exhausted away from the meeting vertex");
        red.pop_back();
        green.push_back(dcv);
        dside_[dcv] = kGreen;
        barrier = dcv;
        if (red.empty()) return petal(dcv);
    }
}

}  // namespace mcm
