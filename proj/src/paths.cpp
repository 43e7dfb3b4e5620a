#include <algorithm>

#include "mcm/phase.hpp"

namespace mcm {

// Center of v as it was while petal `petal` was being formed; -1 means now.
Vertex PhaseEngine::center_at(Vertex v, int petal) {
    if (petal < 0) return center_of(v);
    while (owner_[v] >= 0 && owner_[v] < petal) v = petals_[owner_[v]].bud;
    return v;
}

// Follows first predecessors from x (at level `level`) down to target. A
// vertex entered at its maxlevel is opened through the petal that gave it
// that level; the tail of a prop may sit at either of its levels.
void PhaseEngine::walk(Vertex x, Vertex target, int level, std::vector<Vertex>& out) {
    for (;;) {
        if (level != minlevel(x)) {
            if (level != even_[x] && level != odd_[x]) throw InternalError("path: vertex entered at a level it does not have");
            open(x, target, out);
            return;
        }
        out.push_back(x);
        if (x == target) return;
        if (minlevel(x) <= minlevel(target)) throw InternalError("path: walked below its target");
        Vertex next = kNone;
        for (int e = pred_head_[x]; e >= 0; e = pred_next_[e]) {
            ++stats_.edge_scans;
            if (!deleted_[prop_tail_[e]]) {
                next = prop_tail_[e];
                break;
            }
        }
        if (next == kNone) throw InternalError("path: vertex without a live predecessor");
        x = next;
        --level;
    }
}

// Path from bridge endpoint `end` down to `target` that only passes through
// centers of the given side (of the given petal, or of the current DDFS).
std::vector<Vertex> PhaseEngine::find_path(Vertex end, int end_level, Vertex target, int side, int petal) {
    std::vector<Vertex> out;
    Vertex c0 = center_at(end, petal);
    walk(end, c0, end_level, out);
    if (c0 == target) return out;

    struct Frame {
        Vertex c;
        int cursor;
        Vertex via;
    };
    auto allowed = [&](Vertex y) {
        if (petal < 0) return seen_[y] == stamp_ && dside_[y] == side;
        return owner_[y] == petal && color_[y] == side;
    };
    ++fp_stamp_;
    std::vector<Frame> frames{{c0, pred_head_[c0], kNone}};
    fp_seen_[c0] = fp_stamp_;
    bool found = false;
    while (!frames.empty() && !found) {
        int e = frames.back().cursor;
        if (e < 0) {
            frames.pop_back();
            continue;
        }
        frames.back().cursor = pred_next_[e];
        ++stats_.edge_scans;
        Vertex t = prop_tail_[e];
        if (deleted_[t]) continue;
        Vertex y = center_at(t, petal);
        if (y == target) {
            frames.push_back({y, -1, t});
            found = true;
        } else if (fp_seen_[y] != fp_stamp_ && allowed(y) && minlevel(y) > minlevel(target)) {
            fp_seen_[y] = fp_stamp_;
            frames.push_back({y, pred_head_[y], t});
        }
    }
    if (!found) throw InternalError("path: no route inside the petal");
    for (std::size_t k = 1; k < frames.size(); ++k) walk(frames[k].via, frames[k].c, minlevel(frames[k - 1].c) - 1, out);
    return out;
}

// x reached at its maxlevel: climb x's side of its petal to the bridge,
// cross it, descend the other side to the bud, then continue to target.
void PhaseEngine::open(Vertex x, Vertex target, std::vector<Vertex>& out) {
    const int p = owner_[x];
    if (p < 0) throw InternalError("path: maxlevel vertex outside every petal");
    const Petal pet = petals_[p];
    const int side = color_[x];
    Vertex own = side == kRed ? pet.r : pet.g;
    Vertex far = side == kRed ? pet.g : pet.r;
    std::vector<Vertex> up = find_path(own, endpoint_level(pet.edge, own), x, side, p);
    out.insert(out.end(), up.rbegin(), up.rend());
    std::vector<Vertex> down = find_path(far, endpoint_level(pet.edge, far), pet.bud, 1 - side, p);
    out.insert(out.end(), down.begin(), down.end() - 1);
    walk(pet.bud, target, minlevel(pet.bud), out);
}

void PhaseEngine::check_ap(const std::vector<Vertex>& path) const {
    auto fail = [&](const std::string& why) {
        std::string s = "augmenting path check failed (" + why + "):";
        for (Vertex v : path) s += " " + std::to_string(v);
        throw InternalError(s);
    };
    if (static_cast<int>(path.size()) != l_m_ + 1) fail("length");
    if (mate_[path.front()] != kNone || mate_[path.back()] != kNone) fail("endpoints not free");
    std::vector<Vertex> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated vertex");
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        if (deleted_[path[k]] || deleted_[path[k + 1]]) fail("deleted vertex");
        if (!g_.has_edge(path[k], path[k + 1])) fail("missing edge");
        bool matched = mate_[path[k]] == path[k + 1];
        if (matched != (k % 2 == 1)) fail("not alternating");
    }
}

}  // namespace mcm
