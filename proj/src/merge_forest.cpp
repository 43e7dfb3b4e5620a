#include "mcm/merge_forest.hpp"

#include <bit>

namespace mcm {

Backend parse_backend(const std::string& name) {
    if (name == "reference") return Backend::Reference;
    if (name == "inctree") return Backend::IncrementalTree;
    throw std::invalid_argument("unknown backend '" + name + "' (expected reference|inctree)");
}

const char* backend_name(Backend b) {
    return b == Backend::Reference ? "reference" : "inctree";
}

int micro_set_size(int capacity) {
    int lg = 0;
    while ((1LL << lg) < capacity) ++lg;
    int want = (lg + 3) / 4;
    int b = 2;
    while (b < want) b *= 2;
    return b > 16 ? 16 : b;
}

namespace {

class ForestBase : public MergeForest {
protected:
    explicit ForestBase(int capacity) : cap_(capacity), present_(capacity + 1, 0), tree_parent_(capacity + 1, 0) {}

    void check_id(int v) const {
        if (v < 1 || v > cap_) throw ForestError("node " + std::to_string(v) + " out of range");
    }
    void check_present(int v, const char* what) const {
        check_id(v);
        if (!present_[v]) throw ForestError(std::string(what) + " " + std::to_string(v) + " unknown");
    }
    void add_node(int v, int parent) {
        check_id(v);
        if (present_[v]) throw ForestError("node " + std::to_string(v) + " already present");
        present_[v] = 1;
        tree_parent_[v] = parent;
        nodes_.push_back(v);
    }
    void clear_nodes() {
        for (int v : nodes_) {
            present_[v] = 0;
            tree_parent_[v] = 0;
        }
        nodes_.clear();
    }

public:
    bool contains(int v) const override { return v >= 1 && v <= cap_ && present_[v]; }

protected:
    int cap_;
    std::vector<char> present_;
    std::vector<int> tree_parent_;
    std::vector<int> nodes_;
};

// Union by size with path compression; each set root carries the label of
// the set's root-most tree node.
class ReferenceForest final : public ForestBase {
public:
    explicit ReferenceForest(int capacity)
        : ForestBase(capacity), uf_(capacity + 1), size_(capacity + 1), label_(capacity + 1) {}

    void make_root(int v) override {
        add_node(v, 0);
        singleton(v);
    }

    void grow(int parent, int child) override {
        check_present(parent, "parent");
        add_node(child, parent);
        singleton(child);
        ++counters_.grows;
    }

    void union_up(int v) override {
        check_present(v, "node");
        int r = find_root(v);
        int top = label_[r];
        int p = tree_parent_[top];
        if (p == 0) throw ForestError("set of " + std::to_string(v) + " is rooted at a forest root");
        int q = find_root(p);
        int keep = label_[q];
        if (size_[r] > size_[q]) std::swap(r, q);
        uf_[r] = q;
        size_[q] += size_[r];
        label_[q] = keep;
        ++counters_.unions;
        ++counters_.work;
    }

    int find(int v) override {
        check_present(v, "node");
        ++counters_.finds;
        return label_[find_root(v)];
    }

    void reset() override { clear_nodes(); }
    Backend backend() const override { return Backend::Reference; }

private:
    void singleton(int v) {
        uf_[v] = v;
        size_[v] = 1;
        label_[v] = v;
    }

    int find_root(int v) {
        int r = v;
        while (uf_[r] != r) {
            r = uf_[r];
            ++counters_.work;
        }
        while (uf_[v] != r) {
            int next = uf_[v];
            uf_[v] = r;
            v = next;
        }
        ++counters_.work;
        return r;
    }

    std::vector<int> uf_;
    std::vector<int> size_;
    std::vector<int> label_;
};

// Micro/macro decomposition for an incrementally grown tree. Nodes are packed
// into micro-sets of at most b nodes that are connected subtrees hanging off a
// single outside node (the micro root). A union marks the set's top node; the
// answer inside a micro-set is the deepest unmarked ancestor, found from an
// ancestor bitmask and a lazily filled table. When every ancestor inside the
// micro-set is marked the query escapes to the micro root; escapes are
// permanent, so they are cached in a path-compressed macro link array.
class IncrementalTreeForest final : public ForestBase {
public:
    explicit IncrementalTreeForest(int capacity)
        : ForestBase(capacity),
          b_(micro_set_size(capacity)),
          micro_(capacity + 1, -1),
          index_(capacity + 1, 0),
          anc_(capacity + 1, 0),
          macro_(capacity + 1, 0),
          table_(std::size_t{1} << b_, -2) {}

    void make_root(int v) override {
        add_node(v, 0);
        new_micro(v, 0);
    }

    void grow(int parent, int child) override {
        check_present(parent, "parent");
        add_node(child, parent);
        ++counters_.grows;
        int s = micro_[parent];
        if (count_[s] < b_) {
            int i = count_[s]++;
            members_[static_cast<std::size_t>(s) * b_ + i] = child;
            micro_[child] = s;
            index_[child] = i;
            anc_[child] = anc_[parent] | (1u << i);
            macro_[child] = child;
            ++counters_.work;
        } else {
            new_micro(child, parent);
        }
    }

    void union_up(int v) override {
        check_present(v, "node");
        int top = answer(v);
        if (tree_parent_[top] == 0)
            throw ForestError("set of " + std::to_string(v) + " is rooted at a forest root");
        mark_[micro_[top]] |= 1u << index_[top];
        ++counters_.unions;
        ++counters_.work;
    }

    int find(int v) override {
        check_present(v, "node");
        ++counters_.finds;
        return answer(v);
    }

    void reset() override {
        for (int v : nodes_) micro_[v] = -1;
        clear_nodes();
        count_.clear();
        mark_.clear();
        root_.clear();
        members_.clear();
    }

    Backend backend() const override { return Backend::IncrementalTree; }

private:
    void new_micro(int v, int outside_root) {
        int s = static_cast<int>(count_.size());
        count_.push_back(1);
        mark_.push_back(0);
        root_.push_back(outside_root);
        members_.resize(members_.size() + b_, 0);
        members_[static_cast<std::size_t>(s) * b_] = v;
        micro_[v] = s;
        index_[v] = 0;
        anc_[v] = 1;
        macro_[v] = v;
        ++counters_.work;
    }

    // Deepest unmarked ancestor index inside the micro-set, or -1.
    int deepest(std::uint32_t live) {
        ++counters_.work;
        signed char& t = table_[live];
        if (t == -2) t = live == 0 ? -1 : static_cast<signed char>(31 - std::countl_zero(live));
        return t;
    }

    int local(int v) {
        int s = micro_[v];
        int i = deepest(anc_[v] & ~mark_[s]);
        return i < 0 ? 0 : members_[static_cast<std::size_t>(s) * b_ + i];
    }

    int macro_find(int x) {
        int r = x;
        while (macro_[r] != r) {
            r = macro_[r];
            ++counters_.work;
        }
        while (macro_[x] != r) {
            int next = macro_[x];
            macro_[x] = r;
            x = next;
        }
        return r;
    }

    int answer(int v) {
        int a = local(v);
        if (a != 0) return a;
        int y = macro_find(root_[micro_[v]]);
        for (;;) {
            a = local(y);
            if (a != 0) return a;
            int up = root_[micro_[y]];
            macro_[y] = up;
            y = macro_find(up);
        }
    }

    int b_;
    std::vector<int> micro_;
    std::vector<int> index_;
    std::vector<std::uint32_t> anc_;
    std::vector<int> macro_;
    std::vector<signed char> table_;
    std::vector<int> count_;
    std::vector<std::uint32_t> mark_;
    std::vector<int> root_;
    std::vector<int> members_;
};

}  // namespace

std::unique_ptr<MergeForest> make_forest(Backend b, int capacity) {
    if (capacity < 0) throw std::invalid_argument("negative capacity");
    if (b == Backend::Reference) return std::make_unique<ReferenceForest>(capacity);
    return std::make_unique<IncrementalTreeForest>(capacity);
}

}  // namespace mcm
