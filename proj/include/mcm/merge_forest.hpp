#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcm {

enum class Backend { Reference, IncrementalTree };

Backend parse_backend(const std::string& name);
const char* backend_name(Backend b);

struct ForestError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ForestCounters {
    std::int64_t grows = 0;
    std::int64_t unions = 0;
    std::int64_t finds = 0;
    std::int64_t work = 0;  // elementary steps
};

// A forest that only grows by leaves and whose node sets only merge a set
// into the set of its tree parent. find(v) is the root-most node of v's set.
// Node ids are 1..capacity.
class MergeForest {
public:
    virtual ~MergeForest() = default;

    virtual void make_root(int v) = 0;
    virtual void grow(int parent, int child) = 0;
    virtual void union_up(int v) = 0;
    virtual int find(int v) = 0;
    virtual bool contains(int v) const = 0;
    // Forget every node; capacity is kept.
    virtual void reset() = 0;

    virtual Backend backend() const = 0;
    const ForestCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }

protected:
    ForestCounters counters_;
};

std::unique_ptr<MergeForest> make_forest(Backend b, int capacity);

// Micro-set size used by the incremental-tree backend for a given capacity.
int micro_set_size(int capacity);

}  // namespace mcm
