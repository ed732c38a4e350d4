// Native kernels for the evolving-neighbourhood clique enumerators.
// Nodes are dense int32 ids; every node set is a sorted std::vector.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace cf {

typedef std::vector<int32_t> NodeSet;

// Return nonzero to abort the run.
typedef int (*EmitFn)(void* ctx, const int32_t* nodes, int k, int64_t edge_idx);

enum Status { OK = 0, DUPLICATE_EDGE = 1, ABORTED = 2, SELF_LOOP = 3 };

struct RunResult {
    std::vector<uint64_t> counts;  // index = dimension
    uint64_t state_entries = 0;
    uint64_t state_keys = 0;
    int status = OK;
    int64_t bad_edge = -1;
};

inline bool insert_sorted(NodeSet& s, int32_t x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it != s.end() && *it == x) return false;
    s.insert(it, x);
    return true;
}

// Intersect sets into out (ascending). Starts from the smallest set.
inline void intersect_all(std::vector<const NodeSet*>& sets, NodeSet& out, NodeSet& tmp) {
    out.clear();
    if (sets.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < sets.size(); ++i)
        if (sets[i]->size() < sets[best]->size()) best = i;
    if (sets[best]->empty()) return;
    out.assign(sets[best]->begin(), sets[best]->end());
    for (std::size_t i = 0; i < sets.size() && !out.empty(); ++i) {
        if (i == best) continue;
        const NodeSet& other = *sets[i];
        tmp.clear();
        if (other.size() > 16 * out.size()) {
            auto lo = other.begin();
            for (int32_t x : out) {
                lo = std::lower_bound(lo, other.end(), x);
                if (lo == other.end()) break;
                if (*lo == x) tmp.push_back(x);
            }
        } else {
            std::set_intersection(out.begin(), out.end(), other.begin(), other.end(),
                                  std::back_inserter(tmp));
        }
        out.swap(tmp);
    }
}

inline void insert_into_clique(const NodeSet& s, int32_t z, NodeSet& t) {
    t.clear();
    auto it = std::lower_bound(s.begin(), s.end(), z);
    t.insert(t.end(), s.begin(), it);
    t.push_back(z);
    t.insert(t.end(), it, s.end());
}

class BoundaryRun {
  public:
    BoundaryRun(int32_t n_nodes, int d_max, EmitFn emit, void* ctx)
        : adj_(n_nodes), faces_(d_max + 2), d_max_(d_max), emit_(emit), ctx_(ctx),
          clique_(d_max + 2), z_(d_max + 2), ptrs_(d_max + 2) {
        res.counts.assign(d_max + 1, 0);
    }

    bool add_edge(int32_t x, int32_t y, int64_t idx) {
        if (x == y) return fail(SELF_LOOP, idx);
        if (x > y) std::swap(x, y);
        if (!insert_sorted(adj_[x], y)) return fail(DUPLICATE_EDGE, idx);
        insert_sorted(adj_[y], x);
        res.state_entries += 2;
        edge_ = idx;
        clique_[2].assign({x, y});
        return visit(2);
    }

    RunResult res;

  private:
    std::vector<NodeSet> adj_;
    // faces_[k]: face of k-1 nodes -> nodes completing it into a k-node clique
    std::vector<std::unordered_map<std::u32string, NodeSet>> faces_;
    int d_max_;
    EmitFn emit_;
    void* ctx_;
    int64_t edge_ = -1;
    std::vector<NodeSet> clique_, z_;
    std::vector<std::vector<const NodeSet*>> ptrs_;
    NodeSet tmp_;
    std::u32string key_;

    bool fail(int status, int64_t idx) {
        res.status = status;
        res.bad_edge = idx;
        return false;
    }

    bool visit(int k) {
        const NodeSet& s = clique_[k];
        res.counts[k - 1] += 1;
        if (emit_ && emit_(ctx_, s.data(), k, edge_)) return fail(ABORTED, edge_);
        if (k - 1 >= d_max_) return true;
        auto& ptrs = ptrs_[k];
        ptrs.clear();
        if (k == 2) {
            ptrs.push_back(&adj_[s[0]]);
            ptrs.push_back(&adj_[s[1]]);
        } else {
            auto& level = faces_[k];
            for (int i = 0; i < k; ++i) {
                key_.clear();
                for (int j = 0; j < k; ++j)
                    if (j != i) key_.push_back(static_cast<char32_t>(s[j]));
                auto found = level.find(key_);
                if (found == level.end()) {
                    found = level.emplace(key_, NodeSet()).first;
                    res.state_keys += 1;
                }
                if (insert_sorted(found->second, s[i])) res.state_entries += 1;
                // unordered_map references stay valid across rehash
                ptrs.push_back(&found->second);
            }
        }
        NodeSet& z = z_[k];
        intersect_all(ptrs, z, tmp_);
        for (std::size_t i = 0; i < z.size(); ++i) {
            insert_into_clique(s, z[i], clique_[k + 1]);
            if (!visit(k + 1)) return false;
        }
        return true;
    }
};

class MultilayerRun {
  public:
    MultilayerRun(int32_t n_nodes, int d_max, EmitFn emit, void* ctx)
        : layers_(d_max + 2), d_max_(d_max), emit_(emit), ctx_(ctx),
          clique_(d_max + 2), z_(d_max + 2), ptrs_(d_max + 2) {
        for (int k = 2; k <= d_max; ++k) layers_[k].resize(n_nodes);
        res.counts.assign(d_max + 1, 0);
    }

    bool add_edge(int32_t x, int32_t y, int64_t idx) {
        if (x == y) return fail(SELF_LOOP, idx);
        if (x > y) std::swap(x, y);
        auto& adj = layers_[2];
        if (adj[x].empty()) res.state_keys += 1;
        if (!insert_sorted(adj[x], y)) return fail(DUPLICATE_EDGE, idx);
        if (adj[y].empty()) res.state_keys += 1;
        insert_sorted(adj[y], x);
        res.state_entries += 2;
        edge_ = idx;
        clique_[2].assign({x, y});
        return visit(2, y);
    }

    RunResult res;

  private:
    // layers_[k][n]: layer gating extension of k-node cliques containing n
    std::vector<std::vector<NodeSet>> layers_;
    int d_max_;
    EmitFn emit_;
    void* ctx_;
    int64_t edge_ = -1;
    std::vector<NodeSet> clique_, z_;
    std::vector<std::vector<const NodeSet*>> ptrs_;
    NodeSet tmp_;

    bool fail(int status, int64_t idx) {
        res.status = status;
        res.bad_edge = idx;
        return false;
    }

    bool visit(int k, int32_t last) {
        const NodeSet& s = clique_[k];
        res.counts[k - 1] += 1;
        if (emit_ && emit_(ctx_, s.data(), k, edge_)) return fail(ABORTED, edge_);
        if (k - 1 >= d_max_) return true;
        auto& layer = layers_[k];
        auto& ptrs = ptrs_[k];
        ptrs.clear();
        for (int i = 0; i < k; ++i) {
            int32_t n = s[i];
            if (k > 2 && n != last) {
                if (layer[n].empty()) res.state_keys += 1;
                if (insert_sorted(layer[n], last)) res.state_entries += 1;
            }
            ptrs.push_back(&layer[n]);
        }
        NodeSet& z = z_[k];
        intersect_all(ptrs, z, tmp_);
        for (std::size_t i = 0; i < z.size(); ++i) {
            insert_into_clique(s, z[i], clique_[k + 1]);
            if (!visit(k + 1, z[i])) return false;
        }
        return true;
    }
};

template <class Run>
RunResult run_stream(const int32_t* u, const int32_t* v, int64_t m, int32_t n_nodes, int d_max,
                     EmitFn emit, void* ctx) {
    Run run(n_nodes, d_max, emit, ctx);
    for (int64_t i = 0; i < m; ++i)
        if (!run.add_edge(u[i], v[i], i)) break;
    return run.res;
}

inline RunResult boundary_recursive(const int32_t* u, const int32_t* v, int64_t m, int32_t n_nodes,
                                    int d_max, EmitFn emit, void* ctx) {
    return run_stream<BoundaryRun>(u, v, m, n_nodes, d_max, emit, ctx);
}

inline RunResult multilayer_recursive(const int32_t* u, const int32_t* v, int64_t m,
                                      int32_t n_nodes, int d_max, EmitFn emit, void* ctx) {
    return run_stream<MultilayerRun>(u, v, m, n_nodes, d_max, emit, ctx);
}

}  // namespace cf
