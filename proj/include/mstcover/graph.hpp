#pragma once

#include <span>
#include <utility>
#include <vector>

namespace mstcover {

using EdgeId = int;

// An edge set is a sorted vector of distinct edge ids. Functions that
// accept one tolerate arbitrary order; functions that return one always
// sort ascending.
using EdgeSet = std::vector<EdgeId>;

struct Edge {
    int u = 0;
    int v = 0;
};

// Connected multigraph on nodes 0..n-1. Parallel edges are allowed
// (distinct ids, same endpoints); self loops are not. Edges are
// identified by their index in the edge list.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
};

// Union-find with path compression and union by rank.
class DisjointSets {
public:
    explicit DisjointSets(int n);
    int find(int x);
    // Returns false when x and y were already in the same component.
    bool unite(int x, int y);
    int component_count() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int components_;
};

struct SpanningTree {
    // Sorted ascending; n-1 edge ids.
    std::vector<EdgeId> edge_ids;

    bool contains(EdgeId e) const;
    bool operator==(const SpanningTree&) const = default;
};

// Kruskal's algorithm with deterministic tie-breaking: edges are scanned
// by (key[e], e) ascending, so among equal keys the smallest id wins.
// `keys` must have one entry per edge. The graph is connected by
// construction, so this always returns a spanning tree.
SpanningTree kruskal(const Graph& g, std::span<const int> keys);

// True when `edges` (any order, duplicates rejected) has exactly n-1 ids
// and connects all nodes.
bool is_spanning_tree(const Graph& g, const EdgeSet& edges);

// Sorts and returns the ids; throws std::invalid_argument on out-of-range
// or duplicate ids. Used to normalize caller-supplied edge sets.
EdgeSet normalize_edge_set(const Graph& g, EdgeSet edges);

// True when `sorted` (sorted ascending) contains e.
bool edge_set_contains(const EdgeSet& sorted, EdgeId e);

} // namespace mstcover
