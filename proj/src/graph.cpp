#include "mstcover/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mstcover {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw std::invalid_argument("graph needs at least one node");
    }
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
            throw std::invalid_argument("edge " + std::to_string(i) + " endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("edge " + std::to_string(i) + " is a self loop");
        }
    }
    DisjointSets ds(n_);
    for (const Edge& e : edges_) {
        ds.unite(e.u, e.v);
    }
    if (ds.component_count() != 1) {
        throw std::invalid_argument("graph is not connected");
    }
}

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<size_t>(n)), rank_(static_cast<size_t>(n), 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
        parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
        x = parent_[static_cast<size_t>(x)];
    }
    return x;
}

bool DisjointSets::unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) {
        return false;
    }
    if (rank_[static_cast<size_t>(rx)] < rank_[static_cast<size_t>(ry)]) {
        std::swap(rx, ry);
    }
    parent_[static_cast<size_t>(ry)] = rx;
    if (rank_[static_cast<size_t>(rx)] == rank_[static_cast<size_t>(ry)]) {
        ++rank_[static_cast<size_t>(rx)];
    }
    --components_;
    return true;
}

bool SpanningTree::contains(EdgeId e) const {
    return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
}

SpanningTree kruskal(const Graph& g, std::span<const int> keys) {
    if (static_cast<int>(keys.size()) != g.edge_count()) {
        throw std::invalid_argument("kruskal: key vector length != edge count");
    }
    std::vector<EdgeId> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        int ka = keys[static_cast<size_t>(a)];
        int kb = keys[static_cast<size_t>(b)];
        return ka != kb ? ka < kb : a < b;
    });
    SpanningTree tree;
    tree.edge_ids.reserve(static_cast<size_t>(g.node_count() - 1));
    DisjointSets ds(g.node_count());
    for (EdgeId e : order) {
        const Edge& edge = g.edge(e);
        if (ds.unite(edge.u, edge.v)) {
            tree.edge_ids.push_back(e);
            if (ds.component_count() == 1) {
                break;
            }
        }
    }
    std::sort(tree.edge_ids.begin(), tree.edge_ids.end());
    return tree;
}

bool is_spanning_tree(const Graph& g, const EdgeSet& edges) {
    if (static_cast<int>(edges.size()) != g.node_count() - 1) {
        return false;
    }
    EdgeSet sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    DisjointSets ds(g.node_count());
    for (EdgeId e : sorted) {
        if (e < 0 || e >= g.edge_count()) {
            return false;
        }
        const Edge& edge = g.edge(e);
        if (!ds.unite(edge.u, edge.v)) {
            return false; // cycle
        }
    }
    return ds.component_count() == 1;
}

EdgeSet normalize_edge_set(const Graph& g, EdgeSet edges) {
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("edge set contains a duplicate id");
    }
    if (!edges.empty() && (edges.front() < 0 || edges.back() >= g.edge_count())) {
        throw std::invalid_argument("edge set contains an out-of-range id");
    }
    return edges;
}

bool edge_set_contains(const EdgeSet& sorted, EdgeId e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

} // namespace mstcover
