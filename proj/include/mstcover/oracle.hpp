#pragma once

#include <optional>
#include <vector>

#include "mstcover/cover.hpp"
#include "mstcover/graph.hpp"
#include "mstcover/preferences.hpp"

namespace mstcover {

// All of one agent's optimal spanning trees, each sorted ascending and
// the list itself in lexicographic order.
struct MstSet {
    std::vector<SpanningTree> trees;

    // Largest |T ∩ h| over the trees; the brute-force counterpart of
    // progress().
    int max_overlap(const EdgeSet& h) const;
};

// Every spanning tree of the graph, by recursive include/exclude with
// connectivity pruning. Guard: at most 16 edges.
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g);

// Scores every spanning tree by its total rank and keeps the minimum:
// using ranks as weights is one valid choice of weights matching the
// preorder, and any such choice selects the same trees. Guard: 16 edges.
MstSet enumerate_msts(const Graph& g, const Preference& pref);

// Smallest feasible edge set by exhaustive subset search, scanning
// size-major and within one size by ascending bitmask, so "the" optimum
// is deterministic. With a cost model, returns the cheapest feasible
// subset instead (first in scan order among equal costs). Guard: 16 edges.
EdgeSet exact_min_cover(const Graph& g, const Profile& profile, const CostModel* cost = nullptr);

// Every optimum the scan above would accept (all minimum-size, or all
// minimum-cost, feasible subsets), in scan order.
std::vector<EdgeSet> all_min_covers(const Graph& g, const Profile& profile,
                                    const CostModel* cost = nullptr);

// Cross-check for perfect_cover that shares none of its machinery: builds
// the tree minimizing the summed rank over all agents, then accepts it
// only if its per-agent totals match each agent's own optimal total.
std::optional<SpanningTree> perfect_cover_by_weight_sum(const Graph& g, const Profile& profile);

// Minimum number of sets covering 0..universe_size-1, by exhaustive
// search over set-index subsets (size-major, then ascending bitmask).
// Returns the chosen set indices, ascending. Guard: at most 16 sets.
std::vector<int> exact_set_cover(int universe_size, const std::vector<std::vector<int>>& sets);

// Ratio of summed per-edge costs to the cost of the whole set; 1 for
// additive costs. Rejects sets of cost zero.
double curvature(const CostModel& cost, const EdgeSet& h);

// Minimum curvature over every optimal cover of the instance.
double instance_curvature(const Graph& g, const Profile& profile, const CostModel& cost);

} // namespace mstcover
