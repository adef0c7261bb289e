#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mstcover/graph.hpp"
#include "mstcover/preferences.hpp"

namespace mstcover {

// Edge-set cost: per-edge costs plus a set function, either additive
// (cost of a set = sum of its edges) or a caller-supplied oracle
// (expected monotone and submodular; spot-checked by tests, not enforced).
// Per-edge costs are strictly positive in both modes.
class CostModel {
public:
    static CostModel additive(std::vector<double> edge_costs);
    static CostModel unit(int edge_count);
    // Per-edge costs are taken from oracle queries on singletons;
    // oracle(empty) must be 0.
    static CostModel from_oracle(int edge_count, std::function<double(const EdgeSet&)> oracle);

    bool is_additive() const { return !oracle_; }
    int edge_count() const { return static_cast<int>(edge_costs_.size()); }
    double edge_cost(EdgeId e) const { return edge_costs_[static_cast<size_t>(e)]; }
    const std::vector<double>& edge_costs() const { return edge_costs_; }
    double set_cost(const EdgeSet& s) const;

private:
    CostModel(std::vector<double> edge_costs, std::function<double(const EdgeSet&)> oracle);

    std::vector<double> edge_costs_;
    std::function<double(const EdgeSet&)> oracle_; // empty in additive mode
};

// One greedy round: the edge picked, its marginal gain in total progress,
// and every edge's marginal gain ("votes") at the time of the pick.
// Edges already selected have votes[e] = 0.
struct GreedyRound {
    EdgeId chosen = -1;
    int gain = 0;
    std::vector<int> votes;
};

// Output of the cover solvers: the selected edge set (sorted ascending),
// one witness tree per agent (each an agent-optimal spanning tree lying
// inside `selected`), and the per-round trace in pick order.
struct CoverSolution {
    EdgeSet selected;
    std::vector<SpanningTree> witnesses;
    std::vector<GreedyRound> rounds;
};

// How many edges of the agent's best-overlapping optimal tree fall in
// `h`: builds the refinement of the preference that favors edges of `h`
// within each rank class, runs Kruskal on it, and counts the overlap.
// `h` may be in any order; ids must be in range.
int progress(const Graph& g, const Preference& pref, const EdgeSet& h);

// The tree behind `progress`: an agent-optimal spanning tree maximizing
// overlap with `h`. When progress(h) = n-1 this tree lies inside `h` and
// certifies feasibility for the agent.
SpanningTree max_overlap_mst(const Graph& g, const Preference& pref, const EdgeSet& h);

// Sum of progress over all agents. `h` is feasible exactly when this
// reaches agent_count * (node_count - 1).
int total_progress(const Graph& g, const Profile& profile, const EdgeSet& h);

// True when every agent's progress on `h` is n-1, i.e. `h` contains an
// optimal tree for everyone.
bool is_feasible(const Graph& g, const Profile& profile, const EdgeSet& h);

// Kruskal on the lexicographic aggregate preference. Returns the tree
// when it is optimal for every agent; otherwise nullopt. Complete: if any
// single tree satisfies all agents, this finds one.
std::optional<SpanningTree> perfect_cover(const Graph& g, const Profile& profile);

// Plural-voting greedy: each round adds the edge with the most votes
// (largest marginal gain in total progress), ties broken by ascending
// edge id, until every agent is satisfied. `parallel` fans the per-agent
// vote computation out across threads; results are identical either way.
CoverSolution greedy_cover(const Graph& g, const Profile& profile, bool parallel = false);

// Cost-aware greedy: each round adds the edge maximizing marginal gain
// divided by its cost (zero-gain edges never picked), ties by ascending
// edge id. With unit costs the trace is identical to greedy_cover.
CoverSolution weighted_greedy_cover(const Graph& g, const Profile& profile,
                                    const CostModel& cost, bool parallel = false);

} // namespace mstcover
