#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mstcover/cover.hpp"
#include "mstcover/graph.hpp"
#include "mstcover/preferences.hpp"

namespace mstcover {

// Rank-query interface over a ground set 0..ground_size()-1. Implementations
// must be monotone with unit marginals and rank(empty) = 0; queries must be
// safe to run concurrently (read-only).
class RankOracle {
public:
    virtual ~RankOracle() = default;
    virtual int ground_size() const = 0;
    // `s` may be in any order; ids must be in range.
    virtual int rank(const EdgeSet& s) const = 0;

    // Derived: s is independent exactly when its rank equals its size.
    bool is_independent(const EdgeSet& s) const;
};

// The matroid an agent's preference induces on the edges: a set is
// independent when some agent-optimal spanning tree contains it, and the
// rank of any set equals the agent's progress on it.
class MstMatroid : public RankOracle {
public:
    MstMatroid(Graph graph, Preference pref);

    int ground_size() const override { return graph_.edge_count(); }
    int rank(const EdgeSet& s) const override;

    const Graph& graph() const { return graph_; }
    const Preference& pref() const { return pref_; }

private:
    Graph graph_;
    Preference pref_;
};

// rank(S) = min(|S|, cap): every set of at most cap elements is independent.
class UniformMatroid : public RankOracle {
public:
    UniformMatroid(int ground_size, int cap);
    int ground_size() const override { return ground_; }
    int rank(const EdgeSet& s) const override;

private:
    int ground_;
    int cap_;
};

// Ground set split into blocks, each with its own capacity:
// rank(S) = sum over blocks of min(|S ∩ block|, cap).
class PartitionMatroid : public RankOracle {
public:
    // block_of[e] = block index of element e; caps[b] = capacity of block b.
    PartitionMatroid(std::vector<int> block_of, std::vector<int> caps);
    int ground_size() const override { return static_cast<int>(block_of_.size()); }
    int rank(const EdgeSet& s) const override;

private:
    std::vector<int> block_of_;
    std::vector<int> caps_;
};

// Outcome of the exhaustive axiom check. On failure, `violation` names the
// broken property and `first`/`second` hold the offending set(s) (`second`
// is empty for single-set violations).
struct MatroidCheckResult {
    bool ok = true;
    std::string violation;
    EdgeSet first;
    EdgeSet second;
};

// Exhaustively verifies that the oracle is a matroid rank function:
// rank(empty) = 0 and rank(S) <= |S|; rank agrees with the size of the
// largest independent subset; independent sets are closed under subsets
// (hereditary); and any smaller independent set can be augmented from a
// larger one. Ground sets above 12 elements are rejected.
MatroidCheckResult check_matroid_axioms(const RankOracle& oracle);

// Alias for MstMatroid::rank, the shape most call sites want.
int mst_rank(const MstMatroid& matroid, const EdgeSet& s);

struct MatroidGreedyResult {
    EdgeSet selected; // sorted ascending
    std::vector<GreedyRound> rounds;
};

// Greedy over a family of rank oracles on one ground set: each round adds
// the element with the best summed rank gain per unit cost (ties by
// ascending id) until every oracle reaches its full rank. cost == nullptr
// means unit costs. Full ranks are computed once up front.
MatroidGreedyResult matroid_greedy(const std::vector<const RankOracle*>& oracles,
                                   const CostModel* cost = nullptr);

// Given an agent-optimal tree `t` and an outside edge `e`, returns the
// smallest-id edge on the t-cycle of `e` tied with `e` in the agent's
// preference — swapping the two yields another agent-optimal tree — or
// nullopt when `e` lies in no such tree. Rejects trees that are not
// agent-optimal and edges already in `t`.
std::optional<EdgeId> swap_check(const MstMatroid& matroid, EdgeId e, const SpanningTree& t);

} // namespace mstcover
