#pragma once

#include <vector>

#include "mstcover/graph.hpp"

namespace mstcover {

// An agent's total preorder over edges, stored as a rank vector: rank 1 is
// most preferred and equal ranks mean indifference. Input ranks may be any
// positive integers; the constructor renumbers them densely to 1..class_count().
class Preference {
public:
    explicit Preference(std::vector<int> ranks);

    int edge_count() const { return static_cast<int>(ranks_.size()); }
    int rank(EdgeId e) const { return ranks_[static_cast<size_t>(e)]; }
    const std::vector<int>& ranks() const { return ranks_; }

    // Number of distinct ranks after normalization.
    int class_count() const { return static_cast<int>(classes_.size()); }
    // Edge ids with rank j (1-based), ascending.
    const std::vector<EdgeId>& equivalence_class(int j) const;

    bool operator==(const Preference& other) const { return ranks_ == other.ranks_; }

private:
    std::vector<int> ranks_;
    std::vector<std::vector<EdgeId>> classes_;
};

// Preferences of all agents over a common edge list.
class Profile {
public:
    explicit Profile(std::vector<Preference> prefs);

    int agent_count() const { return static_cast<int>(prefs_.size()); }
    int edge_count() const { return prefs_.front().edge_count(); }
    const Preference& agent(int i) const { return prefs_[static_cast<size_t>(i)]; }
    const std::vector<Preference>& agents() const { return prefs_; }

private:
    std::vector<Preference> prefs_;
};

// Cardinal weights on edges; entries must be finite and non-negative.
struct WeightFunction {
    explicit WeightFunction(std::vector<double> values);

    double operator()(EdgeId e) const { return values[static_cast<size_t>(e)]; }
    int edge_count() const { return static_cast<int>(values.size()); }

    std::vector<double> values;
};

// True when the weights induce exactly this preorder: lower rank iff
// strictly smaller weight, equal rank iff equal weight.
bool is_consistent(const WeightFunction& w, const Preference& pref);

// Aggregate preference that orders edges by their rank vectors
// (sigma_1(e), ..., sigma_k(e)) lexicographically; edges with identical
// vectors tie.
Preference lex_aggregate(const Profile& profile);

// Refinement that splits every rank class in two: favored edges keep
// priority over the rest of their class, and order across classes is
// preserved. `favored` may be in any order; ids must be in range.
Preference degrade(const Preference& pref, const EdgeSet& favored);

} // namespace mstcover
