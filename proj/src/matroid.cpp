#include "mstcover/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "mstcover/errors.hpp"

namespace mstcover {

namespace {

EdgeSet mask_to_set(unsigned mask, int ground) {
    EdgeSet s;
    for (int e = 0; e < ground; ++e) {
        if (mask & (1u << e)) {
            s.push_back(e);
        }
    }
    return s;
}

// Edges of the unique t-path between two nodes, found by depth-first
// search over the tree's adjacency lists.
std::vector<EdgeId> tree_path_edges(const Graph& g, const SpanningTree& t, int from, int to) {
    std::vector<std::vector<std::pair<int, EdgeId>>> adj(static_cast<size_t>(g.node_count()));
    for (EdgeId e : t.edge_ids) {
        const Edge& edge = g.edge(e);
        adj[static_cast<size_t>(edge.u)].emplace_back(edge.v, e);
        adj[static_cast<size_t>(edge.v)].emplace_back(edge.u, e);
    }
    std::vector<EdgeId> via(static_cast<size_t>(g.node_count()), -1);
    std::vector<int> parent(static_cast<size_t>(g.node_count()), -1);
    std::vector<int> stack{from};
    parent[static_cast<size_t>(from)] = from;
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        if (node == to) {
            break;
        }
        for (auto [next, e] : adj[static_cast<size_t>(node)]) {
            if (parent[static_cast<size_t>(next)] < 0) {
                parent[static_cast<size_t>(next)] = node;
                via[static_cast<size_t>(next)] = e;
                stack.push_back(next);
            }
        }
    }
    std::vector<EdgeId> path;
    for (int node = to; node != from; node = parent[static_cast<size_t>(node)]) {
        path.push_back(via[static_cast<size_t>(node)]);
    }
    return path;
}

long long tree_weight(const Preference& pref, const SpanningTree& t) {
    long long sum = 0;
    for (EdgeId e : t.edge_ids) {
        sum += pref.rank(e);
    }
    return sum;
}

} // namespace

bool RankOracle::is_independent(const EdgeSet& s) const {
    return rank(s) == static_cast<int>(s.size());
}

MstMatroid::MstMatroid(Graph graph, Preference pref)
    : graph_(std::move(graph)), pref_(std::move(pref)) {
    if (pref_.edge_count() != graph_.edge_count()) {
        throw std::invalid_argument("preference and graph disagree on edge count");
    }
}

int MstMatroid::rank(const EdgeSet& s) const {
    return progress(graph_, pref_, s);
}

UniformMatroid::UniformMatroid(int ground_size, int cap) : ground_(ground_size), cap_(cap) {
    if (ground_ < 0 || cap_ < 0) {
        throw std::invalid_argument("uniform matroid needs non-negative ground size and cap");
    }
}

int UniformMatroid::rank(const EdgeSet& s) const {
    for (EdgeId e : s) {
        if (e < 0 || e >= ground_) {
            throw std::invalid_argument("element id out of range");
        }
    }
    return std::min(static_cast<int>(s.size()), cap_);
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of, std::vector<int> caps)
    : block_of_(std::move(block_of)), caps_(std::move(caps)) {
    for (int b : block_of_) {
        if (b < 0 || b >= static_cast<int>(caps_.size())) {
            throw std::invalid_argument("element assigned to an unknown block");
        }
    }
    for (int c : caps_) {
        if (c < 0) {
            throw std::invalid_argument("block capacity must be non-negative");
        }
    }
}

int PartitionMatroid::rank(const EdgeSet& s) const {
    std::vector<int> count(caps_.size(), 0);
    for (EdgeId e : s) {
        if (e < 0 || e >= ground_size()) {
            throw std::invalid_argument("element id out of range");
        }
        ++count[static_cast<size_t>(block_of_[static_cast<size_t>(e)])];
    }
    int total = 0;
    for (size_t b = 0; b < caps_.size(); ++b) {
        total += std::min(count[b], caps_[b]);
    }
    return total;
}

MatroidCheckResult check_matroid_axioms(const RankOracle& oracle) {
    int ground = oracle.ground_size();
    if (ground > 12) {
        throw SizeGuardError("axiom check supports ground sets of at most 12 elements");
    }
    unsigned full = 1u << ground;
    std::vector<int> rank(full);
    for (unsigned mask = 0; mask < full; ++mask) {
        rank[mask] = oracle.rank(mask_to_set(mask, ground));
    }

    auto fail1 = [&](const char* what, unsigned s) {
        return MatroidCheckResult{false, what, mask_to_set(s, ground), {}};
    };

    if (rank[0] != 0) {
        return fail1("rank of the empty set is not 0", 0);
    }
    for (unsigned mask = 0; mask < full; ++mask) {
        if (rank[mask] < 0 || rank[mask] > std::popcount(mask)) {
            return fail1("rank outside 0..|S|", mask);
        }
    }

    // Largest independent subset of each set, bottom-up: a set is its own
    // best when independent, otherwise the best over removing one element.
    // A true rank function must agree with this everywhere.
    std::vector<int> best(full, 0);
    for (unsigned mask = 1; mask < full; ++mask) {
        if (rank[mask] == std::popcount(mask)) {
            best[mask] = std::popcount(mask);
            continue;
        }
        int b = 0;
        for (unsigned bits = mask; bits; bits &= bits - 1) {
            unsigned without = mask ^ (bits & (0u - bits));
            b = std::max(b, best[without]);
        }
        best[mask] = b;
    }
    for (unsigned mask = 0; mask < full; ++mask) {
        if (rank[mask] != best[mask]) {
            return fail1("rank differs from the largest independent subset size", mask);
        }
    }

    std::vector<unsigned> independent;
    for (unsigned mask = 0; mask < full; ++mask) {
        if (rank[mask] == std::popcount(mask)) {
            independent.push_back(mask);
        }
    }

    // Hereditary: removing any element from an independent set leaves an
    // independent set.
    for (unsigned s : independent) {
        for (unsigned bits = s; bits; bits &= bits - 1) {
            unsigned without = s ^ (bits & (0u - bits));
            if (rank[without] != std::popcount(without)) {
                return MatroidCheckResult{false, "subset of an independent set is dependent",
                                          mask_to_set(s, ground), mask_to_set(without, ground)};
            }
        }
    }

    // Augmentation: a smaller independent set can always take some element
    // of a larger one and stay independent.
    for (unsigned s : independent) {
        for (unsigned t : independent) {
            if (std::popcount(s) <= std::popcount(t)) {
                continue;
            }
            bool extended = false;
            for (unsigned bits = s & ~t; bits; bits &= bits - 1) {
                unsigned grown = t | (bits & (0u - bits));
                if (rank[grown] == std::popcount(grown)) {
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                return MatroidCheckResult{false,
                                          "no element of the larger set extends the smaller",
                                          mask_to_set(s, ground), mask_to_set(t, ground)};
            }
        }
    }
    return MatroidCheckResult{};
}

int mst_rank(const MstMatroid& matroid, const EdgeSet& s) {
    return matroid.rank(s);
}

MatroidGreedyResult matroid_greedy(const std::vector<const RankOracle*>& oracles,
                                   const CostModel* cost) {
    if (oracles.empty()) {
        throw std::invalid_argument("matroid greedy needs at least one oracle");
    }
    int ground = oracles.front()->ground_size();
    for (const RankOracle* o : oracles) {
        if (!o || o->ground_size() != ground) {
            throw std::invalid_argument("all oracles must share one ground set");
        }
    }
    if (cost && cost->edge_count() != ground) {
        throw std::invalid_argument("cost model and oracles disagree on ground size");
    }

    EdgeSet everything(static_cast<size_t>(ground));
    std::iota(everything.begin(), everything.end(), 0);
    // Full ranks drive the loop guard; query them once.
    int target = 0;
    for (const RankOracle* o : oracles) {
        target += o->rank(everything);
    }

    MatroidGreedyResult result;
    std::vector<char> in_h(static_cast<size_t>(ground), 0);
    EdgeSet h;
    std::vector<int> current(oracles.size(), 0);
    int total = 0;
    while (total < target) {
        std::vector<int> gains(static_cast<size_t>(ground), 0);
        for (size_t i = 0; i < oracles.size(); ++i) {
            for (int e = 0; e < ground; ++e) {
                if (in_h[static_cast<size_t>(e)]) {
                    continue;
                }
                EdgeSet trial = h;
                trial.insert(std::lower_bound(trial.begin(), trial.end(), e), e);
                gains[static_cast<size_t>(e)] += oracles[i]->rank(trial) - current[i];
            }
        }
        EdgeId best = -1;
        for (int e = 0; e < ground; ++e) {
            if (in_h[static_cast<size_t>(e)] || gains[static_cast<size_t>(e)] <= 0) {
                continue;
            }
            if (best < 0) {
                best = e;
                continue;
            }
            double ge = gains[static_cast<size_t>(e)];
            double gb = gains[static_cast<size_t>(best)];
            bool better = cost ? ge * cost->edge_cost(best) > gb * cost->edge_cost(e) : ge > gb;
            if (better) {
                best = e;
            }
        }
        if (best < 0) {
            throw std::logic_error("matroid greedy stalled: no element raises any rank");
        }
        in_h[static_cast<size_t>(best)] = 1;
        h.insert(std::lower_bound(h.begin(), h.end(), best), best);
        int gain = gains[static_cast<size_t>(best)];
        result.rounds.push_back(GreedyRound{best, gain, std::move(gains)});
        total = 0;
        for (size_t i = 0; i < oracles.size(); ++i) {
            current[i] = oracles[i]->rank(h);
            total += current[i];
        }
    }
    result.selected = std::move(h);
    return result;
}

std::optional<EdgeId> swap_check(const MstMatroid& matroid, EdgeId e, const SpanningTree& t) {
    const Graph& g = matroid.graph();
    const Preference& pref = matroid.pref();
    if (e < 0 || e >= g.edge_count()) {
        throw std::invalid_argument("edge id out of range");
    }
    if (!is_spanning_tree(g, t.edge_ids)) {
        throw std::invalid_argument("swap check needs a spanning tree");
    }
    // Optimality test that does not go through rank queries: any two
    // agent-optimal trees have equal total rank, so compare against the
    // Kruskal tree's total.
    SpanningTree reference = kruskal(g, pref.ranks());
    if (tree_weight(pref, t) != tree_weight(pref, reference)) {
        throw std::invalid_argument("swap check needs an agent-optimal tree");
    }
    if (t.contains(e)) {
        throw std::invalid_argument("swap edge must lie outside the tree");
    }
    // On the unique cycle of t + e, swapping keeps both spanning-tree
    // structure and total rank exactly for edges tied with e.
    std::vector<EdgeId> cycle = tree_path_edges(g, t, g.edge(e).u, g.edge(e).v);
    std::optional<EdgeId> partner;
    for (EdgeId c : cycle) {
        if (pref.rank(c) == pref.rank(e) && (!partner || c < *partner)) {
            partner = c;
        }
    }
    return partner;
}

} // namespace mstcover
