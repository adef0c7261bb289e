#include "mstcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "mstcover/errors.hpp"

namespace mstcover {

namespace {

constexpr int kMaxEnumerationEdges = 16;

void check_edge_guard(const Graph& g, const char* what) {
    if (g.edge_count() > kMaxEnumerationEdges) {
        throw SizeGuardError(std::string(what) + " supports at most 16 edges");
    }
}

// Union-find without path compression so unions can be undone in LIFO
// order; the enumeration recursion below relies on that.
class RollbackDsu {
public:
    explicit RollbackDsu(int n)
        : parent_(static_cast<size_t>(n)), rank_(static_cast<size_t>(n), 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) {
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }

    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) {
            return false;
        }
        if (rank_[static_cast<size_t>(x)] < rank_[static_cast<size_t>(y)]) {
            std::swap(x, y);
        }
        parent_[static_cast<size_t>(y)] = x;
        bool bumped = rank_[static_cast<size_t>(x)] == rank_[static_cast<size_t>(y)];
        if (bumped) {
            ++rank_[static_cast<size_t>(x)];
        }
        log_.emplace_back(y, bumped ? x : -1);
        return true;
    }

    void undo() {
        auto [child, bumped] = log_.back();
        log_.pop_back();
        parent_[static_cast<size_t>(child)] = child;
        if (bumped >= 0) {
            --rank_[static_cast<size_t>(bumped)];
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> log_;
};

struct TreeEnumerator {
    const Graph& g;
    RollbackDsu dsu;
    std::vector<EdgeId> chosen;
    std::vector<SpanningTree> out;

    explicit TreeEnumerator(const Graph& graph) : g(graph), dsu(graph.node_count()) {}

    // Can the current components still be joined using edges idx..m-1?
    bool connectable(int idx) const {
        DisjointSets probe(g.node_count());
        for (int node = 0; node < g.node_count(); ++node) {
            probe.unite(node, dsu.find(node));
        }
        for (int e = idx; e < g.edge_count(); ++e) {
            probe.unite(g.edge(e).u, g.edge(e).v);
        }
        return probe.component_count() == 1;
    }

    void recurse(int idx) {
        if (static_cast<int>(chosen.size()) == g.node_count() - 1) {
            out.push_back(SpanningTree{chosen});
            return;
        }
        if (idx == g.edge_count() || !connectable(idx)) {
            return;
        }
        const Edge& edge = g.edge(idx);
        if (dsu.unite(edge.u, edge.v)) {
            chosen.push_back(idx);
            recurse(idx + 1);
            chosen.pop_back();
            dsu.undo();
            recurse(idx + 1);
        } else {
            // The edge closes a cycle against the current selection and
            // can appear in no extension; only the exclude branch exists.
            recurse(idx + 1);
        }
    }
};

long long tree_rank_total(const Preference& pref, const SpanningTree& t) {
    long long sum = 0;
    for (EdgeId e : t.edge_ids) {
        sum += pref.rank(e);
    }
    return sum;
}

// The agent orders its edges by (rank, id) once; feasibility of a bitmask
// is then one linear scan per agent with no sorting. An agent is
// satisfied exactly when a greedy tree build that always prefers in-mask
// edges within each rank class never needs an out-of-mask edge.
struct AgentScan {
    std::vector<EdgeId> by_rank;   // edge ids sorted by (rank, id)
    std::vector<int> class_begin;  // positions where a new rank class starts; ends with size
};

AgentScan make_scan(const Preference& pref) {
    AgentScan scan;
    for (int j = 1; j <= pref.class_count(); ++j) {
        scan.class_begin.push_back(static_cast<int>(scan.by_rank.size()));
        const std::vector<EdgeId>& cls = pref.equivalence_class(j);
        scan.by_rank.insert(scan.by_rank.end(), cls.begin(), cls.end());
    }
    scan.class_begin.push_back(static_cast<int>(scan.by_rank.size()));
    return scan;
}

bool mask_feasible(const Graph& g, const std::vector<AgentScan>& scans, unsigned mask,
                   std::vector<int>& parent, std::vector<int>& rnk) {
    int n = g.node_count();
    for (const AgentScan& scan : scans) {
        for (int node = 0; node < n; ++node) {
            parent[static_cast<size_t>(node)] = node;
            rnk[static_cast<size_t>(node)] = 0;
        }
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int x, int y) {
            x = find(x);
            y = find(y);
            if (x == y) {
                return false;
            }
            if (rnk[static_cast<size_t>(x)] < rnk[static_cast<size_t>(y)]) {
                std::swap(x, y);
            }
            parent[static_cast<size_t>(y)] = x;
            if (rnk[static_cast<size_t>(x)] == rnk[static_cast<size_t>(y)]) {
                ++rnk[static_cast<size_t>(x)];
            }
            return true;
        };
        int taken = 0;
        bool bad = false;
        for (size_t j = 0; j + 1 < scan.class_begin.size() && !bad && taken < n - 1; ++j) {
            int begin = scan.class_begin[j];
            int end = scan.class_begin[j + 1];
            // In-mask edges of the class first: these are the tree edges
            // the agent gets credit for.
            for (int pos = begin; pos < end; ++pos) {
                EdgeId e = scan.by_rank[static_cast<size_t>(pos)];
                if ((mask >> e) & 1u) {
                    if (unite(g.edge(e).u, g.edge(e).v)) {
                        ++taken;
                    }
                }
            }
            // If an out-of-mask edge of the same class still joins two
            // components, the agent's best tree needs an edge the mask
            // lacks.
            for (int pos = begin; pos < end && !bad; ++pos) {
                EdgeId e = scan.by_rank[static_cast<size_t>(pos)];
                if (!((mask >> e) & 1u)) {
                    if (unite(g.edge(e).u, g.edge(e).v)) {
                        bad = true;
                    }
                }
            }
        }
        if (bad || taken < n - 1) {
            return false;
        }
    }
    return true;
}

EdgeSet mask_to_edges(unsigned mask, int m) {
    EdgeSet s;
    for (int e = 0; e < m; ++e) {
        if ((mask >> e) & 1u) {
            s.push_back(e);
        }
    }
    return s;
}

// Visits every m-bit mask in (popcount, numeric) order.
template <typename Visit>
void for_each_mask_size_major(int m, Visit visit) {
    unsigned full = 1u << m;
    if (!visit(0u)) {
        return;
    }
    for (int size = 1; size <= m; ++size) {
        unsigned mask = (1u << size) - 1;
        while (mask < full) {
            if (!visit(mask)) {
                return;
            }
            unsigned low = mask & (0u - mask);
            unsigned ripple = mask + low;
            mask = (((mask ^ ripple) >> 2) / low) | ripple;
        }
    }
}

std::vector<EdgeSet> min_cover_scan(const Graph& g, const Profile& profile, const CostModel* cost,
                                    bool all) {
    check_edge_guard(g, "exact cover search");
    if (profile.edge_count() != g.edge_count()) {
        throw std::invalid_argument("profile and graph disagree on edge count");
    }
    if (cost && cost->edge_count() != g.edge_count()) {
        throw std::invalid_argument("cost model and graph disagree on edge count");
    }
    int m = g.edge_count();
    std::vector<AgentScan> scans;
    scans.reserve(static_cast<size_t>(profile.agent_count()));
    for (const Preference& pref : profile.agents()) {
        scans.push_back(make_scan(pref));
    }
    std::vector<int> parent(static_cast<size_t>(g.node_count()));
    std::vector<int> rnk(static_cast<size_t>(g.node_count()));

    std::vector<EdgeSet> winners;
    if (!cost) {
        // Size-major scan: the first feasible mask is the optimum; for
        // `all`, finish its size class to collect every tie.
        int found_size = -1;
        for_each_mask_size_major(m, [&](unsigned mask) {
            if (found_size >= 0 && std::popcount(mask) > found_size) {
                return false;
            }
            if (mask_feasible(g, scans, mask, parent, rnk)) {
                winners.push_back(mask_to_edges(mask, m));
                found_size = std::popcount(mask);
                return all;
            }
            return true;
        });
    } else {
        double best_cost = 0.0;
        for_each_mask_size_major(m, [&](unsigned mask) {
            if (mask_feasible(g, scans, mask, parent, rnk)) {
                double c = cost->set_cost(mask_to_edges(mask, m));
                if (winners.empty() || c < best_cost) {
                    winners.clear();
                    winners.push_back(mask_to_edges(mask, m));
                    best_cost = c;
                } else if (all && c == best_cost) {
                    winners.push_back(mask_to_edges(mask, m));
                }
            }
            return true;
        });
    }
    if (winners.empty()) {
        throw std::logic_error("connected instance has no feasible cover");
    }
    return winners;
}

} // namespace

int MstSet::max_overlap(const EdgeSet& h) const {
    EdgeSet sorted = h;
    std::sort(sorted.begin(), sorted.end());
    int best = 0;
    for (const SpanningTree& t : trees) {
        int count = 0;
        for (EdgeId e : t.edge_ids) {
            if (edge_set_contains(sorted, e)) {
                ++count;
            }
        }
        best = std::max(best, count);
    }
    return best;
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
    check_edge_guard(g, "spanning tree enumeration");
    TreeEnumerator enumerator(g);
    enumerator.recurse(0);
    std::sort(enumerator.out.begin(), enumerator.out.end(),
              [](const SpanningTree& a, const SpanningTree& b) { return a.edge_ids < b.edge_ids; });
    return enumerator.out;
}

MstSet enumerate_msts(const Graph& g, const Preference& pref) {
    if (pref.edge_count() != g.edge_count()) {
        throw std::invalid_argument("preference and graph disagree on edge count");
    }
    std::vector<SpanningTree> trees = enumerate_spanning_trees(g);
    long long best = 0;
    bool have = false;
    for (const SpanningTree& t : trees) {
        long long total = tree_rank_total(pref, t);
        if (!have || total < best) {
            best = total;
            have = true;
        }
    }
    MstSet result;
    for (SpanningTree& t : trees) {
        if (tree_rank_total(pref, t) == best) {
            result.trees.push_back(std::move(t));
        }
    }
    return result;
}

EdgeSet exact_min_cover(const Graph& g, const Profile& profile, const CostModel* cost) {
    return min_cover_scan(g, profile, cost, false).front();
}

std::vector<EdgeSet> all_min_covers(const Graph& g, const Profile& profile, const CostModel* cost) {
    return min_cover_scan(g, profile, cost, true);
}

std::optional<SpanningTree> perfect_cover_by_weight_sum(const Graph& g, const Profile& profile) {
    if (profile.edge_count() != g.edge_count()) {
        throw std::invalid_argument("profile and graph disagree on edge count");
    }
    std::vector<int> summed(static_cast<size_t>(g.edge_count()), 0);
    for (const Preference& pref : profile.agents()) {
        for (int e = 0; e < g.edge_count(); ++e) {
            summed[static_cast<size_t>(e)] += pref.rank(e);
        }
    }
    SpanningTree candidate = kruskal(g, summed);
    for (const Preference& pref : profile.agents()) {
        SpanningTree own = kruskal(g, pref.ranks());
        if (tree_rank_total(pref, candidate) != tree_rank_total(pref, own)) {
            return std::nullopt;
        }
    }
    return candidate;
}

std::vector<int> exact_set_cover(int universe_size, const std::vector<std::vector<int>>& sets) {
    if (static_cast<int>(sets.size()) > 16) {
        throw SizeGuardError("set cover search supports at most 16 sets");
    }
    if (universe_size < 0 || universe_size > 30) {
        throw SizeGuardError("set cover search supports universes of at most 30 elements");
    }
    unsigned target = universe_size == 0 ? 0u : (1u << universe_size) - 1;
    std::vector<unsigned> bits(sets.size(), 0);
    unsigned reachable = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
        for (int element : sets[i]) {
            if (element < 0 || element >= universe_size) {
                throw std::invalid_argument("set element outside the universe");
            }
            bits[i] |= 1u << element;
        }
        reachable |= bits[i];
    }
    if (reachable != target) {
        throw std::invalid_argument("sets do not cover the universe");
    }
    std::vector<int> chosen;
    bool found = false;
    for_each_mask_size_major(static_cast<int>(sets.size()), [&](unsigned mask) {
        unsigned covered = 0;
        for (size_t i = 0; i < sets.size(); ++i) {
            if ((mask >> i) & 1u) {
                covered |= bits[i];
            }
        }
        if (covered == target) {
            for (size_t i = 0; i < sets.size(); ++i) {
                if ((mask >> i) & 1u) {
                    chosen.push_back(static_cast<int>(i));
                }
            }
            found = true;
            return false;
        }
        return true;
    });
    if (!found) {
        throw std::logic_error("covering input produced no cover");
    }
    return chosen;
}

double curvature(const CostModel& cost, const EdgeSet& h) {
    double denom = cost.set_cost(h);
    if (denom == 0.0) {
        throw std::invalid_argument("curvature undefined for a zero-cost set");
    }
    double sum = 0.0;
    for (EdgeId e : h) {
        sum += cost.edge_cost(e);
    }
    return sum / denom;
}

double instance_curvature(const Graph& g, const Profile& profile, const CostModel& cost) {
    std::vector<EdgeSet> optima = all_min_covers(g, profile, &cost);
    double best = 0.0;
    bool have = false;
    for (const EdgeSet& h : optima) {
        double value = curvature(cost, h);
        if (!have || value < best) {
            best = value;
            have = true;
        }
    }
    return best;
}

} // namespace mstcover
