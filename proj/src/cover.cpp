#include "mstcover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace mstcover {

namespace {

// Membership flags for an edge set given in any order.
std::vector<char> edge_flags(int edge_count, const EdgeSet& h) {
    std::vector<char> in(static_cast<size_t>(edge_count), 0);
    for (EdgeId e : h) {
        if (e < 0 || e >= edge_count) {
            throw std::invalid_argument("edge set contains an out-of-range id");
        }
        in[static_cast<size_t>(e)] = 1;
    }
    return in;
}

// Kruskal under the preference refined so that flagged edges beat their
// own rank class: key 2r-1 if flagged, 2r otherwise. This is the same
// tree as running kruskal on degrade(pref, h) — the keys induce the same
// order and kruskal breaks ties by id in both cases.
SpanningTree favoring_tree(const Graph& g, const Preference& pref, const std::vector<char>& in_h) {
    std::vector<int> keys(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        keys[static_cast<size_t>(e)] = 2 * pref.rank(e) - (in_h[static_cast<size_t>(e)] ? 1 : 0);
    }
    return kruskal(g, keys);
}

int overlap(const SpanningTree& tree, const std::vector<char>& in_h) {
    int count = 0;
    for (EdgeId e : tree.edge_ids) {
        count += in_h[static_cast<size_t>(e)] ? 1 : 0;
    }
    return count;
}

int progress_flags(const Graph& g, const Preference& pref, const std::vector<char>& in_h) {
    return overlap(favoring_tree(g, pref, in_h), in_h);
}

void check_profile(const Graph& g, const Profile& profile) {
    if (profile.edge_count() != g.edge_count()) {
        throw std::invalid_argument("profile and graph disagree on edge count");
    }
}

// Shared engine behind greedy_cover and weighted_greedy_cover.
// cost == nullptr means plain vote counts (equivalently, unit costs).
CoverSolution run_greedy(const Graph& g, const Profile& profile, const CostModel* cost,
                         bool parallel) {
    check_profile(g, profile);
    if (cost && cost->edge_count() != g.edge_count()) {
        throw std::invalid_argument("cost model and graph disagree on edge count");
    }
    int m = g.edge_count();
    int k = profile.agent_count();
    int target = k * (g.node_count() - 1);

    CoverSolution sol;
    std::vector<char> in_h(static_cast<size_t>(m), 0);
    std::vector<int> agent_progress(static_cast<size_t>(k), 0);
    int total = 0;

    // Marginal gains ("votes") one agent contributes to every unselected
    // edge. Read-only on shared state, so agents can run concurrently.
    auto agent_votes = [&](int i, std::vector<int>& votes) {
        const Preference& pref = profile.agent(i);
        std::vector<char> trial = in_h;
        for (int e = 0; e < m; ++e) {
            if (in_h[static_cast<size_t>(e)]) {
                continue;
            }
            trial[static_cast<size_t>(e)] = 1;
            int gain = progress_flags(g, pref, trial) - agent_progress[static_cast<size_t>(i)];
            trial[static_cast<size_t>(e)] = 0;
            votes[static_cast<size_t>(e)] += gain;
        }
    };

    auto collect_votes = [&]() {
        std::vector<int> votes(static_cast<size_t>(m), 0);
        unsigned hw = std::thread::hardware_concurrency();
        int workers = parallel ? static_cast<int>(std::min<unsigned>(hw ? hw : 1,
                                                                     static_cast<unsigned>(k)))
                               : 1;
        if (workers <= 1) {
            for (int i = 0; i < k; ++i) {
                agent_votes(i, votes);
            }
            return votes;
        }
        std::vector<std::vector<int>> partial(
            static_cast<size_t>(workers), std::vector<int>(static_cast<size_t>(m), 0));
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) {
            threads.emplace_back([&, t]() {
                for (int i = t; i < k; i += workers) {
                    agent_votes(i, partial[static_cast<size_t>(t)]);
                }
            });
        }
        for (std::thread& th : threads) {
            th.join();
        }
        for (const std::vector<int>& p : partial) {
            for (int e = 0; e < m; ++e) {
                votes[static_cast<size_t>(e)] += p[static_cast<size_t>(e)];
            }
        }
        return votes;
    };

    while (total < target) {
        std::vector<int> votes = collect_votes();
        // Pick the best edge: most votes, or best votes-to-cost ratio in
        // cost mode. Ratios compare by cross-multiplication so ties are
        // exact; equal candidates resolve to the smallest id.
        EdgeId best = -1;
        for (int e = 0; e < m; ++e) {
            if (in_h[static_cast<size_t>(e)] || votes[static_cast<size_t>(e)] <= 0) {
                continue;
            }
            if (best < 0) {
                best = e;
                continue;
            }
            double ga = votes[static_cast<size_t>(e)];
            double gb = votes[static_cast<size_t>(best)];
            bool better = cost ? ga * cost->edge_cost(best) > gb * cost->edge_cost(e) : ga > gb;
            if (better) {
                best = e;
            }
        }
        if (best < 0) {
            throw std::logic_error("greedy cover stalled: no edge improves total progress");
        }
        in_h[static_cast<size_t>(best)] = 1;
        int gain = votes[static_cast<size_t>(best)];
        sol.rounds.push_back(GreedyRound{best, gain, std::move(votes)});
        for (int i = 0; i < k; ++i) {
            agent_progress[static_cast<size_t>(i)] =
                progress_flags(g, profile.agent(i), in_h);
        }
        total = 0;
        for (int p : agent_progress) {
            total += p;
        }
    }

    for (int e = 0; e < m; ++e) {
        if (in_h[static_cast<size_t>(e)]) {
            sol.selected.push_back(e);
        }
    }
    sol.witnesses.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        sol.witnesses.push_back(favoring_tree(g, profile.agent(i), in_h));
    }
    return sol;
}

} // namespace

CostModel::CostModel(std::vector<double> edge_costs, std::function<double(const EdgeSet&)> oracle)
    : edge_costs_(std::move(edge_costs)), oracle_(std::move(oracle)) {
    for (size_t e = 0; e < edge_costs_.size(); ++e) {
        if (!std::isfinite(edge_costs_[e]) || edge_costs_[e] <= 0.0) {
            throw std::invalid_argument("cost of edge " + std::to_string(e) +
                                        " must be finite and positive");
        }
    }
}

CostModel CostModel::additive(std::vector<double> edge_costs) {
    return CostModel(std::move(edge_costs), nullptr);
}

CostModel CostModel::unit(int edge_count) {
    return CostModel(std::vector<double>(static_cast<size_t>(edge_count), 1.0), nullptr);
}

CostModel CostModel::from_oracle(int edge_count, std::function<double(const EdgeSet&)> oracle) {
    if (!oracle) {
        throw std::invalid_argument("cost oracle must be callable");
    }
    if (oracle(EdgeSet{}) != 0.0) {
        throw std::invalid_argument("cost oracle must map the empty set to 0");
    }
    std::vector<double> singles(static_cast<size_t>(edge_count));
    for (int e = 0; e < edge_count; ++e) {
        singles[static_cast<size_t>(e)] = oracle(EdgeSet{e});
    }
    return CostModel(std::move(singles), std::move(oracle));
}

double CostModel::set_cost(const EdgeSet& s) const {
    if (oracle_) {
        return oracle_(s);
    }
    double sum = 0.0;
    for (EdgeId e : s) {
        sum += edge_cost(e);
    }
    return sum;
}

int progress(const Graph& g, const Preference& pref, const EdgeSet& h) {
    if (pref.edge_count() != g.edge_count()) {
        throw std::invalid_argument("preference and graph disagree on edge count");
    }
    return progress_flags(g, pref, edge_flags(g.edge_count(), h));
}

SpanningTree max_overlap_mst(const Graph& g, const Preference& pref, const EdgeSet& h) {
    if (pref.edge_count() != g.edge_count()) {
        throw std::invalid_argument("preference and graph disagree on edge count");
    }
    return favoring_tree(g, pref, edge_flags(g.edge_count(), h));
}

int total_progress(const Graph& g, const Profile& profile, const EdgeSet& h) {
    check_profile(g, profile);
    std::vector<char> in_h = edge_flags(g.edge_count(), h);
    int sum = 0;
    for (const Preference& pref : profile.agents()) {
        sum += progress_flags(g, pref, in_h);
    }
    return sum;
}

bool is_feasible(const Graph& g, const Profile& profile, const EdgeSet& h) {
    check_profile(g, profile);
    std::vector<char> in_h = edge_flags(g.edge_count(), h);
    for (const Preference& pref : profile.agents()) {
        if (progress_flags(g, pref, in_h) != g.node_count() - 1) {
            return false;
        }
    }
    return true;
}

std::optional<SpanningTree> perfect_cover(const Graph& g, const Profile& profile) {
    check_profile(g, profile);
    Preference aggregate = lex_aggregate(profile);
    SpanningTree tree = kruskal(g, aggregate.ranks());
    for (const Preference& pref : profile.agents()) {
        if (progress(g, pref, tree.edge_ids) != g.node_count() - 1) {
            return std::nullopt;
        }
    }
    return tree;
}

CoverSolution greedy_cover(const Graph& g, const Profile& profile, bool parallel) {
    return run_greedy(g, profile, nullptr, parallel);
}

CoverSolution weighted_greedy_cover(const Graph& g, const Profile& profile, const CostModel& cost,
                                    bool parallel) {
    return run_greedy(g, profile, &cost, parallel);
}

} // namespace mstcover
