#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mstcover/errors.hpp"
#include "mstcover/instances.hpp"
#include "mstcover/oracle.hpp"
#include "mstcover/rng.hpp"

#include "helpers.hpp"

using namespace mstcover;

namespace {

EdgeSet mask_to_edges(unsigned mask, int m) {
    EdgeSet s;
    for (int e = 0; e < m; ++e) {
        if (mask & (1u << e)) {
            s.push_back(e);
        }
    }
    return s;
}

int overlap_count(const SpanningTree& t, const EdgeSet& sorted_h) {
    int count = 0;
    for (EdgeId e : t.edge_ids) {
        count += edge_set_contains(sorted_h, e) ? 1 : 0;
    }
    return count;
}

long long rank_total(const Preference& pref, const SpanningTree& t) {
    long long sum = 0;
    for (EdgeId e : t.edge_ids) {
        sum += pref.rank(e);
    }
    return sum;
}

Graph parallel_edges(int count) {
    std::vector<Edge> edges(static_cast<size_t>(count), Edge{0, 1});
    return Graph(2, edges);
}

} // namespace

TEST_CASE("enumerate_spanning_trees lists every tree exactly once") {
    SUBCASE("triangle has three") {
        std::vector<SpanningTree> trees = enumerate_spanning_trees(testutil::triangle());
        REQUIRE(trees.size() == 3);
        CHECK(trees[0].edge_ids == EdgeSet{0, 1});
        CHECK(trees[1].edge_ids == EdgeSet{0, 2});
        CHECK(trees[2].edge_ids == EdgeSet{1, 2});
    }

    SUBCASE("complete graph on four nodes has sixteen") {
        std::vector<SpanningTree> trees = enumerate_spanning_trees(testutil::k4());
        CHECK(trees.size() == 16);
    }

    SUBCASE("pendant triangle has three") {
        std::vector<SpanningTree> trees = enumerate_spanning_trees(testutil::pendant_triangle());
        REQUIRE(trees.size() == 3);
        CHECK(trees[0].edge_ids == EdgeSet{0, 1, 2});
        CHECK(trees[1].edge_ids == EdgeSet{0, 1, 3});
        CHECK(trees[2].edge_ids == EdgeSet{0, 2, 3});
    }

    SUBCASE("a tree is its own only spanning tree") {
        Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
        std::vector<SpanningTree> trees = enumerate_spanning_trees(path);
        REQUIRE(trees.size() == 1);
        CHECK(trees[0].edge_ids == EdgeSet{0, 1, 2});
    }

    SUBCASE("single node yields the empty tree") {
        std::vector<SpanningTree> trees = enumerate_spanning_trees(Graph(1, {}));
        REQUIRE(trees.size() == 1);
        CHECK(trees[0].edge_ids.empty());
    }

    SUBCASE("parallel edges count separately") {
        CHECK(enumerate_spanning_trees(parallel_edges(2)).size() == 2);
        CHECK(enumerate_spanning_trees(parallel_edges(16)).size() == 16);
    }

    SUBCASE("more than 16 edges is refused") {
        CHECK_THROWS_AS(enumerate_spanning_trees(parallel_edges(17)), SizeGuardError);
    }

    SUBCASE("output trees are valid, sorted, and distinct") {
        for (int seed = 400; seed < 410; ++seed) {
            Instance inst = generate_random(3 + seed % 4, 6 + seed % 4, 1, 2,
                                            static_cast<std::uint64_t>(seed));
            std::vector<SpanningTree> trees = enumerate_spanning_trees(inst.graph);
            REQUIRE(!trees.empty());
            for (size_t i = 0; i < trees.size(); ++i) {
                CHECK(is_spanning_tree(inst.graph, trees[i].edge_ids));
                if (i > 0) {
                    CHECK(trees[i - 1].edge_ids < trees[i].edge_ids);
                }
            }
        }
    }
}

TEST_CASE("enumerate_msts keeps exactly the minimum-total trees") {
    Graph tri = testutil::triangle();

    SUBCASE("one strictly worst edge leaves a unique optimum") {
        MstSet msts = enumerate_msts(tri, Preference({1, 1, 2}));
        REQUIRE(msts.trees.size() == 1);
        CHECK(msts.trees[0].edge_ids == EdgeSet{0, 1});
    }

    SUBCASE("one strictly best edge leaves two optima") {
        MstSet msts = enumerate_msts(tri, Preference({1, 2, 2}));
        REQUIRE(msts.trees.size() == 2);
        CHECK(msts.trees[0].edge_ids == EdgeSet{0, 1});
        CHECK(msts.trees[1].edge_ids == EdgeSet{0, 2});
    }

    SUBCASE("full indifference keeps every tree") {
        CHECK(enumerate_msts(tri, Preference({1, 1, 1})).trees.size() == 3);
        CHECK(enumerate_msts(testutil::k4(), Preference({1, 1, 1, 1, 1, 1})).trees.size() == 16);
    }

    SUBCASE("pendant triangle agents have unique optima") {
        Graph g = testutil::pendant_triangle();
        MstSet first = enumerate_msts(g, Preference({1, 1, 2, 1}));
        REQUIRE(first.trees.size() == 1);
        CHECK(first.trees[0].edge_ids == EdgeSet{0, 1, 3});
        MstSet second = enumerate_msts(g, Preference({1, 2, 1, 1}));
        REQUIRE(second.trees.size() == 1);
        CHECK(second.trees[0].edge_ids == EdgeSet{0, 2, 3});
    }

    SUBCASE("mismatched preference is rejected") {
        CHECK_THROWS_AS(enumerate_msts(tri, Preference({1, 2})), std::invalid_argument);
    }

    SUBCASE("kept trees share the optimal total; everything else is worse") {
        for (int seed = 420; seed < 430; ++seed) {
            Instance inst = generate_random(4, 7, 1, 3, static_cast<std::uint64_t>(seed));
            const Preference& pref = inst.profile.agent(0);
            MstSet msts = enumerate_msts(inst.graph, pref);
            REQUIRE(!msts.trees.empty());
            long long best = rank_total(pref, msts.trees.front());
            for (const SpanningTree& t : msts.trees) {
                CHECK(rank_total(pref, t) == best);
            }
            for (const SpanningTree& t : enumerate_spanning_trees(inst.graph)) {
                CHECK(rank_total(pref, t) >= best);
            }
            // kruskal lands inside the set
            SpanningTree greedy_tree = kruskal(inst.graph, pref.ranks());
            CHECK(std::find(msts.trees.begin(), msts.trees.end(), greedy_tree) !=
                  msts.trees.end());
        }
    }
}

TEST_CASE("MstSet::max_overlap") {
    Graph g = testutil::pendant_triangle();
    MstSet msts = enumerate_msts(g, Preference({1, 1, 2, 1}));
    CHECK(msts.max_overlap({0, 1}) == 2);
    CHECK(msts.max_overlap({2}) == 0);
    CHECK(msts.max_overlap({}) == 0);
    CHECK(msts.max_overlap({3, 1, 0}) == 3); // any order accepted
}

TEST_CASE("exact_min_cover finds the smallest feasible set") {
    SUBCASE("pendant triangle needs all four edges") {
        Graph g = testutil::pendant_triangle();
        Profile profile = testutil::pendant_profile();
        EdgeSet opt = exact_min_cover(g, profile);
        CHECK(opt == EdgeSet{0, 1, 2, 3});
        CHECK(is_feasible(g, profile, opt));
    }

    SUBCASE("tied triangle needs two; all three pairs are optimal") {
        Graph tri = testutil::triangle();
        Profile profile({Preference({1, 1, 1})});
        CHECK(exact_min_cover(tri, profile) == EdgeSet{0, 1});
        std::vector<EdgeSet> all = all_min_covers(tri, profile);
        REQUIRE(all.size() == 3);
        CHECK(all[0] == EdgeSet{0, 1});
        CHECK(all[1] == EdgeSet{0, 2});
        CHECK(all[2] == EdgeSet{1, 2});
    }

    SUBCASE("deterministic across calls") {
        Instance inst = generate_random(5, 9, 3, 3, 77);
        CHECK(exact_min_cover(inst.graph, inst.profile) ==
              exact_min_cover(inst.graph, inst.profile));
        CHECK(all_min_covers(inst.graph, inst.profile).front() ==
              exact_min_cover(inst.graph, inst.profile));
    }

    SUBCASE("cost mode minimizes cost instead of size") {
        Graph tri = testutil::triangle();
        Profile tied({Preference({1, 1, 1})});
        CostModel cost = CostModel::additive({5.0, 1.0, 1.0});
        EdgeSet opt = exact_min_cover(tri, tied, &cost);
        CHECK(opt == EdgeSet{1, 2});
        std::vector<EdgeSet> all = all_min_covers(tri, tied, &cost);
        REQUIRE(all.size() == 1);
        CHECK(all[0] == EdgeSet{1, 2});

        // two optimal trees, costs steering to the later one
        Profile shared({Preference({1, 2, 2}), Preference({1, 2, 2})});
        CostModel steer = CostModel::additive({10.0, 5.0, 1.0});
        CHECK(exact_min_cover(tri, shared) == EdgeSet{0, 1});
        CHECK(exact_min_cover(tri, shared, &steer) == EdgeSet{0, 2});
    }

    SUBCASE("guards and validation") {
        Graph wide = parallel_edges(17);
        Profile profile({Preference(std::vector<int>(17, 1))});
        CHECK_THROWS_AS(exact_min_cover(wide, profile), SizeGuardError);
        CHECK_THROWS_AS(exact_min_cover(testutil::triangle(), Profile({Preference({1, 1})})),
                        std::invalid_argument);
    }

    SUBCASE("matches a literal feasibility scan") {
        for (int seed = 440; seed < 455; ++seed) {
            int n = 3 + seed % 3;
            Instance inst = generate_random(n, n + 2 + seed % 2, 1 + seed % 3, 3,
                                            static_cast<std::uint64_t>(seed));
            int m = inst.graph.edge_count();
            REQUIRE(m <= 8);

            unsigned best_mask = 0;
            int best_size = -1;
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                if (!is_feasible(inst.graph, inst.profile, mask_to_edges(mask, m))) {
                    continue;
                }
                int size = std::popcount(mask);
                if (best_size < 0 || size < best_size ||
                    (size == best_size && mask < best_mask)) {
                    best_size = size;
                    best_mask = mask;
                }
            }
            REQUIRE(best_size >= 0);
            CHECK(exact_min_cover(inst.graph, inst.profile) == mask_to_edges(best_mask, m));

            // same story under additive costs
            std::vector<double> costs;
            for (int e = 0; e < m; ++e) {
                costs.push_back(1.0 + (seed * 13 + e * 5) % 10);
            }
            CostModel cost = CostModel::additive(costs);
            double best_cost = -1.0;
            unsigned best_cost_mask = 0;
            int best_cost_size = -1;
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                EdgeSet s = mask_to_edges(mask, m);
                if (!is_feasible(inst.graph, inst.profile, s)) {
                    continue;
                }
                double c = cost.set_cost(s);
                int size = std::popcount(mask);
                bool better = best_cost < 0.0 || c < best_cost ||
                              (c == best_cost && (size < best_cost_size ||
                                                  (size == best_cost_size &&
                                                   mask < best_cost_mask)));
                if (better) {
                    best_cost = c;
                    best_cost_mask = mask;
                    best_cost_size = size;
                }
            }
            CHECK(exact_min_cover(inst.graph, inst.profile, &cost) ==
                  mask_to_edges(best_cost_mask, m));
        }
    }
}

TEST_CASE("perfect_cover_by_weight_sum cross-checks perfect_cover") {
    SUBCASE("goldens") {
        CHECK_FALSE(perfect_cover_by_weight_sum(testutil::pendant_triangle(),
                                                testutil::pendant_profile())
                        .has_value());

        Graph tri = testutil::triangle();
        Profile same({Preference({1, 2, 2}), Preference({1, 2, 2})});
        std::optional<SpanningTree> tree = perfect_cover_by_weight_sum(tri, same);
        REQUIRE(tree.has_value());
        CHECK(is_feasible(tri, same, tree->edge_ids));

        Profile clash({Preference({1, 1, 2}), Preference({1, 2, 1})});
        CHECK_FALSE(perfect_cover_by_weight_sum(tri, clash).has_value());
        CHECK_FALSE(perfect_cover(tri, clash).has_value());
    }

    SUBCASE("verdict agrees with perfect_cover everywhere") {
        for (int seed = 460; seed < 500; ++seed) {
            Instance inst = generate_random(3 + seed % 4, 4 + seed % 6, 1 + seed % 4, 3,
                                            static_cast<std::uint64_t>(seed));
            std::optional<SpanningTree> a = perfect_cover(inst.graph, inst.profile);
            std::optional<SpanningTree> b = perfect_cover_by_weight_sum(inst.graph, inst.profile);
            CHECK(a.has_value() == b.has_value());
            if (a.has_value()) {
                CHECK(is_feasible(inst.graph, inst.profile, a->edge_ids));
            }
            if (b.has_value()) {
                CHECK(is_feasible(inst.graph, inst.profile, b->edge_ids));
            }
        }
    }
}

TEST_CASE("exact_set_cover") {
    SUBCASE("three pairwise sets over three elements need two") {
        std::vector<int> opt = exact_set_cover(3, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(opt == std::vector<int>{0, 1});
    }

    SUBCASE("one covering set wins alone") {
        CHECK(exact_set_cover(2, {{0, 1}}) == std::vector<int>{0});
        CHECK(exact_set_cover(2, {{0}, {1}, {0, 1}}) == std::vector<int>{2});
    }

    SUBCASE("takes singletons when nothing overlaps") {
        CHECK(exact_set_cover(3, {{0}, {1}, {2}}) == std::vector<int>{0, 1, 2});
    }

    SUBCASE("validation and guards") {
        CHECK_THROWS_AS(exact_set_cover(3, {{0, 5}}), std::invalid_argument);
        CHECK_THROWS_AS(exact_set_cover(3, {{-1}}), std::invalid_argument);
        CHECK_THROWS_AS(exact_set_cover(2, {{0}}), std::invalid_argument);
        CHECK_THROWS_AS(exact_set_cover(2, std::vector<std::vector<int>>(17, {0, 1})),
                        SizeGuardError);
        CHECK_THROWS_AS(exact_set_cover(31, {{0}}), SizeGuardError);
    }
}

TEST_CASE("curvature") {
    SUBCASE("additive costs always give 1") {
        CostModel cost = CostModel::additive({2.0, 3.5, 1.0, 4.0});
        CHECK(curvature(cost, {0}) == doctest::Approx(1.0));
        CHECK(curvature(cost, {0, 1, 2, 3}) == doctest::Approx(1.0));
    }

    SUBCASE("a max oracle shows economies of scale") {
        std::vector<double> singles{3.0, 1.0, 2.0};
        CostModel cost = CostModel::from_oracle(3, [singles](const EdgeSet& s) {
            double best = 0.0;
            for (EdgeId e : s) {
                best = std::max(best, singles[static_cast<size_t>(e)]);
            }
            return best;
        });
        CHECK(curvature(cost, {0, 1}) == doctest::Approx(4.0 / 3.0));
        CHECK(curvature(cost, {1, 2}) == doctest::Approx(1.5));
    }

    SUBCASE("zero-cost sets are rejected") {
        CostModel cost = CostModel::additive({1.0, 1.0});
        CHECK_THROWS_AS(curvature(cost, {}), std::invalid_argument);
        CostModel degenerate = CostModel::from_oracle(
            2, [](const EdgeSet& s) { return s.size() == 2 ? 0.0 : static_cast<double>(s.size()); });
        CHECK_THROWS_AS(curvature(degenerate, {0, 1}), std::invalid_argument);
    }

    SUBCASE("instance curvature scans every optimal cover") {
        Graph tri = testutil::triangle();
        Profile tied({Preference({1, 1, 1})});
        CostModel flat_max = CostModel::from_oracle(3, [](const EdgeSet& s) {
            return s.empty() ? 0.0 : 1.0;
        });
        CHECK(instance_curvature(tri, tied, flat_max) == doctest::Approx(2.0));

        Graph g = testutil::pendant_triangle();
        CostModel additive = CostModel::additive({2.0, 1.0, 3.0, 1.5});
        CHECK(instance_curvature(g, testutil::pendant_profile(), additive) ==
              doctest::Approx(1.0));
    }
}

TEST_CASE("single-edge marginals match optimal-tree membership") {
    // Adding e raises progress exactly when e lies in some maximum-overlap
    // optimal tree; removing e lowers it exactly when e lies in all of them.
    for (int seed = 520; seed < 530; ++seed) {
        int n = 3 + seed % 3;
        Instance inst = generate_random(n, n + 2, 2, 3, static_cast<std::uint64_t>(seed));
        int m = inst.graph.edge_count();
        Rng rng(static_cast<std::uint64_t>(seed));
        for (int trial = 0; trial < 8; ++trial) {
            EdgeSet h;
            for (int e = 0; e < m; ++e) {
                if (rng.below(2) == 1) {
                    h.push_back(e);
                }
            }
            for (int i = 0; i < inst.profile.agent_count(); ++i) {
                const Preference& pref = inst.profile.agent(i);
                MstSet msts = enumerate_msts(inst.graph, pref);
                int f = progress(inst.graph, pref, h);

                std::vector<const SpanningTree*> best_trees;
                for (const SpanningTree& t : msts.trees) {
                    if (overlap_count(t, h) == f) {
                        best_trees.push_back(&t);
                    }
                }
                REQUIRE(!best_trees.empty());

                for (int e = 0; e < m; ++e) {
                    if (edge_set_contains(h, e)) {
                        EdgeSet without;
                        for (EdgeId x : h) {
                            if (x != e) {
                                without.push_back(x);
                            }
                        }
                        int drop = f - progress(inst.graph, pref, without);
                        bool in_all = true;
                        for (const SpanningTree* t : best_trees) {
                            if (!t->contains(e)) {
                                in_all = false;
                                break;
                            }
                        }
                        CHECK((drop == 0 || drop == 1));
                        CHECK((drop == 1) == in_all);
                    } else {
                        EdgeSet with = h;
                        with.push_back(e);
                        std::sort(with.begin(), with.end());
                        int gain = progress(inst.graph, pref, with) - f;
                        bool in_some = false;
                        for (const SpanningTree* t : best_trees) {
                            if (t->contains(e)) {
                                in_some = true;
                                break;
                            }
                        }
                        CHECK((gain == 0 || gain == 1));
                        CHECK((gain == 1) == in_some);
                    }
                }
            }
        }
    }
}
