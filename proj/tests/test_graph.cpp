#include "doctest.h"

#include <stdexcept>

#include "mstcover/graph.hpp"
#include "mstcover/instances.hpp"
#include "mstcover/oracle.hpp"

#include "helpers.hpp"

using namespace mstcover;

TEST_CASE("graph construction validates its invariants") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}), std::invalid_argument);            // disconnected
    CHECK_THROWS_AS(Graph(3, {{0, 1}}), std::invalid_argument);      // node 2 unreached
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);      // endpoint out of range
    CHECK_THROWS_AS(Graph(2, {{-1, 1}}), std::invalid_argument);     // endpoint out of range
    CHECK_THROWS_AS(Graph(2, {{1, 1}, {0, 1}}), std::invalid_argument); // self loop

    CHECK_NOTHROW(Graph(1, {}));

    // Parallel edges are distinct edges.
    Graph multi(2, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(multi.edge_count() == 3);
    CHECK(multi.edge(2).u == 1);
}

TEST_CASE("disjoint sets merge components") {
    DisjointSets ds(4);
    CHECK(ds.component_count() == 4);
    CHECK(ds.unite(0, 1));
    CHECK_FALSE(ds.unite(1, 0));
    CHECK(ds.find(0) == ds.find(1));
    CHECK(ds.find(2) != ds.find(0));
    CHECK(ds.unite(2, 3));
    CHECK(ds.unite(0, 3));
    CHECK(ds.component_count() == 1);
    CHECK(ds.find(2) == ds.find(1));
}

TEST_CASE("kruskal follows the key order and breaks ties by id") {
    Graph pendant = testutil::pendant_triangle();
    std::vector<int> agent0{1, 1, 2, 1};
    CHECK(kruskal(pendant, agent0).edge_ids == std::vector<EdgeId>{0, 1, 3});

    Graph single(2, {{0, 1}});
    std::vector<int> any{7};
    CHECK(kruskal(single, any).edge_ids == std::vector<EdgeId>{0});

    // All keys equal on K4: the first three edges by id are acyclic.
    Graph k4 = testutil::k4();
    std::vector<int> tied(6, 1);
    CHECK(kruskal(k4, tied).edge_ids == std::vector<EdgeId>{0, 1, 2});

    Graph tri = testutil::triangle();
    std::vector<int> keys{5, 1, 1};
    CHECK(kruskal(tri, keys).edge_ids == std::vector<EdgeId>{1, 2});

    std::vector<int> short_keys{1, 2};
    CHECK_THROWS_AS(kruskal(tri, short_keys), std::invalid_argument);
}

TEST_CASE("kruskal output is minimal among all spanning trees") {
    // For any graph and any weights matching the rank order, the tree
    // kruskal builds has minimum total weight; certified by enumeration.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Instance inst = generate_random(3 + static_cast<int>(seed % 4), 8, 2, 3, seed);
        std::vector<SpanningTree> all = enumerate_spanning_trees(inst.graph);
        REQUIRE(!all.empty());
        for (const Preference& pref : inst.profile.agents()) {
            auto total = [&](const SpanningTree& t) {
                long long sum = 0;
                for (EdgeId e : t.edge_ids) {
                    sum += pref.rank(e);
                }
                return sum;
            };
            SpanningTree built = kruskal(inst.graph, pref.ranks());
            CHECK(is_spanning_tree(inst.graph, built.edge_ids));
            long long best = total(all.front());
            for (const SpanningTree& t : all) {
                best = std::min(best, total(t));
            }
            CHECK(total(built) == best);
        }
    }
}

TEST_CASE("is_spanning_tree accepts exactly the spanning trees") {
    Graph pendant = testutil::pendant_triangle();
    CHECK(is_spanning_tree(pendant, {0, 1, 3}));
    CHECK(is_spanning_tree(pendant, {3, 0, 1})); // order does not matter
    CHECK_FALSE(is_spanning_tree(pendant, {0, 1, 2, 3})); // wrong cardinality
    CHECK_FALSE(is_spanning_tree(pendant, {1, 2, 3}));    // cycle, node 1 unreached
    CHECK_FALSE(is_spanning_tree(pendant, {0, 0, 1}));    // duplicate id
    CHECK_FALSE(is_spanning_tree(pendant, {0, 1, 9}));    // unknown id
    CHECK_FALSE(is_spanning_tree(pendant, {}));

    Graph trivial(1, {});
    CHECK(is_spanning_tree(trivial, {}));
}

TEST_CASE("normalize_edge_set sorts and validates") {
    Graph tri = testutil::triangle();
    CHECK(normalize_edge_set(tri, {2, 0}) == EdgeSet{0, 2});
    CHECK(normalize_edge_set(tri, {}) == EdgeSet{});
    CHECK_THROWS_AS(normalize_edge_set(tri, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_edge_set(tri, {3}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_edge_set(tri, {-1}), std::invalid_argument);

    CHECK(edge_set_contains({0, 2}, 2));
    CHECK_FALSE(edge_set_contains({0, 2}, 1));
}
