#pragma once

// Small fixtures shared by the test files.

#include <vector>

#include "mstcover/graph.hpp"
#include "mstcover/preferences.hpp"

namespace testutil {

using namespace mstcover;

// The running 4-node example: a triangle a-c-d (nodes 0,2,3) with node 1
// pendant on node 0. Edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(2,3). Every
// spanning tree must use edge 0.
inline Graph pendant_triangle() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}});
}

// Two agents with opposed unique optimal trees on pendant_triangle():
// agent 0's is {0,1,3}, agent 1's is {0,2,3}. No single tree suits both.
inline Profile pendant_profile() {
    return Profile({Preference({1, 1, 2, 1}), Preference({1, 2, 1, 1})});
}

// Triangle on 3 nodes; edges 0:(0,1) 1:(1,2) 2:(0,2).
inline Graph triangle() {
    return Graph(3, {{0, 1}, {1, 2}, {0, 2}});
}

// Complete graph on 4 nodes; edges in id order:
// 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3).
inline Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace testutil
