#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mstcover/cover.hpp"
#include "mstcover/graph.hpp"
#include "mstcover/matroid.hpp"
#include "mstcover/preferences.hpp"

namespace mstcover {

// A complete problem input: graph, one preference per agent, optional
// edge costs, and free-form provenance (generator name, seed, ...).
struct Instance {
    Graph graph;
    Profile profile;
    std::optional<CostModel> costs;
    nlohmann::json meta;
};

// A solver's output as stored on disk. `witnesses` and `rounds` may be
// empty (e.g. hand-written solutions); verification never trusts them.
struct Solution {
    EdgeSet selected;
    std::vector<EdgeSet> witnesses;
    std::vector<GreedyRound> rounds;
    nlohmann::json meta;
};

Solution to_solution(const CoverSolution& cover);

// Set-cover input: elements 0..universe_size-1 and a list of sets whose
// union is the whole universe.
struct SetCoverInput {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;
};

// Validates and normalizes (sorts each set, rejects duplicates within a
// set, requires the union to cover the universe).
SetCoverInput make_set_cover(int universe_size, std::vector<std::vector<int>> sets);

// Encodes a set-cover input as a cover instance on a chain of q "set"
// nodes b_1..b_q plus hub nodes joined to every b_i. h = 0 builds the
// single-hub variant; h >= 1 builds h*(q-1) hubs (then q >= 2 is
// required). Edge ids: the q-1 chain edges first, then hub edges grouped
// by hub. Each element j becomes an agent ranking chain edges and the hub
// edges into sets containing j at 1, everything else at 2; one extra
// agent ranks only the chain edges at 1. Covering elements then maps
// exactly to picking hub edges into chosen sets.
Instance reduce_set_cover(const SetCoverInput& sc, int h);

// Brute-forces both sides of the reduction's optimum identity:
// min cover size == hubs * (set-cover optimum) + q-1, where hubs is 1
// for h = 0 and h*(q-1) otherwise. Requires q >= 2 (with one set the
// construction degenerates). Size guards of the exact oracles apply.
bool opt_identity_check(const SetCoverInput& sc, int h);

// Seed-deterministic random instance: m edges drawn uniformly (no self
// loops; parallel edges allowed unless `simple`), redrawn until the graph
// is connected; ranks uniform in 1..max_rank.
Instance generate_random(int n, int m, int k, int max_rank, std::uint64_t seed,
                         bool simple = false);

// Canonical text form: UTF-8 JSON, object keys sorted, two-space indent,
// one trailing newline. Reading then writing any valid file yields these
// exact bytes (ranks are renumbered densely on load).
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);
Instance read_instance(const std::string& path);
void write_instance(const Instance& instance, const std::string& path);

// FNV-1a 64-bit digest of the canonical instance text, as 16 hex digits.
std::string instance_digest(const Instance& instance);

std::string solution_to_json(const Solution& solution);
Solution solution_from_json(const std::string& text);
Solution read_solution(const std::string& path);
void write_solution(const Solution& solution, const std::string& path);

SetCoverInput read_set_cover(const std::string& path);
void write_set_cover(const SetCoverInput& sc, const std::string& path);

// Rank oracles from a file of {"ground": m, "oracles": [...]} where each
// entry is {"kind": "uniform", "cap": c} or {"kind": "partition",
// "block_of": [...], "caps": [...]}. Test plumbing for matroid_greedy.
std::vector<std::unique_ptr<RankOracle>> read_rank_oracles(const std::string& path);

} // namespace mstcover
