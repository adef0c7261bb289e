#include "mstcover/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mstcover/errors.hpp"
#include "mstcover/oracle.hpp"
#include "mstcover/rng.hpp"

namespace mstcover {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
    throw InstanceError(InstanceErrorCode::Malformed, what);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InstanceError(InstanceErrorCode::Io, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw InstanceError(InstanceErrorCode::Io, "cannot write " + path);
    }
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        malformed("invalid JSON");
    }
    return j;
}

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        malformed(std::string("field \"") + field + "\" must be an integer");
    }
    return j[field].get<int>();
}

// Reads an array of integers, rejecting anything else.
std::vector<int> int_array(const json& j, const std::string& what) {
    if (!j.is_array()) {
        malformed(what + " must be an array");
    }
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& entry : j) {
        if (!entry.is_number_integer()) {
            malformed(what + " must contain only integers");
        }
        out.push_back(entry.get<int>());
    }
    return out;
}

EdgeSet sorted_edge_set(const json& j, const std::string& what) {
    std::vector<int> ids = int_array(j, what);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        malformed(what + " contains a duplicate edge id");
    }
    if (!ids.empty() && ids.front() < 0) {
        malformed(what + " contains a negative edge id");
    }
    return ids;
}

json meta_or_empty(const json& j) {
    if (!j.contains("meta")) {
        return json::object();
    }
    if (!j["meta"].is_object()) {
        malformed("field \"meta\" must be an object");
    }
    return j["meta"];
}

json rounds_to_json(const std::vector<GreedyRound>& rounds) {
    json out = json::array();
    for (const GreedyRound& round : rounds) {
        out.push_back(json{{"chosen", round.chosen}, {"gain", round.gain}, {"votes", round.votes}});
    }
    return out;
}

std::vector<GreedyRound> rounds_from_json(const json& j) {
    if (!j.is_array()) {
        malformed("field \"rounds\" must be an array");
    }
    std::vector<GreedyRound> rounds;
    for (const json& entry : j) {
        if (!entry.is_object()) {
            malformed("each round must be an object");
        }
        GreedyRound round;
        round.chosen = require_int(entry, "chosen");
        round.gain = require_int(entry, "gain");
        if (!entry.contains("votes")) {
            malformed("each round needs a \"votes\" array");
        }
        round.votes = int_array(entry["votes"], "round votes");
        rounds.push_back(std::move(round));
    }
    return rounds;
}

} // namespace

Solution to_solution(const CoverSolution& cover) {
    Solution sol;
    sol.selected = cover.selected;
    for (const SpanningTree& tree : cover.witnesses) {
        sol.witnesses.push_back(tree.edge_ids);
    }
    sol.rounds = cover.rounds;
    sol.meta = json::object();
    return sol;
}

SetCoverInput make_set_cover(int universe_size, std::vector<std::vector<int>> sets) {
    if (universe_size < 1) {
        throw std::invalid_argument("set cover needs a non-empty universe");
    }
    if (sets.empty()) {
        throw std::invalid_argument("set cover needs at least one set");
    }
    std::vector<bool> covered(static_cast<size_t>(universe_size), false);
    for (std::vector<int>& s : sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw std::invalid_argument("a set contains a duplicate element");
        }
        for (int element : s) {
            if (element < 0 || element >= universe_size) {
                throw std::invalid_argument("set element outside the universe");
            }
            covered[static_cast<size_t>(element)] = true;
        }
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("sets do not cover the universe");
    }
    return SetCoverInput{universe_size, std::move(sets)};
}

Instance reduce_set_cover(const SetCoverInput& input, int h) {
    SetCoverInput sc = make_set_cover(input.universe_size, input.sets);
    if (h < 0) {
        throw std::invalid_argument("hub count parameter must be non-negative");
    }
    int q = static_cast<int>(sc.sets.size());
    int p = sc.universe_size;
    if (h >= 1 && q < 2) {
        throw std::invalid_argument("replicated-hub reduction needs at least two sets");
    }
    int hubs = h == 0 ? 1 : h * (q - 1);

    // Nodes: set nodes 0..q-1 form a chain; hub nodes q..q+hubs-1 connect
    // to every set node. Edge ids: chain edges first, then hub edges
    // grouped by hub, each group in set order.
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < q; ++i) {
        edges.push_back(Edge{i, i + 1});
    }
    for (int t = 0; t < hubs; ++t) {
        for (int i = 0; i < q; ++i) {
            edges.push_back(Edge{i, q + t});
        }
    }

    // Element agents love chain edges and the hub edges into sets that
    // contain them; the extra agent loves only the chain, forcing it into
    // every cover.
    std::vector<Preference> prefs;
    prefs.reserve(static_cast<size_t>(p) + 1);
    for (int element = 0; element <= p; ++element) {
        std::vector<int> ranks(edges.size(), 1);
        for (int t = 0; t < hubs; ++t) {
            for (int i = 0; i < q; ++i) {
                size_t id = static_cast<size_t>(q - 1 + t * q + i);
                bool liked = element < p &&
                             std::binary_search(sc.sets[static_cast<size_t>(i)].begin(),
                                                sc.sets[static_cast<size_t>(i)].end(), element);
                ranks[id] = liked ? 1 : 2;
            }
        }
        prefs.emplace_back(std::move(ranks));
    }

    json meta{{"generator", h == 0 ? "setcover-t1" : "setcover-t2"},
              {"universe", p},
              {"sets", q},
              {"h", h},
              {"hubs", hubs}};
    return Instance{Graph(q + hubs, std::move(edges)), Profile(std::move(prefs)), std::nullopt,
                    std::move(meta)};
}

bool opt_identity_check(const SetCoverInput& input, int h) {
    SetCoverInput sc = make_set_cover(input.universe_size, input.sets);
    int q = static_cast<int>(sc.sets.size());
    if (q < 2) {
        throw std::invalid_argument("identity check needs at least two sets");
    }
    Instance instance = reduce_set_cover(sc, h);
    EdgeSet cover_opt = exact_min_cover(instance.graph, instance.profile);
    std::vector<int> sc_opt = exact_set_cover(sc.universe_size, sc.sets);
    int hubs = h == 0 ? 1 : h * (q - 1);
    return static_cast<int>(cover_opt.size()) ==
           hubs * static_cast<int>(sc_opt.size()) + (q - 1);
}

Instance generate_random(int n, int m, int k, int max_rank, std::uint64_t seed, bool simple) {
    if (n < 1 || k < 1 || max_rank < 1) {
        throw std::invalid_argument("node, agent, and rank counts must be positive");
    }
    if (m < n - 1) {
        throw std::invalid_argument("too few edges for a connected graph");
    }
    if (n == 1 && m > 0) {
        throw std::invalid_argument("a one-node graph has no room for edges");
    }
    if (simple && m > n * (n - 1) / 2) {
        throw std::invalid_argument("too many edges for a simple graph");
    }

    Rng rng(seed);
    std::vector<Edge> edges;
    for (;;) {
        edges.clear();
        std::set<std::pair<int, int>> seen;
        for (int i = 0; i < m; ++i) {
            for (;;) {
                int u = rng.below(n);
                int t = rng.below(n - 1);
                int v = t >= u ? t + 1 : t; // skip the self loop
                std::pair<int, int> key{std::min(u, v), std::max(u, v)};
                if (simple && !seen.insert(key).second) {
                    continue;
                }
                edges.push_back(Edge{key.first, key.second});
                break;
            }
        }
        DisjointSets ds(n);
        for (const Edge& e : edges) {
            ds.unite(e.u, e.v);
        }
        if (ds.component_count() == 1) {
            break;
        }
    }

    std::vector<Preference> prefs;
    prefs.reserve(static_cast<size_t>(k));
    for (int agent = 0; agent < k; ++agent) {
        std::vector<int> ranks(static_cast<size_t>(m));
        for (int e = 0; e < m; ++e) {
            ranks[static_cast<size_t>(e)] = 1 + rng.below(max_rank);
        }
        prefs.emplace_back(std::move(ranks));
    }

    json meta{{"generator", "random"}, {"seed", seed},         {"n", n},
              {"m", m},               {"k", k},                {"max_rank", max_rank},
              {"simple", simple}};
    return Instance{Graph(n, std::move(edges)), Profile(std::move(prefs)), std::nullopt,
                    std::move(meta)};
}

std::string instance_to_json(const Instance& instance) {
    json j;
    j["n"] = instance.graph.node_count();
    json edges = json::array();
    for (const Edge& e : instance.graph.edges()) {
        edges.push_back(json::array({e.u, e.v}));
    }
    j["edges"] = std::move(edges);
    json agents = json::array();
    for (const Preference& pref : instance.profile.agents()) {
        agents.push_back(json{{"rank", pref.ranks()}});
    }
    j["agents"] = std::move(agents);
    if (instance.costs) {
        j["costs"] = instance.costs->edge_costs();
    }
    j["meta"] = instance.meta.is_null() ? json::object() : instance.meta;
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) {
        malformed("instance must be a JSON object");
    }
    int n = require_int(j, "n");
    if (n < 1) {
        malformed("\"n\" must be at least 1");
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        malformed("field \"edges\" must be an array");
    }
    std::vector<Edge> edges;
    for (const json& entry : j["edges"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            malformed("each edge must be a [u, v] integer pair");
        }
        Edge e{entry[0].get<int>(), entry[1].get<int>()};
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            malformed("edge endpoint out of range");
        }
        if (e.u == e.v) {
            malformed("self loops are not allowed");
        }
        edges.push_back(e);
    }
    int m = static_cast<int>(edges.size());

    // Connectivity is checked here, before Graph construction, so the
    // failure surfaces with its own error code.
    DisjointSets ds(n);
    for (const Edge& e : edges) {
        ds.unite(e.u, e.v);
    }
    if (ds.component_count() != 1) {
        throw InstanceError(InstanceErrorCode::Disconnected, "graph is not connected");
    }

    if (!j.contains("agents") || !j["agents"].is_array() || j["agents"].empty()) {
        malformed("field \"agents\" must be a non-empty array");
    }
    std::vector<Preference> prefs;
    for (const json& agent : j["agents"]) {
        if (!agent.is_object() || !agent.contains("rank")) {
            malformed("each agent must be an object with a \"rank\" array");
        }
        std::vector<int> ranks = int_array(agent["rank"], "agent rank vector");
        if (static_cast<int>(ranks.size()) != m) {
            throw InstanceError(InstanceErrorCode::LengthMismatch,
                                "agent rank vector length differs from the edge count");
        }
        for (int r : ranks) {
            if (r < 1) {
                malformed("ranks must be positive");
            }
        }
        prefs.emplace_back(std::move(ranks));
    }

    std::optional<CostModel> costs;
    if (j.contains("costs")) {
        if (!j["costs"].is_array()) {
            malformed("field \"costs\" must be an array");
        }
        std::vector<double> values;
        for (const json& entry : j["costs"]) {
            if (!entry.is_number()) {
                malformed("costs must be numbers");
            }
            values.push_back(entry.get<double>());
        }
        if (static_cast<int>(values.size()) != m) {
            throw InstanceError(InstanceErrorCode::LengthMismatch,
                                "cost vector length differs from the edge count");
        }
        for (double c : values) {
            if (!std::isfinite(c) || c <= 0.0) {
                throw InstanceError(InstanceErrorCode::NonPositiveCost,
                                    "costs must be finite and positive");
            }
        }
        costs = CostModel::additive(std::move(values));
    }

    return Instance{Graph(n, std::move(edges)), Profile(std::move(prefs)), std::move(costs),
                    meta_or_empty(j)};
}

Instance read_instance(const std::string& path) {
    return instance_from_json(slurp(path));
}

void write_instance(const Instance& instance, const std::string& path) {
    spill(path, instance_to_json(instance));
}

std::string instance_digest(const Instance& instance) {
    std::string text = instance_to_json(instance);
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

std::string solution_to_json(const Solution& solution) {
    json j;
    j["selected"] = solution.selected;
    json witnesses = json::array();
    for (const EdgeSet& w : solution.witnesses) {
        witnesses.push_back(w);
    }
    j["witnesses"] = std::move(witnesses);
    j["rounds"] = rounds_to_json(solution.rounds);
    j["meta"] = solution.meta.is_null() ? json::object() : solution.meta;
    return j.dump(2) + "\n";
}

Solution solution_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) {
        malformed("solution must be a JSON object");
    }
    if (!j.contains("selected")) {
        malformed("field \"selected\" is required");
    }
    Solution sol;
    sol.selected = sorted_edge_set(j["selected"], "\"selected\"");
    if (j.contains("witnesses")) {
        if (!j["witnesses"].is_array()) {
            malformed("field \"witnesses\" must be an array");
        }
        for (const json& w : j["witnesses"]) {
            sol.witnesses.push_back(sorted_edge_set(w, "witness"));
        }
    }
    if (j.contains("rounds")) {
        sol.rounds = rounds_from_json(j["rounds"]);
    }
    sol.meta = meta_or_empty(j);
    return sol;
}

Solution read_solution(const std::string& path) {
    return solution_from_json(slurp(path));
}

void write_solution(const Solution& solution, const std::string& path) {
    spill(path, solution_to_json(solution));
}

SetCoverInput read_set_cover(const std::string& path) {
    json j = parse_json(slurp(path));
    if (!j.is_object()) {
        malformed("set cover input must be a JSON object");
    }
    int universe = require_int(j, "universe");
    if (!j.contains("sets") || !j["sets"].is_array()) {
        malformed("field \"sets\" must be an array");
    }
    std::vector<std::vector<int>> sets;
    for (const json& s : j["sets"]) {
        sets.push_back(int_array(s, "each set"));
    }
    try {
        return make_set_cover(universe, std::move(sets));
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
}

void write_set_cover(const SetCoverInput& sc, const std::string& path) {
    json j;
    j["universe"] = sc.universe_size;
    j["sets"] = sc.sets;
    spill(path, j.dump(2) + "\n");
}

std::vector<std::unique_ptr<RankOracle>> read_rank_oracles(const std::string& path) {
    json j = parse_json(slurp(path));
    if (!j.is_object()) {
        malformed("rank oracle file must be a JSON object");
    }
    int ground = require_int(j, "ground");
    if (ground < 0) {
        malformed("\"ground\" must be non-negative");
    }
    if (!j.contains("oracles") || !j["oracles"].is_array() || j["oracles"].empty()) {
        malformed("field \"oracles\" must be a non-empty array");
    }
    std::vector<std::unique_ptr<RankOracle>> oracles;
    try {
        for (const json& o : j["oracles"]) {
            if (!o.is_object() || !o.contains("kind") || !o["kind"].is_string()) {
                malformed("each oracle needs a string \"kind\"");
            }
            std::string kind = o["kind"].get<std::string>();
            if (kind == "uniform") {
                oracles.push_back(std::make_unique<UniformMatroid>(ground, require_int(o, "cap")));
            } else if (kind == "partition") {
                if (!o.contains("block_of") || !o.contains("caps")) {
                    malformed("partition oracle needs \"block_of\" and \"caps\"");
                }
                std::vector<int> block_of = int_array(o["block_of"], "\"block_of\"");
                if (static_cast<int>(block_of.size()) != ground) {
                    throw InstanceError(InstanceErrorCode::LengthMismatch,
                                        "\"block_of\" length differs from \"ground\"");
                }
                oracles.push_back(std::make_unique<PartitionMatroid>(
                    std::move(block_of), int_array(o["caps"], "\"caps\"")));
            } else {
                malformed("unknown oracle kind \"" + kind + "\"");
            }
        }
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
    return oracles;
}

} // namespace mstcover
