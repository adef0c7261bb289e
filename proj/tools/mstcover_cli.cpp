// Command-line front end: generate instances, solve them, verify solutions.
//
// Exit codes: 0 success / feasible, 1 infeasible solution, 2 malformed
// input or bad parameters, 3 no perfect cover exists (a defined outcome,
// not an error), 4 instance too large for an exact solver.

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <json.hpp>

#include "mstcover/cover.hpp"
#include "mstcover/errors.hpp"
#include "mstcover/graph.hpp"
#include "mstcover/instances.hpp"
#include "mstcover/matroid.hpp"
#include "mstcover/oracle.hpp"
#include "mstcover/preferences.hpp"

namespace {

using namespace mstcover;
using nlohmann::json;

struct GenOptions {
    std::string kind;
    std::uint64_t seed = 0;
    int n = -1;
    int m = -1;
    int k = -1;
    int max_rank = -1;
    bool simple = false;
    std::string sc_file;
    int h = -1;
    std::string out;
};

struct SolveOptions {
    std::string alg;
    std::string input;
    std::string costs_file;
    std::string out;
    std::string json_report;
    bool parallel = false;
};

struct VerifyOptions {
    std::string input;
    std::string solution;
};

std::string slurp_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InstanceError(InstanceErrorCode::Io, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_gen(const GenOptions& opt) {
    std::optional<Instance> instance;
    if (opt.kind == "random") {
        if (opt.n < 0 || opt.m < 0 || opt.k < 0 || opt.max_rank < 0) {
            throw std::invalid_argument("--kind random needs --n, --m, --k, and --max-rank");
        }
        if (opt.h >= 0) {
            throw std::invalid_argument("--h applies to set-cover kinds only");
        }
        instance = generate_random(opt.n, opt.m, opt.k, opt.max_rank, opt.seed, opt.simple);
    } else {
        if (opt.sc_file.empty()) {
            throw std::invalid_argument("set-cover kinds need --sc-file");
        }
        SetCoverInput sc = read_set_cover(opt.sc_file);
        if (opt.kind == "setcover-t1") {
            if (opt.h >= 0) {
                throw std::invalid_argument("--h applies to --kind setcover-t2 only");
            }
            instance = reduce_set_cover(sc, 0);
        } else {
            if (opt.h < 1) {
                throw std::invalid_argument("--kind setcover-t2 needs --h >= 1");
            }
            instance = reduce_set_cover(sc, opt.h);
        }
    }
    write_instance(*instance, opt.out);
    std::cout << "wrote " << opt.out << "\n";
    std::cout << "digest " << instance_digest(*instance) << "\n";
    return 0;
}

double report_cost(const CostModel& cost, const EdgeSet& selected) {
    return cost.set_cost(selected);
}

int run_solve(const SolveOptions& opt) {
    Instance instance = read_instance(opt.input);
    const Graph& g = instance.graph;
    const Profile& profile = instance.profile;

    std::optional<CostModel> costs;
    if (!opt.costs_file.empty()) {
        json j = json::parse(slurp_or_throw(opt.costs_file), nullptr, false);
        if (j.is_discarded() || !j.is_array()) {
            throw InstanceError(InstanceErrorCode::Malformed,
                                "costs file must be a JSON array of numbers");
        }
        std::vector<double> values;
        for (const json& entry : j) {
            if (!entry.is_number()) {
                throw InstanceError(InstanceErrorCode::Malformed, "costs must be numbers");
            }
            values.push_back(entry.get<double>());
        }
        if (static_cast<int>(values.size()) != g.edge_count()) {
            throw InstanceError(InstanceErrorCode::LengthMismatch,
                                "cost vector length differs from the edge count");
        }
        for (double c : values) {
            if (c <= 0.0) {
                throw InstanceError(InstanceErrorCode::NonPositiveCost,
                                    "costs must be positive");
            }
        }
        costs = CostModel::additive(std::move(values));
    } else if (instance.costs) {
        costs = instance.costs;
    }

    Solution sol;
    auto start = std::chrono::steady_clock::now();
    if (opt.alg == "perfect") {
        std::optional<SpanningTree> tree = perfect_cover(g, profile);
        if (!tree) {
            std::cout << "no perfect cover\n";
            return 3;
        }
        CoverSolution cover;
        cover.selected = tree->edge_ids;
        cover.witnesses.assign(static_cast<size_t>(profile.agent_count()), *tree);
        sol = to_solution(cover);
    } else if (opt.alg == "greedy") {
        sol = to_solution(greedy_cover(g, profile, opt.parallel));
    } else if (opt.alg == "weighted-greedy") {
        CostModel model = costs ? *costs : CostModel::unit(g.edge_count());
        sol = to_solution(weighted_greedy_cover(g, profile, model, opt.parallel));
    } else if (opt.alg == "matroid-greedy") {
        std::vector<MstMatroid> matroids;
        matroids.reserve(static_cast<size_t>(profile.agent_count()));
        for (const Preference& pref : profile.agents()) {
            matroids.emplace_back(g, pref);
        }
        std::vector<const RankOracle*> oracles;
        for (const MstMatroid& matroid : matroids) {
            oracles.push_back(&matroid);
        }
        MatroidGreedyResult result = matroid_greedy(oracles, costs ? &*costs : nullptr);
        sol.selected = result.selected;
        sol.rounds = result.rounds;
        for (const Preference& pref : profile.agents()) {
            sol.witnesses.push_back(max_overlap_mst(g, pref, sol.selected).edge_ids);
        }
        sol.meta = json::object();
    } else { // exact
        CoverSolution cover;
        cover.selected = exact_min_cover(g, profile, costs ? &*costs : nullptr);
        for (const Preference& pref : profile.agents()) {
            cover.witnesses.push_back(max_overlap_mst(g, pref, cover.selected));
        }
        sol = to_solution(cover);
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    // The verdict is recomputed from the selected edges alone; the solver
    // is never trusted.
    bool verified = is_feasible(g, profile, sol.selected);

    std::string digest = instance_digest(instance);
    sol.meta["algorithm"] = opt.alg;
    sol.meta["instance_digest"] = digest;
    if (!opt.out.empty()) {
        write_solution(sol, opt.out);
    }

    std::cout << "algorithm " << opt.alg << "\n";
    std::cout << "instance " << digest << "\n";
    std::cout << "selected " << sol.selected.size() << " edges in " << sol.rounds.size()
              << " rounds\n";
    if (costs) {
        std::cout << "cost " << report_cost(*costs, sol.selected) << "\n";
    }
    std::cout << "verified " << (verified ? "yes" : "no") << "\n";
    std::cout << "wall time " << static_cast<double>(elapsed) / 1000.0 << " ms\n";
    if (!opt.out.empty()) {
        std::cout << "wrote " << opt.out << "\n";
    }

    if (!opt.json_report.empty()) {
        // Wall time stays out of the report so reruns are byte-identical.
        json report;
        report["algorithm"] = opt.alg;
        report["instance_digest"] = digest;
        report["solution_size"] = sol.selected.size();
        if (costs) {
            report["solution_cost"] = report_cost(*costs, sol.selected);
        }
        json rounds = json::array();
        for (const GreedyRound& round : sol.rounds) {
            rounds.push_back(
                json{{"chosen", round.chosen}, {"gain", round.gain}, {"votes", round.votes}});
        }
        report["rounds"] = std::move(rounds);
        report["verified"] = verified;
        std::ofstream out(opt.json_report, std::ios::binary);
        out << report.dump(2) + "\n";
        if (!out) {
            throw InstanceError(InstanceErrorCode::Io, "cannot write " + opt.json_report);
        }
    }
    return verified ? 0 : 1;
}

int run_verify(const VerifyOptions& opt) {
    Instance instance = read_instance(opt.input);
    Solution sol = read_solution(opt.solution);
    const Graph& g = instance.graph;
    const Profile& profile = instance.profile;
    int need = g.node_count() - 1;

    if (!sol.selected.empty() && sol.selected.back() >= g.edge_count()) {
        throw InstanceError(InstanceErrorCode::Malformed,
                            "solution selects an edge the instance does not have");
    }

    std::vector<int> satisfied(static_cast<size_t>(profile.agent_count()));
    for (int i = 0; i < profile.agent_count(); ++i) {
        satisfied[static_cast<size_t>(i)] = progress(g, profile.agent(i), sol.selected);
        std::cout << "agent " << (i + 1) << ": f_" << (i + 1) << " = "
                  << satisfied[static_cast<size_t>(i)] << " / " << need << "\n";
    }
    for (int i = 0; i < profile.agent_count(); ++i) {
        if (satisfied[static_cast<size_t>(i)] != need) {
            std::cout << "infeasible: agent " << (i + 1) << " unsatisfied (f_" << (i + 1)
                      << " = " << satisfied[static_cast<size_t>(i)] << ", needs " << need
                      << ")\n";
            return 1;
        }
    }

    // Witnesses, when present, are re-checked from first principles: one
    // per agent, inside the selected set, a spanning tree, and optimal
    // for its agent (same total rank as a Kruskal tree).
    if (!sol.witnesses.empty()) {
        if (static_cast<int>(sol.witnesses.size()) != profile.agent_count()) {
            std::cout << "infeasible: witness count differs from agent count\n";
            return 1;
        }
        for (int i = 0; i < profile.agent_count(); ++i) {
            const EdgeSet& w = sol.witnesses[static_cast<size_t>(i)];
            if (!w.empty() && w.back() >= g.edge_count()) {
                throw InstanceError(InstanceErrorCode::Malformed,
                                    "witness uses an edge the instance does not have");
            }
            for (EdgeId e : w) {
                if (!edge_set_contains(sol.selected, e)) {
                    std::cout << "infeasible: witness " << (i + 1)
                              << " leaves the selected set\n";
                    return 1;
                }
            }
            if (!is_spanning_tree(g, w)) {
                std::cout << "infeasible: witness " << (i + 1) << " is not a spanning tree\n";
                return 1;
            }
            const Preference& pref = profile.agent(i);
            long long total = 0;
            for (EdgeId e : w) {
                total += pref.rank(e);
            }
            long long best = 0;
            for (EdgeId e : kruskal(g, pref.ranks()).edge_ids) {
                best += pref.rank(e);
            }
            if (total != best) {
                std::cout << "infeasible: witness " << (i + 1)
                          << " is not optimal for its agent\n";
                return 1;
            }
        }
    }
    std::cout << "feasible\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiagent spanning-tree cover toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate an instance file");
    // the hub option below is spelled --h, so help must not claim -h
    cmd_gen->set_help_flag("--help", "print help and exit");
    cmd_gen->add_option("--kind", gen.kind, "random | setcover-t1 | setcover-t2")
        ->required()
        ->check(CLI::IsMember({"random", "setcover-t1", "setcover-t2"}));
    cmd_gen->add_option("--seed", gen.seed, "PRNG seed (random kind)");
    cmd_gen->add_option("--n", gen.n, "node count (random kind)");
    cmd_gen->add_option("--m", gen.m, "edge count (random kind)");
    cmd_gen->add_option("--k", gen.k, "agent count (random kind)");
    cmd_gen->add_option("--max-rank", gen.max_rank, "ranks are drawn from 1..max-rank");
    cmd_gen->add_flag("--simple", gen.simple, "forbid parallel edges");
    cmd_gen->add_option("--sc-file", gen.sc_file, "set-cover input (set-cover kinds)");
    cmd_gen->add_option("--h", gen.h, "hub replication factor (setcover-t2)");
    cmd_gen->add_option("--out", gen.out, "instance file to write")->required();

    SolveOptions solve;
    CLI::App* cmd_solve = app.add_subcommand("solve", "Solve an instance");
    cmd_solve
        ->add_option("--alg", solve.alg,
                     "perfect | greedy | weighted-greedy | matroid-greedy | exact")
        ->required()
        ->check(CLI::IsMember({"perfect", "greedy", "weighted-greedy", "matroid-greedy",
                               "exact"}));
    cmd_solve->add_option("--input", solve.input, "instance file")->required();
    cmd_solve->add_option("--costs", solve.costs_file,
                          "JSON array of per-edge costs (overrides instance costs)");
    cmd_solve->add_option("--out", solve.out, "solution file to write");
    cmd_solve->add_option("--json-report", solve.json_report, "machine-readable report path");
    cmd_solve->add_flag("--parallel-agents", solve.parallel,
                        "evaluate agents concurrently inside each greedy round");

    VerifyOptions verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Verify a solution file");
    cmd_verify->add_option("--input", verify.input, "instance file")->required();
    cmd_verify->add_option("--solution", verify.solution, "solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gen->parsed()) {
            return run_gen(gen);
        }
        if (cmd_solve->parsed()) {
            return run_solve(solve);
        }
        return run_verify(verify);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InstanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
