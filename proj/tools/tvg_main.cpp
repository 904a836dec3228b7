#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tvg/classes.hpp"
#include "tvg/generators.hpp"
#include "tvg/reach.hpp"
#include "tvg/sim.hpp"
#include "tvg/teg.hpp"

using namespace tvg;
using nlohmann::json;

namespace {

std::string cut_to_string(const CutSize& c) {
    return c.unbounded ? "unbounded" : std::to_string(c.value);
}

struct SettingFlags {
    std::string link = "pl";
    std::string compute = "nc";
    std::string auth = "al";
    int drop = 0;
    double bernoulli = -1.0;
    int block = 0;

    Setting build() const {
        Setting s;
        if (link == "fll") {
            s.link = Setting::Link::FLL;
            s.fll = bernoulli >= 0.0 ? FllSchedule::bernoulli(bernoulli)
                                     : FllSchedule::deterministic(drop);
        } else if (link != "pl") {
            throw ConfigError("link must be pl or fll");
        }
        if (compute == "sc") {
            s.compute = Setting::Compute::SC;
            s.sc = ScSchedule::blocks(block);
        } else if (compute != "nc") {
            throw ConfigError("compute must be nc or sc");
        }
        if (auth == "am")
            s.auth = Setting::Auth::AM;
        else if (auth != "al")
            throw ConfigError("auth must be al or am");
        return s;
    }

    std::string describe() const {
        std::string out = auth + "/" + link;
        if (link == "fll")
            out += bernoulli >= 0.0 ? "(p=" + std::to_string(bernoulli) + ")"
                                    : "(d=" + std::to_string(drop) + ")";
        out += "/" + compute;
        if (compute == "sc") out += "(d=" + std::to_string(block) + ")";
        return out;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--link", link, "link model: pl | fll")->capture_default_str();
        cmd->add_option("--drop", drop, "fll deterministic drop count")->capture_default_str();
        cmd->add_option("--bernoulli", bernoulli, "fll bernoulli drop probability (overrides --drop)");
        cmd->add_option("--compute", compute, "computation model: nc | sc")->capture_default_str();
        cmd->add_option("--block", block, "sc block length")->capture_default_str();
        cmd->add_option("--auth", auth, "authentication: al | am")->capture_default_str();
    }
};

AdversaryKind parse_adversary(const std::string& name) {
    if (name == "none") return AdversaryKind::None;
    if (name == "silent") return AdversaryKind::Silent;
    if (name == "forge") return AdversaryKind::Forge;
    if (name == "collude") return AdversaryKind::Colluding;
    if (name == "replay-drop") return AdversaryKind::ReplayDrop;
    throw ConfigError("unknown adversary: " + name);
}

// Graph argument: a .teg path, or a generator spec ("model:k=v,..." with --gen-seed).
EvolvingGraph load_graph(const std::string& source, uint64_t gen_seed) {
    if (source.find(':') != std::string::npos || source.find('(') != std::string::npos)
        return generate(GeneratorSpec::parse(source), gen_seed);
    return load_teg_file(source);
}

std::set<NodeId> default_byzantine(int n, int f, NodeId s, std::optional<NodeId> t) {
    std::set<NodeId> byz;
    for (NodeId v = 0; v < n && static_cast<int>(byz.size()) < f; ++v)
        if (v != s && (!t || v != *t)) byz.insert(v);
    return byz;
}

int cmd_check(const std::string& file, const std::string& cls, std::optional<int> s,
              std::optional<int> t, std::optional<int> k, std::optional<int> from, bool exact) {
    auto g = load_teg_file(file);
    ClassQuery q{parse_class_tag(cls), s, t, k, from, exact, {}};
    auto v = is_member(g, q);
    std::cout << "member=" << (v.member ? "true" : "false")
              << " method=" << (v.method == Method::Polynomial ? "POLY" : "EXACT")
              << " witness=" << (v.witness.empty() ? "-" : v.witness) << "\n";
    return v.member ? 0 : 1;
}

int cmd_mincut(const std::string& file, NodeId s, NodeId t, int from) {
    auto g = load_teg_file(file);
    auto a = dyn_min_cut(g, s, t, from);
    auto b = dyn_min_cut_removal(g, s, t, from);
    if (a != b) {
        std::cout << "dynmincut=? oracles=DISAGREE a=" << cut_to_string(a)
                  << " b=" << cut_to_string(b) << "\n";
        return 2;
    }
    std::cout << "dynmincut=" << cut_to_string(a) << " oracles=agree\n";
    return 0;
}

struct TrialSpec {
    std::string graph_id;
    EvolvingGraph graph;
    Setting setting;
    std::string setting_name;
    FailureSpec failure;
    std::string adversary_name;
    RcInstance inst;
    uint64_t seed = 0;
    int horizon = 0;  // 0 = auto
};

TrialResult run_spec(const TrialSpec& ts) {
    int horizon = ts.horizon > 0 ? ts.horizon
                                 : auto_horizon(ts.graph, ts.setting, ts.inst);
    return run_trial(ts.graph, ts.setting, ts.failure, ts.inst, horizon, ts.seed);
}

int cmd_simulate(const TrialSpec& ts, const std::string& log_file) {
    auto r = run_spec(ts);
    if (!log_file.empty()) {
        std::ofstream out(log_file);
        out << r.log.serialize();
    }
    std::string when = "never";
    if (ts.inst.target) {
        auto t = r.delivery_time(*ts.inst.target, {ts.inst.source, ts.inst.payload});
        if (t) when = std::to_string(*t);
    } else if (r.liveness_ok) {
        int last = -1;
        for (const auto& [key, step] : r.delivered_at) last = std::max(last, step);
        when = std::to_string(last);
    }
    std::cout << "delivered_at=" << when << " safety=" << (r.safety_ok ? "ok" : "VIOLATION")
              << " predicted="
              << (r.predicted == Prediction::Solvable ? "solvable" : "unsolvable") << "\n";
    return 0;
}

int cmd_generate(const std::string& spec, uint64_t seed, const std::string& out_file) {
    auto g = generate(GeneratorSpec::parse(spec), seed);
    std::string text = serialize_teg(g);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        out << text;
    }
    return 0;
}

int cmd_experiment(const std::string& spec_file, const std::string& out_csv, int jobs) {
    std::ifstream in(spec_file);
    if (!in) throw ConfigError("cannot open experiment spec: " + spec_file);
    json spec = json::parse(in);

    std::vector<std::pair<std::string, EvolvingGraph>> graphs;
    for (const auto& e : spec.at("graphs")) {
        std::string id = e.at("id");
        if (e.contains("file"))
            graphs.emplace_back(id, load_teg_file(e.at("file")));
        else
            graphs.emplace_back(id, generate(GeneratorSpec::parse(e.at("generator")),
                                             e.value("seed", 0ull)));
    }

    std::vector<uint64_t> seeds = spec.value("seeds", std::vector<uint64_t>{0});
    int horizon = spec.value("horizon", 0);  // 0 = auto

    std::vector<TrialSpec> trials;
    const auto& combos = spec.at("combos");
    if (graphs.empty() || combos.empty() || seeds.empty())
        throw ConfigError("experiment spec expands to zero trials");

    for (const auto& [id, g] : graphs) {
        for (const auto& c : combos) {
            SettingFlags flags;
            flags.link = c.value("link", "pl");
            flags.compute = c.value("compute", "nc");
            flags.auth = c.value("auth", "al");
            flags.drop = c.value("drop", 0);
            flags.bernoulli = c.value("bernoulli", -1.0);
            flags.block = c.value("block", 0);

            TrialSpec ts;
            ts.graph_id = id;
            ts.graph = g;
            ts.setting = flags.build();
            ts.setting_name = flags.describe();
            ts.inst.source = c.at("s");
            if (c.contains("t") && !c.at("t").is_null()) ts.inst.target = c.at("t").get<int>();
            ts.inst.payload = c.value("payload", 0);
            ts.inst.start = c.value("start", 0);
            ts.failure.f = c.value("f", 0);
            ts.adversary_name = c.value("adversary", "none");
            ts.failure.adversary.kind = parse_adversary(ts.adversary_name);
            ts.failure.adversary.target =
                ts.failure.adversary.kind == AdversaryKind::ReplayDrop
                    ? Content{ts.inst.source, ts.inst.payload}
                    : Content{ts.inst.source, ts.inst.payload + 1000};
            if (c.contains("byz"))
                ts.failure.byzantine = std::set<NodeId>(c.at("byz").begin(), c.at("byz").end());
            else if (ts.failure.adversary.kind != AdversaryKind::None)
                ts.failure.byzantine = default_byzantine(g.node_count(), ts.failure.f,
                                                         ts.inst.source, ts.inst.target);
            ts.horizon = horizon;
            for (uint64_t seed : seeds) {
                ts.seed = seed;
                trials.push_back(ts);
            }
        }
    }

    std::vector<TrialResult> results(trials.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < trials.size(); i = next.fetch_add(1))
            results[i] = run_spec(trials[i]);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::ostringstream csv;
    csv << "graph,n,setting,f,adversary,s,t,start,seed,predicted,delivered_at,safety_ok,"
           "liveness_ok\n";
    int conformance_checked = 0, conformance_failed = 0, safety_failed = 0, excluded = 0;
    for (size_t i = 0; i < trials.size(); ++i) {
        const auto& ts = trials[i];
        const auto& r = results[i];
        std::string when = "never";
        if (ts.inst.target) {
            auto t = r.delivery_time(*ts.inst.target, {ts.inst.source, ts.inst.payload});
            if (t) when = std::to_string(*t);
        } else if (r.liveness_ok) {
            when = "all";
        }
        csv << ts.graph_id << "," << ts.graph.node_count() << "," << ts.setting_name << ","
            << ts.failure.f << "," << ts.adversary_name << "," << ts.inst.source << ","
            << (ts.inst.target ? std::to_string(*ts.inst.target) : "any") << ","
            << ts.inst.start << "," << ts.seed << ","
            << (r.predicted == Prediction::Solvable ? "solvable" : "unsolvable") << "," << when
            << "," << (r.safety_ok ? "1" : "0") << "," << (r.liveness_ok ? "1" : "0") << "\n";

        if (r.assumption_violated) {
            ++excluded;
            continue;
        }
        if (!r.safety_ok) ++safety_failed;
        if (r.predicted == Prediction::Solvable) {
            ++conformance_checked;
            if (!r.liveness_ok) ++conformance_failed;
        }
    }

    if (out_csv.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_csv);
        out << csv.str();
    }
    std::cerr << "trials=" << trials.size() << " conformance_checked=" << conformance_checked
              << " conformance_failed=" << conformance_failed
              << " safety_failed=" << safety_failed
              << " excluded_assumption_violated=" << excluded << "\n";
    return (conformance_failed == 0 && safety_failed == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolving-graph toolkit: journeys, dynamic cuts, class membership, and "
                 "reliable-communication simulation"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "decide class membership of a .teg graph");
    std::string check_file, check_class;
    std::optional<int> q_s, q_t, q_k, q_from;
    bool q_exact = false;
    check->add_option("file", check_file, ".teg graph file")->required();
    check->add_option("class", check_class, "class name, e.g. J_st, TC^R_k, CK*_k")->required();
    check->add_option("--s", q_s, "source node");
    check->add_option("--t", q_t, "target node");
    check->add_option("--k", q_k, "connectivity parameter");
    check->add_option("--from", q_from, "start time");
    check->add_flag("--exact", q_exact, "force the exponential decision path");

    // mincut
    auto* mincut = app.add_subcommand("mincut", "dynamic minimum cut between two nodes");
    std::string mc_file;
    NodeId mc_s = 0, mc_t = 0;
    int mc_from = 0;
    mincut->add_option("file", mc_file, ".teg graph file")->required();
    mincut->add_option("s", mc_s, "source node")->required();
    mincut->add_option("t", mc_t, "target node")->required();
    mincut->add_option("--from", mc_from, "start time")->capture_default_str();

    // simulate
    auto* sim = app.add_subcommand("simulate", "run one reliable-communication trial");
    std::string sim_graph, sim_adversary = "none", sim_log;
    SettingFlags sim_flags;
    std::vector<NodeId> sim_byz;
    uint64_t sim_seed = 0, sim_gen_seed = 0;
    int sim_f = 0, sim_s = 0, sim_payload = 0, sim_start = 0, sim_horizon = 0;
    std::optional<int> sim_t;
    sim->add_option("graph", sim_graph, ".teg file or generator spec")->required();
    sim_flags.attach(sim);
    sim->add_option("--f", sim_f, "declared byzantine bound")->capture_default_str();
    sim->add_option("--adversary", sim_adversary,
                    "none | silent | forge | collude | replay-drop")
        ->capture_default_str();
    sim->add_option("--byz", sim_byz, "byzantine node ids (default: first f non-endpoints)");
    sim->add_option("--s", sim_s, "source node")->capture_default_str();
    sim->add_option("--t", sim_t, "target node (omit for any-to-any)");
    sim->add_option("--payload", sim_payload, "content payload")->capture_default_str();
    sim->add_option("--start", sim_start, "instance start time")->capture_default_str();
    sim->add_option("--seed", sim_seed, "trial seed")->capture_default_str();
    sim->add_option("--gen-seed", sim_gen_seed, "generator seed when graph is a spec")
        ->capture_default_str();
    sim->add_option("--horizon", sim_horizon, "simulation horizon (default: auto)")
        ->capture_default_str();
    sim->add_option("--log", sim_log, "write the event log to this file");

    // generate
    auto* gen = app.add_subcommand("generate", "emit a generated graph as .teg");
    std::string gen_spec, gen_out;
    uint64_t gen_seed = 0;
    gen->add_option("spec", gen_spec, "generator spec, e.g. periodic-er:n=4,period=2,p=0.5")
        ->required();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output file (default: stdout)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "run a batch of trials from a JSON spec");
    std::string exp_spec, exp_out;
    int exp_jobs = 1;
    exp->add_option("spec", exp_spec, "JSON experiment spec")->required();
    exp->add_option("--out", exp_out, "CSV output file (default: stdout)");
    exp->add_option("--jobs", exp_jobs, "worker threads")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check))
            return cmd_check(check_file, check_class, q_s, q_t, q_k, q_from, q_exact);
        if (app.got_subcommand(mincut)) return cmd_mincut(mc_file, mc_s, mc_t, mc_from);
        if (app.got_subcommand(sim)) {
            TrialSpec ts;
            ts.graph = load_graph(sim_graph, sim_gen_seed);
            ts.setting = sim_flags.build();
            ts.inst = RcInstance{sim_s, sim_t, sim_payload, sim_start};
            ts.failure.f = sim_f;
            ts.failure.adversary.kind = parse_adversary(sim_adversary);
            ts.failure.adversary.target =
                ts.failure.adversary.kind == AdversaryKind::ReplayDrop
                    ? Content{sim_s, sim_payload}
                    : Content{sim_s, sim_payload + 1000};
            if (!sim_byz.empty())
                ts.failure.byzantine = std::set<NodeId>(sim_byz.begin(), sim_byz.end());
            else if (ts.failure.adversary.kind != AdversaryKind::None)
                ts.failure.byzantine =
                    default_byzantine(ts.graph.node_count(), sim_f, sim_s, sim_t);
            ts.seed = sim_seed;
            ts.horizon = sim_horizon;
            return cmd_simulate(ts, sim_log);
        }
        if (app.got_subcommand(gen)) return cmd_generate(gen_spec, gen_seed, gen_out);
        if (app.got_subcommand(exp)) return cmd_experiment(exp_spec, exp_out, exp_jobs);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
