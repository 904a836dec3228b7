#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tvg/classes.hpp"
#include "tvg/graph.hpp"
#include "tvg/protocol.hpp"

namespace tvg {

// Fair-loss link schedule.  Deterministic(D) drops the first D transmission
// attempts of each (directed link, distinct message) pair; Bernoulli(p)
// drops each attempt independently with seeded probability p (p < 1 keeps
// fair loss).
struct FllSchedule {
    enum class Kind { Deterministic, Bernoulli };
    Kind kind = Kind::Deterministic;
    int d = 0;
    double p = 0.0;

    static FllSchedule deterministic(int d);
    static FllSchedule bernoulli(double p);
};

// Significant-computation schedule.  Blocks(D) blocks each process for D
// consecutive steps out of every D+1 (phase-shifted per process); Seeded(D)
// picks one unblocked step per window of D+1 pseudo-randomly, so blocked
// runs never exceed 2D steps.
struct ScSchedule {
    enum class Kind { Blocks, Seeded };
    Kind kind = Kind::Blocks;
    int d = 0;

    static ScSchedule blocks(int d);
    static ScSchedule seeded(int d);
};

struct Setting {
    enum class Link { PL, FLL };
    enum class Compute { NC, SC };
    enum class Auth { AL, AM };
    Link link = Link::PL;
    FllSchedule fll;
    Compute compute = Compute::NC;
    ScSchedule sc;
    Auth auth = Auth::AL;

    // The algorithm variant the theory pairs with this setting: Alg1 for
    // <AL,PL,NC>, Alg2 under fair loss or significant computation, Alg3
    // for authenticated messages.
    Variant default_variant() const;
    bool asynchronous() const { return link == Link::FLL || compute == Compute::SC; }
};

struct FailureSpec {
    int f = 0;                    // declared bound (protocol parameter)
    std::set<NodeId> byzantine;   // actual faulty set
    Adversary adversary;
};

struct RcInstance {
    NodeId source = 0;
    std::optional<NodeId> target;  // nullopt = any-to-any
    int payload = 0;
    int start = 0;
};

struct EventRecord {
    int step = 0;
    enum class Phase { Compute, Send, Receive, Deliver, Drop } phase = Phase::Compute;
    NodeId actor = -1;
    std::string detail;
};

struct EventLog {
    std::vector<EventRecord> records;
    std::string serialize() const;
};

enum class Prediction { Solvable, Unsolvable };

struct TrialResult {
    // (process, source, payload) -> delivery step
    std::map<std::tuple<NodeId, NodeId, int>, int> delivered_at;
    bool safety_ok = true;
    bool liveness_ok = false;
    Prediction predicted = Prediction::Unsolvable;
    int horizon = 0;
    bool assumption_violated = false;  // |byzantine| > f
    EventLog log;

    std::optional<int> delivery_time(NodeId process, const Content& c) const;
};

// Implements the Table-1 solvability rows: perfect links and negligible
// computation gate on the cut from the start time; fair loss or significant
// computation gate on every start offset; the threshold is 2f under AL and
// f under AM.  Any-to-any instances quantify over all ordered pairs.
Prediction predict_solvability(const EvolvingGraph& g, const Setting& setting, int f,
                               const RcInstance& inst, const SearchLimits& limits = {});

// Horizon sufficient for the conformance assertions; prints nothing, but the
// CLI reports the formula inputs.
int auto_horizon(const EvolvingGraph& g, const Setting& setting, const RcInstance& inst);

// Deterministic discrete-time execution: per step, compute -> send ->
// receive, one link traversal per message per step.
TrialResult run_trial(const EvolvingGraph& g, const Setting& setting, const FailureSpec& failure,
                      const RcInstance& inst, int horizon, uint64_t seed,
                      std::optional<Variant> variant_override = std::nullopt);

// Recomputes (safety_ok, liveness_ok) from the event log alone.
std::pair<bool, bool> evaluate(const EventLog& log, const FailureSpec& failure,
                               const RcInstance& inst, int n, int horizon);

}  // namespace tvg
