#include "tvg/sim.hpp"

#include <algorithm>
#include <sstream>

namespace tvg {

namespace {

uint64_t fnv1a(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t hash_int(uint64_t h, int64_t v) { return fnv1a(&v, sizeof(v), h); }

uint64_t hash_multicast(const Multicast& m) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& t : m.al) {
        h = hash_int(h, t.source);
        h = hash_int(h, t.payload);
        for (NodeId x : t.traversed) h = hash_int(h, x);
        h = hash_int(h, -1);
    }
    h = hash_int(h, -2);
    for (const auto& t : m.am) {
        h = hash_int(h, t.source);
        h = hash_int(h, t.payload);
        h = hash_int(h, t.token.minted_by);
        h = hash_int(h, -3);
    }
    return h;
}

uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
}

}  // namespace

FllSchedule FllSchedule::deterministic(int d) {
    if (d < 0) throw InvalidParam("deterministic drop count must be >= 0");
    return {Kind::Deterministic, d, 0.0};
}

FllSchedule FllSchedule::bernoulli(double p) {
    if (p < 0.0 || p >= 1.0) throw InvalidParam("bernoulli drop probability must be in [0,1)");
    return {Kind::Bernoulli, 0, p};
}

ScSchedule ScSchedule::blocks(int d) {
    if (d < 0) throw InvalidParam("block length must be >= 0 and finite");
    return {Kind::Blocks, d};
}

ScSchedule ScSchedule::seeded(int d) {
    if (d < 0) throw InvalidParam("block length must be >= 0 and finite");
    return {Kind::Seeded, d};
}

Variant Setting::default_variant() const {
    if (auth == Auth::AM) return Variant::Alg3Am;
    return asynchronous() ? Variant::Alg2 : Variant::Alg1;
}

std::string EventLog::serialize() const {
    static const char* names[] = {"COMPUTE", "SEND", "RECEIVE", "DELIVER", "DROP"};
    std::ostringstream out;
    for (const auto& r : records)
        out << r.step << " " << names[static_cast<int>(r.phase)] << " " << r.actor << " "
            << r.detail << "\n";
    return out.str();
}

std::optional<int> TrialResult::delivery_time(NodeId process, const Content& c) const {
    auto it = delivered_at.find({process, c.source, c.payload});
    if (it == delivered_at.end()) return std::nullopt;
    return it->second;
}

Prediction predict_solvability(const EvolvingGraph& g, const Setting& setting, int f,
                               const RcInstance& inst, const SearchLimits& limits) {
    int threshold = setting.auth == Setting::Auth::AM ? f : 2 * f;

    auto pair_ok = [&](NodeId s, NodeId t, int from) {
        return dyn_min_cut(g, s, t, from, limits).exceeds(threshold);
    };
    auto all_from = [&](int from) {
        if (inst.target) return pair_ok(inst.source, *inst.target, from);
        for (NodeId s = 0; s < g.node_count(); ++s)
            for (NodeId t = 0; t < g.node_count(); ++t)
                if (s != t && !pair_ok(s, t, from)) return false;
        return true;
    };

    if (!setting.asynchronous()) {
        // <AL/AM, PL, NC>: condition at the start time only.
        return all_from(inst.start) ? Prediction::Solvable : Prediction::Unsolvable;
    }
    // Fair loss or significant computation: the recurrent classes, which
    // require an infinite lifetime.
    if (!g.is_periodic()) return Prediction::Unsolvable;
    for (int j : representative_offsets(g))
        if (!all_from(j)) return Prediction::Unsolvable;
    return Prediction::Solvable;
}

int auto_horizon(const EvolvingGraph& g, const Setting& setting, const RcInstance& inst) {
    int base = effective_horizon(g, inst.start);
    if (!setting.asynchronous()) return std::max(base, inst.start);
    int d_link = setting.link == Setting::Link::FLL
                     ? (setting.fll.kind == FllSchedule::Kind::Deterministic
                            ? setting.fll.d
                            : static_cast<int>(4.0 / (1.0 - setting.fll.p)))
                     : 0;
    int d_comp = setting.compute == Setting::Compute::SC ? setting.sc.d : 0;
    int period = g.is_periodic() ? g.period() : 1;
    int n = g.node_count();
    // Worst case per hop: wait out compute blocks, then D+1 link presences,
    // each up to one period apart; doubled for omega churn restarting the
    // per-message drop counters.
    int slack = (n - 1) * (d_link + 1) * (d_comp + 1) * std::max(1, period) * 2;
    return std::max(base, inst.start) + slack;
}

namespace {

struct ScOracle {
    const Setting& setting;
    uint64_t seed;

    bool blocked(NodeId p, int step) const {
        if (setting.compute != Setting::Compute::SC || setting.sc.d == 0) return false;
        int d = setting.sc.d;
        int w = d + 1;
        if (setting.sc.kind == ScSchedule::Kind::Blocks)
            return (step + p) % w != d;  // one free step per window, staggered
        int window = step / w;
        int free = static_cast<int>(mix(seed, mix(0x5cUL, mix(static_cast<uint64_t>(p),
                                                              static_cast<uint64_t>(window)))) %
                                    static_cast<uint64_t>(w));
        return step % w != free;
    }
};

struct FllOracle {
    const Setting& setting;
    uint64_t seed;
    std::map<std::tuple<NodeId, NodeId, uint64_t>, int>& attempts;

    // True if this transmission attempt is dropped.  Returns the attempt
    // ordinal via out parameter for logging.
    bool dropped(NodeId sender, NodeId receiver, uint64_t msg_hash, int step, int& attempt) {
        attempt = 1;
        if (setting.link != Setting::Link::FLL) return false;
        if (setting.fll.kind == FllSchedule::Kind::Deterministic) {
            int& count = attempts[{sender, receiver, msg_hash}];
            ++count;
            attempt = count;
            return count <= setting.fll.d;
        }
        uint64_t h = mix(seed, mix(static_cast<uint64_t>(step),
                                   mix(static_cast<uint64_t>(sender),
                                       mix(static_cast<uint64_t>(receiver), msg_hash))));
        double u = static_cast<double>(h >> 11) * 0x1.0p-53;
        return u < setting.fll.p;
    }
};

}  // namespace

TrialResult run_trial(const EvolvingGraph& g, const Setting& setting, const FailureSpec& failure,
                      const RcInstance& inst, int horizon, uint64_t seed,
                      std::optional<Variant> variant_override) {
    int n = g.node_count();
    if (horizon < inst.start) throw ConfigError("horizon smaller than instance start");
    if (inst.source < 0 || inst.source >= n) throw ConfigError("source id out of range");
    if (inst.target && (*inst.target < 0 || *inst.target >= n))
        throw ConfigError("target id out of range");
    if (failure.byzantine.count(inst.source))
        throw ConfigError("liveness instance requires a correct source");
    if (inst.target && failure.byzantine.count(*inst.target))
        throw ConfigError("liveness instance requires a correct target");

    Variant variant = variant_override.value_or(setting.default_variant());

    TrialResult result;
    result.horizon = horizon;
    result.assumption_violated = static_cast<int>(failure.byzantine.size()) > failure.f;

    std::vector<std::optional<ProcessState>> procs(static_cast<size_t>(n));
    std::map<NodeId, ByzantineStore> byz_stores;
    for (NodeId p = 0; p < n; ++p) {
        if (failure.byzantine.count(p))
            byz_stores[p] = ByzantineStore{};
        else
            procs[static_cast<size_t>(p)].emplace(p, variant, failure.f);
    }

    ScOracle sc{setting, mix(seed, 0x5c11)};
    std::map<std::tuple<NodeId, NodeId, uint64_t>, int> drop_attempts;
    FllOracle fll{setting, mix(seed, 0xf11), drop_attempts};

    // Messages received while SC-blocked, applied at the next unblocked step.
    std::vector<std::vector<std::pair<NodeId, Multicast>>> inbox(static_cast<size_t>(n));
    bool send_pending = true;

    auto log = [&](int step, EventRecord::Phase phase, NodeId actor, std::string detail) {
        result.log.records.push_back(EventRecord{step, phase, actor, std::move(detail)});
    };
    auto record_deliveries = [&](int step, const std::vector<DeliverEvent>& events) {
        for (const auto& e : events) {
            result.delivered_at[{e.process, e.content.source, e.content.payload}] = step;
            log(step, EventRecord::Phase::Deliver, e.process,
                "src=" + std::to_string(e.content.source) +
                    " payload=" + std::to_string(e.content.payload));
        }
    };

    for (int step = 0; step <= horizon; ++step) {
        std::vector<std::pair<NodeId, Multicast>> outgoing;

        // COMPUTE
        for (NodeId p = 0; p < n; ++p) {
            auto& st = procs[static_cast<size_t>(p)];
            if (!st) continue;
            if (sc.blocked(p, step)) continue;
            auto& pending = inbox[static_cast<size_t>(p)];
            for (const auto& [sender, msg] : pending) {
                st->on_receive(sender, msg);
                log(step, EventRecord::Phase::Receive, p,
                    "from=" + std::to_string(sender) +
                        " msg=" + std::to_string(hash_multicast(msg)));
                record_deliveries(step, st->check_delivery());
            }
            pending.clear();
            if (p == inst.source && step >= inst.start && send_pending) {
                send_pending = false;
                auto self = st->rc_send(inst.payload);
                log(step, EventRecord::Phase::Compute, p,
                    "rc_send payload=" + std::to_string(inst.payload));
                if (self) record_deliveries(step, {*self});
            }
            auto msg = st->compute_phase(step, g.neighbors_at(p, step));
            if (msg) outgoing.emplace_back(p, std::move(*msg));
        }
        for (auto& [b, store] : byz_stores) {
            ByzantineView view{b,
                               step,
                               n,
                               g.neighbors_at(b, step),
                               &failure.byzantine,
                               &store,
                               setting.auth == Setting::Auth::AM};
            Multicast msg = byzantine_act(failure.adversary, view);
            if (!msg.empty()) outgoing.emplace_back(b, std::move(msg));
        }

        // SEND: multicasts map onto the links present at this step.
        std::vector<std::tuple<NodeId, NodeId, Multicast>> arriving;
        for (const auto& [sender, msg] : outgoing) {
            uint64_t h = hash_multicast(msg);
            for (NodeId v : g.neighbors_at(sender, step)) {
                int attempt = 0;
                if (fll.dropped(sender, v, h, step, attempt)) {
                    log(step, EventRecord::Phase::Drop, sender,
                        "to=" + std::to_string(v) + " msg=" + std::to_string(h) +
                            " attempt=" + std::to_string(attempt));
                    continue;
                }
                log(step, EventRecord::Phase::Send, sender,
                    "to=" + std::to_string(v) + " msg=" + std::to_string(h) +
                        " size=" + std::to_string(msg.al.size() + msg.am.size()));
                arriving.emplace_back(v, sender, msg);
            }
        }

        // RECEIVE
        std::stable_sort(arriving.begin(), arriving.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<0>(a), std::get<1>(a)) <
                   std::tie(std::get<0>(b), std::get<1>(b));
        });
        for (const auto& [receiver, sender, msg] : arriving) {
            auto& st = procs[static_cast<size_t>(receiver)];
            if (!st) {
                byz_stores[receiver].absorb(msg);
                continue;
            }
            if (sc.blocked(receiver, step)) {
                inbox[static_cast<size_t>(receiver)].emplace_back(sender, msg);
                continue;
            }
            st->on_receive(sender, msg);
            log(step, EventRecord::Phase::Receive, receiver,
                "from=" + std::to_string(sender) + " msg=" + std::to_string(hash_multicast(msg)));
            record_deliveries(step, st->check_delivery());
        }
    }

    auto [safety, liveness] = evaluate(result.log, failure, inst, n, horizon);
    result.safety_ok = safety;
    result.liveness_ok = liveness;
    result.predicted = predict_solvability(g, setting, failure.f, inst);
    return result;
}

std::pair<bool, bool> evaluate(const EventLog& log, const FailureSpec& failure,
                               const RcInstance& inst, int n, int horizon) {
    std::set<std::pair<NodeId, int>> sends;       // (source, payload) rc_send events
    std::set<std::tuple<NodeId, NodeId, int>> delivers;  // (process, source, payload)

    for (const auto& r : log.records) {
        if (r.phase == EventRecord::Phase::Compute &&
            r.detail.rfind("rc_send payload=", 0) == 0) {
            sends.insert({r.actor, std::stoi(r.detail.substr(16))});
        } else if (r.phase == EventRecord::Phase::Deliver) {
            std::istringstream in(r.detail);
            std::string a, b;
            in >> a >> b;
            NodeId src = std::stoi(a.substr(4));
            int payload = std::stoi(b.substr(8));
            delivers.insert({r.actor, src, payload});
        }
    }

    bool safety = true;
    for (const auto& [proc, src, payload] : delivers) {
        if (failure.byzantine.count(proc)) continue;  // only correct deliveries count
        if (failure.byzantine.count(src)) continue;   // safety protects correct sources
        if (!sends.count({src, payload})) safety = false;
    }

    (void)horizon;
    bool liveness;
    if (inst.target) {
        liveness = delivers.count({*inst.target, inst.source, inst.payload}) > 0;
    } else {
        liveness = true;
        for (NodeId p = 0; p < n; ++p) {
            if (failure.byzantine.count(p)) continue;
            if (!delivers.count({p, inst.source, inst.payload})) liveness = false;
        }
    }
    return {safety, liveness};
}

}  // namespace tvg
