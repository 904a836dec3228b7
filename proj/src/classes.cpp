#include "tvg/classes.hpp"

#include <algorithm>
#include <sstream>

namespace tvg {

namespace {

std::string journey_str(const Journey& j) {
    std::ostringstream out;
    for (size_t i = 0; i < j.nodes.size(); ++i) {
        if (i) out << "-";
        out << j.nodes[i];
    }
    out << "@";
    for (size_t i = 0; i < j.times.size(); ++i) {
        if (i) out << ",";
        out << j.times[i];
    }
    return out.str();
}

std::string edges_str(const EdgeSet& edges) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [u, v] : edges) {
        if (!first) out << " ";
        out << u << "-" << v;
        first = false;
    }
    return out.str();
}

void require_periodic(const EvolvingGraph& g, ClassTag tag) {
    if (!g.is_periodic())
        throw RepresentationMismatch("class " + class_tag_name(tag) +
                                     " requires an eventually-periodic lifetime");
}

bool is_recurrent_tag(ClassTag tag) {
    switch (tag) {
        case ClassTag::J_R_st:
        case ClassTag::TC_R:
        case ClassTag::E_R:
        case ClassTag::J_R_stk:
        case ClassTag::TC_R_k:
        case ClassTag::E_R_k:
            return true;
        default:
            return false;
    }
}

// Snapshot slots covering the whole lifetime structure.
std::vector<std::pair<std::string, const EdgeSet*>> all_slots(const EvolvingGraph& g) {
    std::vector<std::pair<std::string, const EdgeSet*>> slots;
    for (size_t i = 0; i < g.prefix_slots().size(); ++i)
        slots.emplace_back((g.is_periodic() ? "prefix[" : "t=") + std::to_string(i) +
                               (g.is_periodic() ? "]" : ""),
                           &g.prefix_slots()[i]);
    for (size_t i = 0; i < g.cycle_slots().size(); ++i)
        slots.emplace_back("cycle[" + std::to_string(i) + "]", &g.cycle_slots()[i]);
    return slots;
}

MembershipVerdict check_all_pairs_journeys(const EvolvingGraph& g, int from) {
    for (NodeId s = 0; s < g.node_count(); ++s)
        for (NodeId t = 0; t < g.node_count(); ++t)
            if (s != t && !journey_exists(g, s, t, from))
                return {false, Method::Polynomial,
                        "no journey " + std::to_string(s) + "->" + std::to_string(t) + " from " +
                            std::to_string(from),
                        std::nullopt};
    return {true, Method::Polynomial, "", std::nullopt};
}

MembershipVerdict check_all_pairs_cut(const EvolvingGraph& g, int from, int k,
                                      const SearchLimits& limits) {
    for (NodeId s = 0; s < g.node_count(); ++s)
        for (NodeId t = 0; t < g.node_count(); ++t) {
            if (s == t) continue;
            CutSize c = dyn_min_cut(g, s, t, from, limits);
            if (!c.at_least(k))
                return {false, Method::ExactExponential,
                        "pair " + std::to_string(s) + "->" + std::to_string(t) + " from " +
                            std::to_string(from) + " has cut " + std::to_string(c.value),
                        std::nullopt};
        }
    return {true, Method::ExactExponential, "", std::nullopt};
}

int require_k(const ClassQuery& q) {
    if (!q.k) throw InvalidSpec("class " + class_tag_name(q.tag) + " requires k");
    return *q.k;
}

NodeId require_s(const ClassQuery& q) {
    if (!q.s) throw InvalidSpec("class " + class_tag_name(q.tag) + " requires s");
    return *q.s;
}

NodeId require_t(const ClassQuery& q) {
    if (!q.t) throw InvalidSpec("class " + class_tag_name(q.tag) + " requires t");
    return *q.t;
}

}  // namespace

std::vector<int> representative_offsets(const EvolvingGraph& g) {
    std::vector<int> offsets;
    int hi = g.is_periodic() ? g.prefix_len() + g.period() : g.last_time() + 1;
    for (int j = 0; j < hi; ++j) offsets.push_back(j);
    if (offsets.empty()) offsets.push_back(0);
    return offsets;
}

EdgeSet recurrent_edge_set(const EvolvingGraph& g) {
    if (!g.is_periodic())
        throw RepresentationMismatch("recurrent edge set requires an eventually-periodic graph");
    EdgeSet rec;
    for (const auto& slot : g.cycle_slots()) rec.insert(slot.begin(), slot.end());
    return rec;
}

MembershipVerdict is_member(const EvolvingGraph& g, const ClassQuery& q) {
    if (is_recurrent_tag(q.tag)) require_periodic(g, q.tag);
    int from = q.from.value_or(0);

    switch (q.tag) {
        case ClassTag::J_st: {
            auto j = find_journey(g, require_s(q), require_t(q), from);
            if (j) return {true, Method::Polynomial, journey_str(*j), j};
            return {false, Method::Polynomial, "no journey", std::nullopt};
        }
        case ClassTag::TC:
            return check_all_pairs_journeys(g, from);
        case ClassTag::J_R_st: {
            for (int j : representative_offsets(g))
                if (!journey_exists(g, require_s(q), require_t(q), j))
                    return {false, Method::Polynomial, "no journey from offset " + std::to_string(j),
                            std::nullopt};
            return {true, Method::Polynomial, "", std::nullopt};
        }
        case ClassTag::TC_R: {
            for (int j : representative_offsets(g)) {
                auto v = check_all_pairs_journeys(g, j);
                if (!v.member) return v;
            }
            return {true, Method::Polynomial, "", std::nullopt};
        }
        case ClassTag::C_star:
        case ClassTag::CK_star_k: {
            int k = q.tag == ClassTag::C_star ? 1 : require_k(q);
            for (const auto& [label, edges] : all_slots(g)) {
                int conn = node_connectivity(g.node_count(), *edges);
                if (conn < k)
                    return {false, Method::Polynomial,
                            "snapshot " + label + " has connectivity " + std::to_string(conn),
                            std::nullopt};
            }
            return {true, Method::Polynomial, "", std::nullopt};
        }
        case ClassTag::E_R:
        case ClassTag::E_R_k: {
            EdgeSet rec = recurrent_edge_set(g);
            EdgeSet all = g.underlying_edges();
            EdgeSet transient;
            std::set_difference(all.begin(), all.end(), rec.begin(), rec.end(),
                                std::inserter(transient, transient.begin()));
            if (!transient.empty())
                return {false, Method::Polynomial,
                        "transient edges: " + edges_str(transient), std::nullopt};
            if (q.tag == ClassTag::E_R_k) {
                int k = require_k(q);
                int conn = node_connectivity(g.node_count(), rec);
                if (conn < k)
                    return {false, Method::Polynomial,
                            "recurrent edge graph connectivity " + std::to_string(conn),
                            std::nullopt};
            }
            return {true, Method::Polynomial, "recurrent edges: " + edges_str(rec), std::nullopt};
        }
        case ClassTag::J_stk: {
            CutSize c = dyn_min_cut(g, require_s(q), require_t(q), from, q.limits);
            std::string w = c.unbounded ? "cut unbounded" : "cut " + std::to_string(c.value);
            return {c.at_least(require_k(q)), Method::ExactExponential, w, std::nullopt};
        }
        case ClassTag::J_R_stk: {
            for (int j : representative_offsets(g)) {
                CutSize c = dyn_min_cut(g, require_s(q), require_t(q), j, q.limits);
                if (!c.at_least(require_k(q)))
                    return {false, Method::ExactExponential,
                            "offset " + std::to_string(j) + " has cut " + std::to_string(c.value),
                            std::nullopt};
            }
            return {true, Method::ExactExponential, "", std::nullopt};
        }
        case ClassTag::TC_k:
            return check_all_pairs_cut(g, from, require_k(q), q.limits);
        case ClassTag::TC_R_k: {
            int k = require_k(q);
            if (q.exact) {
                for (int j : representative_offsets(g)) {
                    auto v = check_all_pairs_cut(g, j, k, q.limits);
                    if (!v.member) return v;
                }
                return {true, Method::ExactExponential, "", std::nullopt};
            }
            // Polynomial route: TC^R_k holds iff the recurrent edge set
            // contains a k-connected spanning structure.
            EdgeSet rec = recurrent_edge_set(g);
            int conn = node_connectivity(g.node_count(), rec);
            if (conn >= k)
                return {true, Method::Polynomial,
                        "recurrent edge graph is " + std::to_string(conn) + "-connected",
                        std::nullopt};
            return {false, Method::Polynomial,
                    "recurrent edge graph connectivity " + std::to_string(conn), std::nullopt};
        }
    }
    throw InvalidSpec("unknown class tag");
}

ClassTag parse_class_tag(const std::string& name) {
    auto canon = [](std::string s) {
        std::string out;
        for (char c : s)
            if (c != '^' && c != '_' && c != '-') out.push_back(c);
        for (auto& c : out) c = static_cast<char>(tolower(c));
        return out;
    };
    std::string c = canon(name);
    if (c == "jst") return ClassTag::J_st;
    if (c == "tc") return ClassTag::TC;
    if (c == "jrst") return ClassTag::J_R_st;
    if (c == "tcr") return ClassTag::TC_R;
    if (c == "c*" || c == "cstar") return ClassTag::C_star;
    if (c == "er") return ClassTag::E_R;
    if (c == "jstk") return ClassTag::J_stk;
    if (c == "jrstk") return ClassTag::J_R_stk;
    if (c == "tck") return ClassTag::TC_k;
    if (c == "tcrk") return ClassTag::TC_R_k;
    if (c == "erk") return ClassTag::E_R_k;
    if (c == "ck*k" || c == "ckstark") return ClassTag::CK_star_k;
    throw InvalidSpec("unknown class name: " + name);
}

std::string class_tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::J_st: return "J_st";
        case ClassTag::TC: return "TC";
        case ClassTag::J_R_st: return "J^R_st";
        case ClassTag::TC_R: return "TC^R";
        case ClassTag::C_star: return "C*";
        case ClassTag::E_R: return "E^R";
        case ClassTag::J_stk: return "J_stk";
        case ClassTag::J_R_stk: return "J^R_stk";
        case ClassTag::TC_k: return "TC_k";
        case ClassTag::TC_R_k: return "TC^R_k";
        case ClassTag::E_R_k: return "E^R_k";
        case ClassTag::CK_star_k: return "CK*_k";
    }
    return "?";
}

std::vector<TheoremCheck> check_inclusion_theorems(const EvolvingGraph& g, int k,
                                                   const SearchLimits& limits) {
    std::vector<TheoremCheck> report;
    int n = g.node_count();

    bool snap_k_connected = false;
    {
        snap_k_connected = true;
        for (const auto& [label, edges] : all_slots(g)) {
            (void)label;
            if (node_connectivity(n, *edges) < k) {
                snap_k_connected = false;
                break;
            }
        }
    }
    bool recurrent_core_k = false;
    if (g.is_periodic())
        recurrent_core_k = node_connectivity(n, recurrent_edge_set(g)) >= k;

    // k-connected recurrent core  =>  k-cut between all pairs from every
    // start offset.
    {
        TheoremCheck c{"recurrent-core-implies-recurrent-k-connectivity", false, false, ""};
        if (g.is_periodic() && recurrent_core_k) {
            c.applicable = true;
            c.pass = true;
            for (int j : representative_offsets(g)) {
                for (NodeId s = 0; s < n && c.pass; ++s)
                    for (NodeId t = 0; t < n && c.pass; ++t) {
                        if (s == t) continue;
                        CutSize cut = dyn_min_cut(g, s, t, j, limits);
                        if (!cut.at_least(k)) {
                            c.pass = false;
                            c.detail = "counterexample: pair " + std::to_string(s) + "->" +
                                       std::to_string(t) + " offset " + std::to_string(j);
                        }
                    }
                if (!c.pass) break;
            }
        }
        report.push_back(c);
    }

    // Snapshot k-connectivity  =>  k-cut inside every window of n-k instants.
    {
        TheoremCheck c{"snapshot-k-connectivity-implies-window-k-cut", false, false, ""};
        if (snap_k_connected && n - k >= 1) {
            c.applicable = true;
            c.pass = true;
            std::vector<int> starts;
            if (g.is_periodic()) {
                starts = representative_offsets(g);
            } else {
                for (int j = 0; j + (n - k) <= g.last_time(); ++j) starts.push_back(j);
            }
            for (int j : starts) {
                EvolvingGraph window = temporal_subgraph(g, TimeInterval::closed(j, j + n - k));
                for (NodeId s = 0; s < n && c.pass; ++s)
                    for (NodeId t = 0; t < n && c.pass; ++t) {
                        if (s == t) continue;
                        CutSize cut = dyn_min_cut(window, s, t, j, limits);
                        if (!cut.at_least(k)) {
                            c.pass = false;
                            c.detail = "counterexample: pair " + std::to_string(s) + "->" +
                                       std::to_string(t) + " window [" + std::to_string(j) + "," +
                                       std::to_string(j + n - k) + "]";
                        }
                    }
                if (!c.pass) break;
            }
        }
        report.push_back(c);
    }

    // Snapshot k-connectivity with infinite lifetime  =>  the recurrent
    // edge set itself is k-connected.
    {
        TheoremCheck c{"snapshot-k-connectivity-implies-k-connected-recurrent-core", false, false,
                       ""};
        if (g.is_periodic() && snap_k_connected) {
            c.applicable = true;
            int conn = node_connectivity(n, recurrent_edge_set(g));
            c.pass = conn >= k;
            if (!c.pass) c.detail = "recurrent edge graph connectivity " + std::to_string(conn);
        }
        report.push_back(c);
    }

    bool any = false;
    for (const auto& c : report) any = any || c.applicable;
    if (!any)
        throw HypothesisNotSatisfied("graph satisfies no theorem hypothesis for k=" +
                                     std::to_string(k));
    return report;
}

}  // namespace tvg
