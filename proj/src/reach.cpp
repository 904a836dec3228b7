#include "tvg/reach.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace tvg {

int effective_horizon(const EvolvingGraph& g, int from) {
    if (!g.is_periodic()) return g.last_time();
    return std::max(from, g.prefix_len()) + g.node_count() * g.period();
}

std::vector<std::optional<int>> earliest_arrival(const EvolvingGraph& g, NodeId s, int from,
                                                 int horizon) {
    std::vector<std::optional<int>> arrival(static_cast<size_t>(g.node_count()));
    arrival[static_cast<size_t>(s)] = from - 1;
    for (int t = std::max(from, 0); t <= horizon; ++t) {
        std::vector<std::pair<NodeId, int>> fresh;
        for (const auto& [u, v] : g.snapshot_or_empty(t)) {
            auto relay = [&](NodeId a, NodeId b) {
                // A node reached at time t cannot relay within the same
                // instant: one edge per time step.
                if (arrival[static_cast<size_t>(a)] && *arrival[static_cast<size_t>(a)] < t &&
                    !arrival[static_cast<size_t>(b)])
                    fresh.emplace_back(b, t);
            };
            relay(u, v);
            relay(v, u);
        }
        for (const auto& [v, time] : fresh)
            if (!arrival[static_cast<size_t>(v)]) arrival[static_cast<size_t>(v)] = time;
    }
    return arrival;
}

bool journey_exists(const EvolvingGraph& g, NodeId s, NodeId t, int from) {
    if (s == t) return true;
    auto arrival = earliest_arrival(g, s, from, effective_horizon(g, from));
    return arrival[static_cast<size_t>(t)].has_value();
}

std::optional<Journey> find_journey(const EvolvingGraph& g, NodeId s, NodeId t, int from) {
    if (s == t) return Journey{{s}, {}};
    int horizon = effective_horizon(g, from);
    int n = g.node_count();
    std::vector<std::optional<int>> arrival(static_cast<size_t>(n));
    std::vector<NodeId> pred(static_cast<size_t>(n), -1);
    arrival[static_cast<size_t>(s)] = from - 1;
    for (int time = std::max(from, 0); time <= horizon; ++time) {
        std::vector<std::tuple<NodeId, NodeId, int>> fresh;
        for (const auto& [u, v] : g.snapshot_or_empty(time)) {
            auto relay = [&](NodeId a, NodeId b) {
                if (arrival[static_cast<size_t>(a)] && *arrival[static_cast<size_t>(a)] < time &&
                    !arrival[static_cast<size_t>(b)])
                    fresh.emplace_back(b, a, time);
            };
            relay(u, v);
            relay(v, u);
        }
        for (const auto& [v, p, tm] : fresh) {
            if (!arrival[static_cast<size_t>(v)]) {
                arrival[static_cast<size_t>(v)] = tm;
                pred[static_cast<size_t>(v)] = p;
            }
        }
    }
    if (!arrival[static_cast<size_t>(t)]) return std::nullopt;
    Journey j;
    for (NodeId v = t; v != s; v = pred[static_cast<size_t>(v)]) {
        j.nodes.push_back(v);
        j.times.push_back(*arrival[static_cast<size_t>(v)]);
    }
    j.nodes.push_back(s);
    std::reverse(j.nodes.begin(), j.nodes.end());
    std::reverse(j.times.begin(), j.times.end());
    return j;
}

namespace {

// Keeps only inclusion-minimal sets, deduplicated.
NodeSetFamily minimal_antichain(NodeSetFamily family) {
    std::sort(family.begin(), family.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    NodeSetFamily out;
    for (const auto& s : family) {
        bool dominated = false;
        for (const auto& kept : out) {
            if (std::includes(s.begin(), s.end(), kept.begin(), kept.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SigmaSearch {
    const EvolvingGraph& g;
    NodeId target;
    int horizon;
    NodeSetFamily found;
    std::vector<bool> on_path;
    std::vector<NodeId> path;

    // Earliest usable time > cur for edge {u,v}; nullopt if never.
    std::optional<int> earliest_edge_time(NodeId u, NodeId v, int cur) const {
        Edge e = u < v ? Edge{u, v} : Edge{v, u};
        for (int t = cur + 1; t <= horizon; ++t)
            if (g.snapshot_or_empty(t).count(e)) return t;
        return std::nullopt;
    }

    bool dominated_by_found(const std::set<NodeId>& intermediates) const {
        for (const auto& s : found)
            if (s.size() < intermediates.size() &&
                std::includes(intermediates.begin(), intermediates.end(), s.begin(), s.end()))
                return true;
        return false;
    }

    void dfs(NodeId cur, int cur_time) {
        if (cur == target) {
            std::set<NodeId> inter(path.begin() + 1, path.end() - 1);
            found.push_back(std::move(inter));
            return;
        }
        if (path.size() > 2) {
            // Any completion of a path already strictly dominated by a found
            // set can never be inclusion-minimal.
            std::set<NodeId> inter(path.begin() + 1, path.end());
            if (dominated_by_found(inter)) return;
        }
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (on_path[static_cast<size_t>(v)]) continue;
            // Taking the earliest available time per hop is lossless for
            // node-sequence feasibility: earlier hops only loosen later ones.
            auto t = earliest_edge_time(cur, v, cur_time);
            if (!t) continue;
            on_path[static_cast<size_t>(v)] = true;
            path.push_back(v);
            dfs(v, *t);
            path.pop_back();
            on_path[static_cast<size_t>(v)] = false;
        }
    }
};

}  // namespace

NodeSetFamily enumerate_sigma(const EvolvingGraph& g, NodeId s, NodeId t, int from,
                              const SearchLimits& limits) {
    if (g.node_count() > limits.sigma_max_nodes)
        throw LimitExceeded("sigma enumeration limited to n <= " +
                            std::to_string(limits.sigma_max_nodes));
    SigmaSearch search{g, t, effective_horizon(g, from), {},
                       std::vector<bool>(static_cast<size_t>(g.node_count()), false), {}};
    search.on_path[static_cast<size_t>(s)] = true;
    search.path.push_back(s);
    search.dfs(s, from - 1);
    return minimal_antichain(std::move(search.found));
}

namespace {

bool hits_all(const NodeSetFamily& family, const std::set<NodeId>& h) {
    for (const auto& s : family) {
        bool hit = false;
        for (NodeId x : h)
            if (s.count(x)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// Branch and bound on elements of the smallest unhit set.
int min_hitting_size(const NodeSetFamily& family, std::set<NodeId>& current, int best) {
    if (static_cast<int>(current.size()) >= best) return best;
    const std::set<NodeId>* unhit = nullptr;
    for (const auto& s : family) {
        bool hit = false;
        for (NodeId x : current)
            if (s.count(x)) {
                hit = true;
                break;
            }
        if (!hit && (!unhit || s.size() < unhit->size())) unhit = &s;
    }
    if (!unhit) return static_cast<int>(current.size());
    for (NodeId x : *unhit) {
        current.insert(x);
        best = min_hitting_size(family, current, best);
        current.erase(x);
    }
    return best;
}

}  // namespace

HittingSetResult min_hitting_set(const NodeSetFamily& family) {
    if (family.empty()) return {CutSize::of(0), {}};
    for (const auto& s : family)
        if (s.empty()) return {CutSize::inf(), {}};

    std::set<NodeId> scratch;
    std::set<NodeId> universe;
    for (const auto& s : family) universe.insert(s.begin(), s.end());
    int m = min_hitting_size(family, scratch, static_cast<int>(universe.size()));

    // Second pass: first size-m subset in lexicographic order that hits all.
    std::vector<NodeId> elems(universe.begin(), universe.end());
    std::vector<int> idx(static_cast<size_t>(m));
    std::set<NodeId> witness;
    std::function<bool(int, int)> pick = [&](int pos, int start) {
        if (pos == m) {
            std::set<NodeId> h;
            for (int i : idx) h.insert(elems[static_cast<size_t>(i)]);
            if (hits_all(family, h)) {
                witness = std::move(h);
                return true;
            }
            return false;
        }
        for (int i = start; i < static_cast<int>(elems.size()); ++i) {
            idx[static_cast<size_t>(pos)] = i;
            if (pick(pos + 1, i + 1)) return true;
        }
        return false;
    };
    pick(0, 0);
    return {CutSize::of(m), witness};
}

CutSize dyn_min_cut(const EvolvingGraph& g, NodeId s, NodeId t, int from,
                    const SearchLimits& limits) {
    return min_hitting_set(enumerate_sigma(g, s, t, from, limits)).size;
}

CutSize dyn_min_cut_removal(const EvolvingGraph& g, NodeId s, NodeId t, int from,
                            const SearchLimits& limits) {
    int n = g.node_count();
    std::vector<NodeId> others;
    for (NodeId v = 0; v < n; ++v)
        if (v != s && v != t) others.push_back(v);

    if (!journey_exists(g, s, t, from)) return CutSize::of(0);

    // A direct-edge journey cannot be cut by removing other nodes.
    {
        Edge direct = make_edge(s, t);
        int horizon = effective_horizon(g, from);
        for (int time = std::max(from, 0); time <= horizon; ++time)
            if (g.snapshot_or_empty(time).count(direct)) return CutSize::inf();
    }

    int max_size = std::min(static_cast<int>(others.size()), limits.removal_max_size);
    for (int size = 1; size <= static_cast<int>(others.size()); ++size) {
        if (size > max_size)
            throw LimitExceeded("removal oracle limited to subsets of size " +
                                std::to_string(limits.removal_max_size));
        std::vector<int> idx(static_cast<size_t>(size));
        bool found = false;
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (found) return;
            if (pos == size) {
                std::set<NodeId> keep;
                for (NodeId v = 0; v < n; ++v) keep.insert(v);
                for (int i : idx) keep.erase(others[static_cast<size_t>(i)]);
                if (!journey_exists(spatial_subgraph(g, keep), s, t, from)) found = true;
                return;
            }
            for (int i = start; i < static_cast<int>(others.size()); ++i) {
                idx[static_cast<size_t>(pos)] = i;
                rec(pos + 1, i + 1);
                if (found) return;
            }
        };
        rec(0, 0);
        if (found) return CutSize::of(size);
    }
    // Even removing every other node leaves a journey: direct edge.
    return CutSize::inf();
}

int node_connectivity(int n, const EdgeSet& edges) {
    if (n < 2) throw InvalidSpec("node connectivity needs >= 2 nodes");
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (const auto& [u, v] : edges) {
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
    }

    const int INF = n + 1;
    // Max number of internally vertex-disjoint s-t paths, s,t non-adjacent.
    auto local_conn = [&](int s, int t) {
        // Node splitting: node v -> in 2v, out 2v+1, cap 1 (INF for s,t).
        int nn = 2 * n;
        std::vector<int> cap;
        std::vector<int> head;
        std::vector<std::vector<int>> out(static_cast<size_t>(nn));
        auto add = [&](int a, int b, int c) {
            out[static_cast<size_t>(a)].push_back(static_cast<int>(head.size()));
            head.push_back(b);
            cap.push_back(c);
            out[static_cast<size_t>(b)].push_back(static_cast<int>(head.size()));
            head.push_back(a);
            cap.push_back(0);
        };
        for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? INF : 1);
        for (const auto& [u, v] : edges) {
            add(2 * u + 1, 2 * v, INF);
            add(2 * v + 1, 2 * u, INF);
        }
        int src = 2 * s + 1, dst = 2 * t;
        int flow = 0;
        while (true) {
            std::vector<int> via(static_cast<size_t>(nn), -1);
            std::queue<int> q;
            q.push(src);
            via[static_cast<size_t>(src)] = -2;
            while (!q.empty() && via[static_cast<size_t>(dst)] == -1) {
                int u = q.front();
                q.pop();
                for (int ei : out[static_cast<size_t>(u)]) {
                    int v = head[static_cast<size_t>(ei)];
                    if (cap[static_cast<size_t>(ei)] > 0 && via[static_cast<size_t>(v)] == -1) {
                        via[static_cast<size_t>(v)] = ei;
                        q.push(v);
                    }
                }
            }
            if (via[static_cast<size_t>(dst)] == -1) break;
            for (int v = dst; v != src;) {
                int ei = via[static_cast<size_t>(v)];
                cap[static_cast<size_t>(ei)] -= 1;
                cap[static_cast<size_t>(ei ^ 1)] += 1;
                v = head[static_cast<size_t>(ei ^ 1)];
            }
            ++flow;
            if (flow > n) break;  // safety net; cannot happen
        }
        return flow;
    };

    int best = n - 1;  // complete-graph convention
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (s != t && !adj[static_cast<size_t>(s)][static_cast<size_t>(t)])
                best = std::min(best, local_conn(s, t));
    return best;
}

int node_connectivity(const UnderlyingGraph& g) { return node_connectivity(g.n, g.edges); }

}  // namespace tvg
