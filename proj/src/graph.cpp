#include "tvg/graph.hpp"

#include <algorithm>

namespace tvg {

namespace {

void validate_edges(int n, const EdgeSet& edges) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidSpec("edge endpoint out of range for n=" + std::to_string(n));
        if (u == v) throw InvalidSpec("self-loop edge");
        if (u > v) throw InvalidSpec("edge not normalized");
    }
}

const EdgeSet kEmptyEdges{};

}  // namespace

EvolvingGraph EvolvingGraph::finite(int n, const std::vector<Snapshot>& snaps) {
    int last = -1;
    for (const auto& s : snaps) {
        if (s.time <= last) throw InvalidSpec("snapshot times must be strictly increasing");
        if (s.time < 0) throw InvalidSpec("negative snapshot time");
        last = s.time;
    }
    std::vector<EdgeSet> slots(static_cast<size_t>(last + 1));
    for (const auto& s : snaps) slots[static_cast<size_t>(s.time)] = s.edges;
    return finite_dense(n, std::move(slots));
}

EvolvingGraph EvolvingGraph::finite_dense(int n, std::vector<EdgeSet> slots) {
    if (n < 1) throw InvalidSpec("node count must be positive");
    for (const auto& e : slots) validate_edges(n, e);
    EvolvingGraph g;
    g.n_ = n;
    g.periodic_ = false;
    g.prefix_ = std::move(slots);
    return g;
}

EvolvingGraph EvolvingGraph::periodic(int n, std::vector<EdgeSet> prefix,
                                      std::vector<EdgeSet> cycle) {
    if (n < 1) throw InvalidSpec("node count must be positive");
    if (cycle.empty()) throw InvalidSpec("periodic graph needs a nonempty cycle");
    for (const auto& e : prefix) validate_edges(n, e);
    for (const auto& e : cycle) validate_edges(n, e);
    EvolvingGraph g;
    g.n_ = n;
    g.periodic_ = true;
    g.prefix_ = std::move(prefix);
    g.cycle_ = std::move(cycle);
    return g;
}

EvolvingGraph EvolvingGraph::periodic_from_timed(int n, int prefix_len, int period,
                                                 const std::vector<Snapshot>& snaps) {
    if (prefix_len < 0 || period < 1) throw InvalidSpec("bad prefix length or period");
    std::vector<EdgeSet> prefix(static_cast<size_t>(prefix_len));
    std::vector<EdgeSet> cycle(static_cast<size_t>(period));
    for (const auto& s : snaps) {
        if (s.time < 0) throw InvalidSpec("negative snapshot time");
        if (s.time < prefix_len) {
            prefix[static_cast<size_t>(s.time)] = s.edges;
        } else {
            int slot = (s.time - prefix_len) % period;
            cycle[static_cast<size_t>(slot)] = s.edges;
        }
    }
    return periodic(n, std::move(prefix), std::move(cycle));
}

const EdgeSet& EvolvingGraph::snapshot_at(int j) const {
    if (j < 0) throw OutOfLifetime("negative time " + std::to_string(j));
    if (periodic_) {
        int p = prefix_len();
        if (j < p) return prefix_[static_cast<size_t>(j)];
        return cycle_[static_cast<size_t>((j - p) % period())];
    }
    if (j > last_time())
        throw OutOfLifetime("time " + std::to_string(j) + " beyond lifetime end " +
                            std::to_string(last_time()));
    return prefix_[static_cast<size_t>(j)];
}

const EdgeSet& EvolvingGraph::snapshot_or_empty(int j) const {
    if (!periodic_ && (j < 0 || j > last_time())) return kEmptyEdges;
    return snapshot_at(j);
}

std::set<NodeId> EvolvingGraph::neighbors_at(NodeId v, int j) const {
    std::set<NodeId> out;
    for (const auto& [a, b] : snapshot_or_empty(j)) {
        if (a == v) out.insert(b);
        if (b == v) out.insert(a);
    }
    return out;
}

EdgeSet EvolvingGraph::underlying_edges() const {
    EdgeSet all;
    for (const auto& e : prefix_) all.insert(e.begin(), e.end());
    for (const auto& e : cycle_) all.insert(e.begin(), e.end());
    return all;
}

EvolvingGraph temporal_subgraph(const EvolvingGraph& g, const TimeInterval& t) {
    if (t.start < 0) throw InvalidSpec("interval start must be >= 0");
    if (t.end && *t.end < t.start) throw EmptyInterval("interval end before start");

    if (!g.is_periodic()) {
        int last = g.last_time();
        if (t.start > last) throw EmptyInterval("interval starts after lifetime end");
        int hi = t.end ? std::min(*t.end, last) : last;
        std::vector<EdgeSet> slots(static_cast<size_t>(hi + 1));
        for (int j = t.start; j <= hi; ++j) slots[static_cast<size_t>(j)] = g.snapshot_at(j);
        return EvolvingGraph::finite_dense(g.node_count(), std::move(slots));
    }

    if (t.end) {
        // Closed interval on a periodic graph unrolls to a finite graph,
        // keeping absolute times.
        std::vector<EdgeSet> slots(static_cast<size_t>(*t.end + 1));
        for (int j = t.start; j <= *t.end; ++j) slots[static_cast<size_t>(j)] = g.snapshot_at(j);
        return EvolvingGraph::finite_dense(g.node_count(), std::move(slots));
    }

    // [x,*) on a periodic graph: consume the prefix, rotate the cycle if the
    // cut lands inside it.  The result is rebased so its time 0 is x.
    int p = g.prefix_len();
    int q = g.period();
    if (t.start <= p) {
        std::vector<EdgeSet> prefix(g.prefix_slots().begin() + t.start, g.prefix_slots().end());
        return EvolvingGraph::periodic(g.node_count(), std::move(prefix), g.cycle_slots());
    }
    int rot = (t.start - p) % q;
    std::vector<EdgeSet> cycle;
    cycle.reserve(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i)
        cycle.push_back(g.cycle_slots()[static_cast<size_t>((i + rot) % q)]);
    return EvolvingGraph::periodic(g.node_count(), {}, std::move(cycle));
}

EvolvingGraph spatial_subgraph(const EvolvingGraph& g, const std::set<NodeId>& keep) {
    auto filter = [&](const EdgeSet& edges) {
        EdgeSet out;
        for (const auto& e : edges)
            if (keep.count(e.first) && keep.count(e.second)) out.insert(e);
        return out;
    };
    std::vector<EdgeSet> prefix;
    prefix.reserve(g.prefix_slots().size());
    for (const auto& e : g.prefix_slots()) prefix.push_back(filter(e));
    if (!g.is_periodic()) return EvolvingGraph::finite_dense(g.node_count(), std::move(prefix));
    std::vector<EdgeSet> cycle;
    cycle.reserve(g.cycle_slots().size());
    for (const auto& e : g.cycle_slots()) cycle.push_back(filter(e));
    return EvolvingGraph::periodic(g.node_count(), std::move(prefix), std::move(cycle));
}

UnderlyingGraph underlying_graph(const EvolvingGraph& g) {
    return UnderlyingGraph{g.node_count(), g.underlying_edges()};
}

}  // namespace tvg
