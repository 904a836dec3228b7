#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tvg/errors.hpp"

namespace tvg {

using NodeId = int;

// Undirected edge, normalized to first < second.
using Edge = std::pair<NodeId, NodeId>;
using EdgeSet = std::set<Edge>;

inline Edge make_edge(NodeId u, NodeId v) {
    if (u == v) throw InvalidSpec("self-loop edge (" + std::to_string(u) + ")");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// The edge set present at one time instant.
struct Snapshot {
    int time = 0;
    EdgeSet edges;
};

struct UnderlyingGraph {
    int n = 0;
    EdgeSet edges;
};

// Contiguous time interval [start, end]; an absent end means [start, *).
struct TimeInterval {
    int start = 0;
    std::optional<int> end;

    static TimeInterval closed(int a, int b) { return {a, b}; }
    static TimeInterval open_from(int a) { return {a, std::nullopt}; }
};

// Evolving graph over a fixed vertex set {0..n-1}.
//
// The lifetime is either finite (one edge set per time 0..last_time, stored
// densely, times without listed edges are empty snapshots) or eventually
// periodic: a prefix of length P occupying times [0, P) followed by a cycle
// of length Q repeated forever.  The snapshot at global time j of a periodic
// graph is prefix[j] for j < P and cycle[(j - P) mod Q] otherwise.
class EvolvingGraph {
  public:
    static EvolvingGraph finite(int n, const std::vector<Snapshot>& snaps);
    // Dense finite constructor; slot i = snapshot at time i.
    static EvolvingGraph finite_dense(int n, std::vector<EdgeSet> slots);
    static EvolvingGraph periodic(int n, std::vector<EdgeSet> prefix, std::vector<EdgeSet> cycle);
    // Builds a periodic graph from snapshots carrying arbitrary times: a
    // cycle snapshot recorded at time t lands in slot (t - P) mod Q, so
    // fixtures may keep their original (e.g. 1-based) times.
    static EvolvingGraph periodic_from_timed(int n, int prefix_len, int period,
                                             const std::vector<Snapshot>& snaps);

    int node_count() const { return n_; }
    bool is_periodic() const { return periodic_; }
    int prefix_len() const { return static_cast<int>(prefix_.size()); }
    int period() const { return static_cast<int>(cycle_.size()); }
    // Finite graphs only: the last time instant of the lifetime (-1 if empty).
    int last_time() const { return static_cast<int>(prefix_.size()) - 1; }

    const EdgeSet& snapshot_at(int j) const;
    // Like snapshot_at but returns an empty set past a finite lifetime.
    const EdgeSet& snapshot_or_empty(int j) const;

    std::set<NodeId> neighbors_at(NodeId v, int j) const;
    EdgeSet underlying_edges() const;

    const std::vector<EdgeSet>& prefix_slots() const { return prefix_; }
    const std::vector<EdgeSet>& cycle_slots() const { return cycle_; }

    bool operator==(const EvolvingGraph&) const = default;

  private:
    int n_ = 0;
    bool periodic_ = false;
    std::vector<EdgeSet> prefix_;  // finite: the whole lifetime
    std::vector<EdgeSet> cycle_;
};

EvolvingGraph temporal_subgraph(const EvolvingGraph& g, const TimeInterval& t);
EvolvingGraph spatial_subgraph(const EvolvingGraph& g, const std::set<NodeId>& keep);
UnderlyingGraph underlying_graph(const EvolvingGraph& g);

}  // namespace tvg
