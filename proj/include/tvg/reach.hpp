#pragma once

#include <optional>
#include <vector>

#include "tvg/graph.hpp"

namespace tvg {

// A temporal path: nodes are distinct, times[i] is when edge
// (nodes[i], nodes[i+1]) is crossed; times strictly increasing.
struct Journey {
    std::vector<NodeId> nodes;
    std::vector<int> times;
};

// Family of intermediate-node sets of journeys (endpoints excluded).
using NodeSetFamily = std::vector<std::set<NodeId>>;

// Size of a dynamic cut; unbounded when a direct-edge journey exists and no
// intermediate-node removal can sever the pair.
struct CutSize {
    bool unbounded = false;
    int value = 0;

    static CutSize inf() { return {true, 0}; }
    static CutSize of(int v) { return {false, v}; }
    bool exceeds(int threshold) const { return unbounded || value > threshold; }
    bool at_least(int k) const { return unbounded || value >= k; }
    bool operator==(const CutSize&) const = default;
};

struct HittingSetResult {
    CutSize size;
    std::set<NodeId> witness;  // empty when size is unbounded or zero
};

struct SearchLimits {
    int sigma_max_nodes = 16;   // guard for exhaustive journey enumeration
    int removal_max_size = 6;   // guard for subset enumeration in the removal oracle
};

// Earliest time at which each node can be reached from s by a journey whose
// edge times lie in [from, horizon].  Entry s is from-1 (reached at start);
// unreached nodes are nullopt.  One edge is traversed per time instant.
std::vector<std::optional<int>> earliest_arrival(const EvolvingGraph& g, NodeId s, int from,
                                                 int horizon);

// Last snapshot time for finite graphs; max(from, prefix_len) + n * period
// for periodic ones.  A journey exists in G_[from,*] iff one exists whose
// edge times fit in [from, effective_horizon].
int effective_horizon(const EvolvingGraph& g, int from);

bool journey_exists(const EvolvingGraph& g, NodeId s, NodeId t, int from);

// A witness journey with earliest-arrival times, if one exists.
std::optional<Journey> find_journey(const EvolvingGraph& g, NodeId s, NodeId t, int from);

// Minimal antichain of Sigma(G_[from,*], s, t): every journey's intermediate
// set is a superset of some returned set; every returned set is realized.
NodeSetFamily enumerate_sigma(const EvolvingGraph& g, NodeId s, NodeId t, int from,
                              const SearchLimits& limits = {});

// Exact minimum hitting set.  Unbounded iff the family contains the empty
// set; size 0 with empty witness for the empty family.  Witness ties broken
// by lexicographically smallest node set.
HittingSetResult min_hitting_set(const NodeSetFamily& family);

// DynMinCut via Sigma enumeration + hitting set (oracle A).
CutSize dyn_min_cut(const EvolvingGraph& g, NodeId s, NodeId t, int from,
                    const SearchLimits& limits = {});

// DynMinCut via node-removal search (oracle B): smallest S, disjoint from
// {s,t}, whose removal kills every journey.  Must agree with oracle A.
CutSize dyn_min_cut_removal(const EvolvingGraph& g, NodeId s, NodeId t, int from,
                            const SearchLimits& limits = {});

// Exact vertex connectivity via max-flow with node splitting; K_n yields n-1.
int node_connectivity(const UnderlyingGraph& g);
int node_connectivity(int n, const EdgeSet& edges);

}  // namespace tvg
