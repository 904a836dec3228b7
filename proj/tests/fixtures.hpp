#pragma once

#include <string>
#include <vector>

#include "tvg/graph.hpp"

namespace tvgtest {

inline std::string data_path(const std::string& name) {
    return std::string(TVG_TEST_DATA_DIR) + "/" + name;
}

// Four nodes, three snapshots at times 1..3.
inline tvg::EvolvingGraph fig1() {
    using tvg::make_edge;
    std::vector<tvg::Snapshot> snaps;
    snaps.push_back({1, {make_edge(0, 1), make_edge(0, 2)}});
    snaps.push_back({2, {make_edge(0, 1), make_edge(1, 3)}});
    snaps.push_back({3, {make_edge(0, 2), make_edge(1, 3), make_edge(2, 3)}});
    return tvg::EvolvingGraph::finite(4, snaps);
}

// Same snapshots recurring forever: P=0, Q=3, slot = t mod 3.
inline tvg::EvolvingGraph fig1_periodic() {
    using tvg::make_edge;
    std::vector<tvg::Snapshot> snaps;
    snaps.push_back({1, {make_edge(0, 1), make_edge(0, 2)}});
    snaps.push_back({2, {make_edge(0, 1), make_edge(1, 3)}});
    snaps.push_back({3, {make_edge(0, 2), make_edge(1, 3), make_edge(2, 3)}});
    return tvg::EvolvingGraph::periodic_from_timed(4, 0, 3, snaps);
}

}  // namespace tvgtest
