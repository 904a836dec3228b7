#pragma once

#include <cstdint>
#include <string>

#include "tvg/graph.hpp"

namespace tvg {

// Deterministic generator over a seeded RNG; identical (spec, seed) pairs
// produce identical graphs on every platform.
struct GeneratorSpec {
    enum class Model { PeriodicEr, HararyInterval, RecurrentCore };
    Model model;
    int n = 0;
    int k = 0;        // harary-interval / recurrent-core
    int period = 0;   // periodic-er / recurrent-core
    int snapshots = 0;  // harary-interval T
    double p = 0.0;   // periodic-er edge probability
    int noise = 0;    // recurrent-core transient prefix edges

    // "periodic-er:n=4,period=2,p=0.5", "harary-interval:n=6,k=3,T=5",
    // "recurrent-core:n=5,k=3,period=4,noise=2".  '(' ... ')' also accepted.
    static GeneratorSpec parse(const std::string& text);
    std::string to_string() const;
};

EvolvingGraph generate(const GeneratorSpec& spec, uint64_t seed);

// Uniform random finite graph: T snapshots, each edge present independently
// with probability p.  Used as fuzz corpus for the dual-oracle checks.
EvolvingGraph random_finite_graph(int n, int snapshots, double p, uint64_t seed);

}  // namespace tvg
