#include "tvg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace tvg {

namespace {

// mt19937_64 is bit-stable across platforms; distributions are not, so we
// derive values from raw draws only.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t next() { return gen(); }
    int below(int m) { return static_cast<int>(next() % static_cast<uint64_t>(m)); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<size_t>(i)],
                                                  p[static_cast<size_t>(below(i + 1))]);
        return p;
    }
};

EdgeSet er_snapshot(int n, double p, Rng& rng) {
    EdgeSet edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.insert(Edge{u, v});
    return edges;
}

// Circulant graph with offsets 1..ceil(k/2) over {0..n-1}; its node
// connectivity is min(2*ceil(k/2), n-1) >= k.
EdgeSet circulant_core(int n, int k) {
    EdgeSet edges;
    int m = (k + 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= m; ++d) edges.insert(make_edge(i, (i + d) % n));
    return edges;
}

EdgeSet relabel(const EdgeSet& edges, const std::vector<int>& perm) {
    EdgeSet out;
    for (const auto& [u, v] : edges)
        out.insert(make_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]));
    return out;
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    std::string s = text;
    for (auto& c : s)
        if (c == '(' || c == ')') c = c == '(' ? ':' : ' ';
    auto colon = s.find(':');
    std::string name = s.substr(0, colon);
    GeneratorSpec spec{};
    if (name == "periodic-er")
        spec.model = Model::PeriodicEr;
    else if (name == "harary-interval")
        spec.model = Model::HararyInterval;
    else if (name == "recurrent-core")
        spec.model = Model::RecurrentCore;
    else
        throw InvalidSpec("unknown generator model: " + name);

    if (colon != std::string::npos) {
        std::string args = s.substr(colon + 1);
        std::istringstream in(args);
        std::string kv;
        while (std::getline(in, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw InvalidSpec("expected key=value in: " + kv);
            std::string key = kv.substr(0, eq);
            std::string val = kv.substr(eq + 1);
            // trim whitespace
            auto trim = [](std::string& x) {
                x.erase(0, x.find_first_not_of(" \t"));
                x.erase(x.find_last_not_of(" \t") + 1);
            };
            trim(key);
            trim(val);
            if (key == "n") spec.n = std::stoi(val);
            else if (key == "k") spec.k = std::stoi(val);
            else if (key == "period") spec.period = std::stoi(val);
            else if (key == "T") spec.snapshots = std::stoi(val);
            else if (key == "p") spec.p = std::stod(val);
            else if (key == "noise") spec.noise = std::stoi(val);
            else throw InvalidSpec("unknown generator parameter: " + key);
        }
    }
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::ostringstream out;
    switch (model) {
        case Model::PeriodicEr:
            out << "periodic-er:n=" << n << ",period=" << period << ",p=" << p;
            break;
        case Model::HararyInterval:
            out << "harary-interval:n=" << n << ",k=" << k << ",T=" << snapshots;
            break;
        case Model::RecurrentCore:
            out << "recurrent-core:n=" << n << ",k=" << k << ",period=" << period
                << ",noise=" << noise;
            break;
    }
    return out.str();
}

EvolvingGraph generate(const GeneratorSpec& spec, uint64_t seed) {
    if (spec.n < 2) throw InvalidSpec("generator needs n >= 2");
    Rng rng(mix_seed(seed, 0x7e67));

    switch (spec.model) {
        case GeneratorSpec::Model::PeriodicEr: {
            if (spec.period < 1) throw InvalidSpec("periodic-er needs period >= 1");
            if (spec.p < 0.0 || spec.p > 1.0) throw InvalidSpec("p must be in [0,1]");
            std::vector<EdgeSet> cycle;
            for (int i = 0; i < spec.period; ++i) cycle.push_back(er_snapshot(spec.n, spec.p, rng));
            return EvolvingGraph::periodic(spec.n, {}, std::move(cycle));
        }
        case GeneratorSpec::Model::HararyInterval: {
            if (spec.k < 1 || spec.k >= spec.n) throw InvalidSpec("harary-interval needs 1 <= k < n");
            if (spec.snapshots < 1) throw InvalidSpec("harary-interval needs T >= 1");
            EdgeSet core = circulant_core(spec.n, spec.k);
            std::vector<EdgeSet> cycle;
            for (int i = 0; i < spec.snapshots; ++i)
                cycle.push_back(relabel(core, rng.permutation(spec.n)));
            return EvolvingGraph::periodic(spec.n, {}, std::move(cycle));
        }
        case GeneratorSpec::Model::RecurrentCore: {
            if (spec.k < 1 || spec.k >= spec.n) throw InvalidSpec("recurrent-core needs 1 <= k < n");
            if (spec.period < 1) throw InvalidSpec("recurrent-core needs period >= 1");
            EdgeSet core = circulant_core(spec.n, spec.k);
            // Spread the core edges round-robin over the cycle so each is
            // scheduled at least once per period.
            std::vector<EdgeSet> cycle(static_cast<size_t>(spec.period));
            int i = 0;
            for (const auto& e : core) {
                cycle[static_cast<size_t>(i % spec.period)].insert(e);
                ++i;
            }
            std::vector<EdgeSet> prefix;
            if (spec.noise > 0) {
                prefix.assign(static_cast<size_t>(spec.period), EdgeSet{});
                for (int x = 0; x < spec.noise; ++x) {
                    int u = rng.below(spec.n);
                    int v = rng.below(spec.n);
                    if (u == v) continue;
                    prefix[static_cast<size_t>(rng.below(spec.period))].insert(make_edge(u, v));
                }
            }
            return EvolvingGraph::periodic(spec.n, std::move(prefix), std::move(cycle));
        }
    }
    throw InvalidSpec("unknown generator model");
}

EvolvingGraph random_finite_graph(int n, int snapshots, double p, uint64_t seed) {
    Rng rng(mix_seed(seed, 0xf1e));
    std::vector<EdgeSet> slots;
    for (int i = 0; i < snapshots; ++i) slots.push_back(er_snapshot(n, p, rng));
    return EvolvingGraph::finite_dense(n, std::move(slots));
}

}  // namespace tvg
