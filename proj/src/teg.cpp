#include "tvg/teg.hpp"

#include <fstream>
#include <sstream>

namespace tvg {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

EvolvingGraph parse_teg(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, raw)) {
            ++lineno;
            out = strip_comment(raw);
            if (!blank(out)) return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw ParseError(lineno, "missing header");
    {
        std::istringstream ls(line);
        std::string tag;
        int version = 0;
        if (!(ls >> tag >> version) || tag != "teg" || version != 1)
            throw ParseError(lineno, "expected 'teg 1' header");
    }

    int n = 0;
    if (!next_line(line)) throw ParseError(lineno, "missing 'n' line");
    {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag >> n) || tag != "n" || n < 1)
            throw ParseError(lineno, "expected 'n <count>'");
    }

    bool periodic = false;
    int prefix_len = 0, period = 0;
    if (!next_line(line)) throw ParseError(lineno, "missing 'lifetime' line");
    {
        std::istringstream ls(line);
        std::string tag, kind;
        if (!(ls >> tag >> kind) || tag != "lifetime")
            throw ParseError(lineno, "expected 'lifetime' line");
        if (kind == "finite") {
            periodic = false;
        } else if (kind == "periodic") {
            periodic = true;
            if (!(ls >> prefix_len >> period) || prefix_len < 0 || period < 1)
                throw ParseError(lineno, "expected 'lifetime periodic <prefix_len> <period>'");
        } else {
            throw ParseError(lineno, "lifetime must be 'finite' or 'periodic'");
        }
    }

    std::vector<Snapshot> snaps;
    int prev_time = -1;
    while (next_line(line)) {
        std::istringstream ls(line);
        std::string tag;
        int t, u, v;
        if (!(ls >> tag >> t >> u >> v) || tag != "e")
            throw ParseError(lineno, "expected 'e <time> <u> <v>'");
        if (t < 0) throw ParseError(lineno, "negative time");
        if (t < prev_time) throw ParseError(lineno, "times must be non-decreasing across lines");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "node id out of range [0, " + std::to_string(n) + ")");
        if (u >= v) throw ParseError(lineno, "edge must satisfy u < v");
        if (periodic && t >= prefix_len + period)
            throw ParseError(lineno, "time beyond prefix_len + period");
        if (snaps.empty() || snaps.back().time != t) snaps.push_back(Snapshot{t, {}});
        snaps.back().edges.insert(Edge{u, v});
        prev_time = t;
    }

    try {
        if (periodic) return EvolvingGraph::periodic_from_timed(n, prefix_len, period, snaps);
        return EvolvingGraph::finite(n, snaps);
    } catch (const InvalidSpec& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string serialize_teg(const EvolvingGraph& g) {
    std::ostringstream out;
    out << "teg 1\n";
    out << "n " << g.node_count() << "\n";
    auto emit = [&](int time, const EdgeSet& edges) {
        for (const auto& [u, v] : edges) out << "e " << time << " " << u << " " << v << "\n";
    };
    if (g.is_periodic()) {
        out << "lifetime periodic " << g.prefix_len() << " " << g.period() << "\n";
        for (int j = 0; j < g.prefix_len(); ++j)
            emit(j, g.prefix_slots()[static_cast<size_t>(j)]);
        for (int i = 0; i < g.period(); ++i)
            emit(g.prefix_len() + i, g.cycle_slots()[static_cast<size_t>(i)]);
    } else {
        out << "lifetime finite\n";
        for (int j = 0; j <= g.last_time(); ++j)
            emit(j, g.prefix_slots()[static_cast<size_t>(j)]);
    }
    return out.str();
}

EvolvingGraph load_teg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_teg(buf.str());
}

}  // namespace tvg
