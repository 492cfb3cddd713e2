#include "tricl/edgelist.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace tricl {

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_edge_list(std::istream& in, ParseReport* report) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::optional<std::uint64_t> pinned_n;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            auto toks = split_ws(sv.substr(1));
            if (toks.size() == 2 && toks[0] == "n") {
                std::uint64_t n = 0;
                if (!parse_u64(toks[1], n))
                    throw malformed_input_error("line " + std::to_string(lineno) +
                                                ": bad vertex count directive");
                if (pinned_n && *pinned_n != n)
                    throw malformed_input_error("line " + std::to_string(lineno) +
                                                ": conflicting vertex count directives");
                pinned_n = n;
            }
            continue;
        }
        auto toks = split_ws(sv);
        std::uint64_t u = 0, v = 0;
        if (toks.size() != 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v))
            throw malformed_input_error("line " + std::to_string(lineno) +
                                        ": expected \"u v\", got \"" + line + "\"");
        raw.emplace_back(u, v);
    }

    ParseReport rep;
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    if (pinned_n) {
        rep.n = static_cast<VertexId>(*pinned_n);
        for (auto [u, v] : raw) {
            if (u >= *pinned_n || v >= *pinned_n)
                throw malformed_input_error("vertex id " + std::to_string(std::max(u, v)) +
                                            " >= pinned n=" + std::to_string(*pinned_n));
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
        }
    } else {
        // compact ids to a dense range, preserving numeric order
        std::vector<std::uint64_t> ids;
        ids.reserve(2 * raw.size());
        for (auto [u, v] : raw) {
            ids.push_back(u);
            ids.push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        rep.n = static_cast<VertexId>(ids.size());
        rep.reindexed = true;
        auto dense = [&](std::uint64_t x) {
            return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
        };
        for (auto [u, v] : raw) edges.push_back({dense(u), dense(v)});
    }

    BuildStats stats;
    Graph g = Graph::from_edges(rep.n, edges, &stats);
    rep.edges_kept = g.edge_count();
    rep.self_loops_dropped = stats.self_loops_dropped;
    rep.duplicate_edges_dropped = stats.duplicate_edges_dropped;
    if (report) *report = rep;
    return g;
}

Graph load_edge_list(const std::string& path, ParseReport* report) {
    std::ifstream in(path);
    if (!in) throw malformed_input_error("cannot open " + path);
    return parse_edge_list(in, report);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n " << g.vertex_count() << "\n";
    g.for_each_edge([&](VertexId u, VertexId v) { out << u << " " << v << "\n"; });
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw malformed_input_error("cannot write " + path);
    write_edge_list(out, g);
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

}  // namespace tricl
