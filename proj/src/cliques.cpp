#include "tricl/cliques.hpp"

#include "tricl/degeneracy.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace tricl {

namespace {

// Forward adjacency along the degeneracy order: for each v, the neighbors placed
// after v in the elimination order, kept sorted by id.
struct ForwardDag {
    std::vector<std::uint64_t> offsets;
    std::vector<VertexId> adj;
    std::vector<VertexId> roots;  // all vertices in elimination order

    std::span<const VertexId> out(VertexId v) const {
        return {adj.data() + offsets[v], adj.data() + offsets[v + 1]};
    }
};

ForwardDag build_forward_dag(const Graph& g) {
    DegeneracyInfo info = degeneracy(g);
    const VertexId n = g.vertex_count();
    ForwardDag dag;
    dag.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : g.neighbors(v))
            if (info.position[w] > info.position[v]) ++dag.offsets[v + 1];
    }
    for (VertexId v = 0; v < n; ++v) dag.offsets[v + 1] += dag.offsets[v];
    dag.adj.resize(dag.offsets[n]);
    std::vector<std::uint64_t> cursor(dag.offsets.begin(), dag.offsets.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : g.neighbors(v))  // id-sorted source keeps out-lists id-sorted
            if (info.position[w] > info.position[v]) dag.adj[cursor[v]++] = w;
    }
    dag.roots = std::move(info.order);
    return dag;
}

// Recursive expansion over one root's subtree. Scratch rows are reused across roots.
class CliqueWalker {
public:
    CliqueWalker(const ForwardDag& dag, std::uint32_t l) : dag_(dag), l_(l) {
        chosen_.resize(l);
        scratch_.resize(l);
        emit_buf_.resize(l);
    }

    template <typename Emit>
    void run(VertexId root, Emit&& emit) {
        chosen_[0] = root;
        if (l_ == 1) {
            emit_sorted(1, emit);
            return;
        }
        auto fwd = dag_.out(root);
        scratch_[1].assign(fwd.begin(), fwd.end());
        descend(1, emit);
    }

    const WorkCounter& work() const { return work_; }

private:
    template <typename Emit>
    void descend(std::uint32_t depth, Emit&& emit) {
        const std::vector<VertexId>& cand = scratch_[depth];
        if (cand.size() + depth < l_) return;  // cannot complete a K_l from here
        for (VertexId u : cand) {
            ++work_.inner_iterations;
            chosen_[depth] = u;
            if (depth + 1 == l_) {
                emit_sorted(l_, emit);
                continue;
            }
            auto& next = scratch_[depth + 1];
            next.clear();
            auto fwd = dag_.out(u);
            auto a = cand.begin();
            auto b = fwd.begin();
            while (a != cand.end() && b != fwd.end()) {
                ++work_.inner_iterations;
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    next.push_back(*a);
                    ++a;
                    ++b;
                }
            }
            descend(depth + 1, emit);
        }
    }

    template <typename Emit>
    void emit_sorted(std::uint32_t len, Emit&& emit) {
        std::copy_n(chosen_.begin(), len, emit_buf_.begin());
        std::sort(emit_buf_.begin(), emit_buf_.begin() + len);
        emit(std::span<const VertexId>(emit_buf_.data(), len));
    }

    const ForwardDag& dag_;
    std::uint32_t l_;
    std::vector<VertexId> chosen_;
    std::vector<std::vector<VertexId>> scratch_;
    std::vector<VertexId> emit_buf_;
    WorkCounter work_;
};

template <typename Emit>
WorkCounter walk_root_range(const ForwardDag& dag, std::uint32_t l, std::size_t lo, std::size_t hi,
                            Emit&& emit) {
    CliqueWalker walker(dag, l);
    for (std::size_t i = lo; i < hi; ++i) walker.run(dag.roots[i], emit);
    return walker.work();
}

struct WorkerOutput {
    std::vector<VertexId> flat;
    WorkCounter work;
};

// Contiguous root ranges keep the concatenated stream identical to a
// single-threaded walk regardless of the worker count.
std::vector<std::pair<std::size_t, std::size_t>> split_ranges(std::size_t n, unsigned threads) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    unsigned t = std::max(1u, threads);
    std::size_t chunk = (n + t - 1) / t;
    for (std::size_t lo = 0; lo < n; lo += chunk) ranges.emplace_back(lo, std::min(lo + chunk, n));
    return ranges;
}

}  // namespace

WorkCounter list_k_cliques(const Graph& g, std::uint32_t l, const CliqueSink& sink,
                           unsigned threads) {
    if (l == 0) throw contract_error("clique size l must be >= 1");
    if (l > g.vertex_count()) return {};
    ForwardDag dag = build_forward_dag(g);

    if (threads <= 1) {
        return walk_root_range(dag, l, 0, dag.roots.size(), [&](std::span<const VertexId> c) {
            sink(c);
        });
    }

    auto ranges = split_ranges(dag.roots.size(), threads);
    std::vector<WorkerOutput> outputs(ranges.size());
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t r = 0; r < ranges.size(); ++r) {
        pool.emplace_back([&, r] {
            outputs[r].work = walk_root_range(dag, l, ranges[r].first, ranges[r].second,
                                              [&](std::span<const VertexId> c) {
                                                  outputs[r].flat.insert(outputs[r].flat.end(),
                                                                         c.begin(), c.end());
                                              });
        });
    }
    for (auto& t : pool) t.join();

    WorkCounter total;
    for (auto& out : outputs) {
        total += out.work;
        for (std::size_t i = 0; i + l <= out.flat.size(); i += l)
            sink(std::span<const VertexId>(out.flat.data() + i, l));
    }
    return total;
}

CliqueCount count_k_cliques(const Graph& g, std::uint32_t l, unsigned threads) {
    if (l == 0) throw contract_error("clique size l must be >= 1");
    CliqueCount result;
    if (l > g.vertex_count()) return result;
    ForwardDag dag = build_forward_dag(g);
    auto ranges = split_ranges(dag.roots.size(), threads);
    std::vector<std::uint64_t> counts(ranges.size(), 0);
    std::vector<WorkCounter> works(ranges.size());
    auto task = [&](std::size_t r) {
        std::uint64_t c = 0;
        works[r] = walk_root_range(dag, l, ranges[r].first, ranges[r].second,
                                   [&](std::span<const VertexId>) { ++c; });
        counts[r] = c;
    };
    if (threads <= 1) {
        for (std::size_t r = 0; r < ranges.size(); ++r) task(r);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t r = 0; r < ranges.size(); ++r) pool.emplace_back(task, r);
        for (auto& t : pool) t.join();
    }
    for (std::size_t r = 0; r < ranges.size(); ++r) {
        result.count += counts[r];
        result.work += works[r];
    }
    return result;
}

std::uint64_t brute_force_k_cliques(const Graph& g, std::uint32_t l, const Budgets& budgets) {
    if (l == 0) throw contract_error("clique size l must be >= 1");
    const VertexId n = g.vertex_count();
    if (l > n) return 0;
    BigCount tuples = binomial(n, l);
    if (tuples.saturated || tuples.value > budgets.oracle_tuple_budget)
        throw capacity_error("brute-force clique scan refused: C(" + std::to_string(n) + "," +
                             std::to_string(l) + ") exceeds oracle budget");

    std::uint64_t count = 0;
    std::vector<VertexId> chosen;
    chosen.reserve(l);
    auto rec = [&](auto&& self, VertexId start) -> void {
        if (chosen.size() == l) {
            ++count;
            return;
        }
        for (VertexId v = start; v < n; ++v) {
            bool ok = true;
            for (VertexId c : chosen)
                if (!g.has_edge(c, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

std::vector<VertexId> collect_k_cliques(const Graph& g, std::uint32_t l, unsigned threads) {
    std::vector<VertexId> flat;
    list_k_cliques(g, l, [&](std::span<const VertexId> c) {
        flat.insert(flat.end(), c.begin(), c.end());
    }, threads);
    return flat;
}

std::string clique_stream_string(std::vector<VertexId> flat, std::uint32_t l) {
    if (l == 0) throw contract_error("clique size l must be >= 1");
    std::vector<std::span<const VertexId>> rows;
    for (std::size_t i = 0; i + l <= flat.size(); i += l)
        rows.emplace_back(flat.data() + i, l);
    std::sort(rows.begin(), rows.end(), [](auto a, auto b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    std::ostringstream ss;
    for (auto row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) ss << (i ? " " : "") << row[i];
        ss << "\n";
    }
    return ss.str();
}

}  // namespace tricl
