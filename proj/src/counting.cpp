#include "tricl/counting.hpp"

#include "tricl/cliques.hpp"
#include "tricl/triangles.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <unordered_map>

namespace tricl {

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<VertexId>& v) const {
        std::uint64_t h = 1469598103934665603ULL;  // fnv-1a
        for (VertexId x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Triangle count plus work, via the hashed edge-iterator.
std::pair<std::uint64_t, WorkCounter> count_triangles(const Graph& g) {
    std::uint64_t count = 0;
    WorkCounter work = list_edge_iterator_hashed(g, [&](const Triangle&) { ++count; });
    return {count, work};
}

// First triangle in canonical edge order, merge-based, early exit.
std::optional<Triangle> detect_triangle(const Graph& g) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (v <= u) continue;
            auto a = g.neighbors(u);
            auto b = g.neighbors(v);
            auto ia = a.begin();
            auto ib = b.begin();
            while (ia != a.end() && ib != b.end()) {
                if (*ia < *ib) {
                    ++ia;
                } else if (*ib < *ia) {
                    ++ib;
                } else {
                    if (*ia > v) return Triangle{u, v, *ia};
                    ++ia;
                    ++ib;
                }
            }
        }
    }
    return std::nullopt;
}

// Sorted ids adjacent to every vertex of `copy`.
std::vector<VertexId> common_neighborhood(const Graph& g, std::span<const VertexId> copy) {
    std::vector<VertexId> common(g.neighbors(copy[0]).begin(), g.neighbors(copy[0]).end());
    std::vector<VertexId> next;
    for (std::size_t i = 1; i < copy.size() && !common.empty(); ++i) {
        auto nb = g.neighbors(copy[i]);
        next.clear();
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        common.swap(next);
    }
    return common;
}

BigCount count_k_in_graph(const Graph& g, std::uint32_t l, const Budgets& budgets,
                          WorkCounter& work);

// Accumulated K_{l2} counts over the common neighborhoods of a range of K_{l1} copies.
BigCount extension_partial(const Graph& g, std::span<const VertexId> copies_flat,
                           std::uint32_t l1, std::uint32_t l2, const Budgets& budgets,
                           std::size_t lo, std::size_t hi, WorkCounter& work) {
    BigCount total;
    for (std::size_t c = lo; c < hi; ++c) {
        std::span<const VertexId> copy(copies_flat.data() + c * l1, l1);
        std::vector<VertexId> common = common_neighborhood(g, copy);
        if (common.size() < l2) continue;
        Graph sub = induced_subgraph(g, common);
        total.add(count_k_in_graph(sub, l2, budgets, work));
    }
    return total;
}

// Exact K_l count with the extension recurrence; base cases l <= 3.
BigCount count_k_in_graph(const Graph& g, std::uint32_t l, const Budgets& budgets,
                          WorkCounter& work) {
    BigCount result;
    switch (l) {
        case 0:
            result.value = 1;
            return result;
        case 1:
            result.value = g.vertex_count();
            return result;
        case 2:
            result.value = g.edge_count();
            return result;
        case 3: {
            auto [count, w] = count_triangles(g);
            work += w;
            result.value = count;
            return result;
        }
        default:
            break;
    }

    const std::uint32_t l1 = l > 5 ? l - 3 : 2;
    const std::uint32_t l2 = l - l1;
    std::vector<VertexId> copies;
    work += list_k_cliques(g, l1, [&](std::span<const VertexId> c) {
        copies.insert(copies.end(), c.begin(), c.end());
    });
    BigCount total = extension_partial(g, copies, l1, l2, budgets, 0, copies.size() / l1, work);

    BigCount divisor = binomial(l, l1);
    if (total.saturated) return total;
    if (total.value % divisor.value != 0)
        throw consistency_error("extension total not divisible by C(l,l1)");
    result.value = total.value / divisor.value;
    return result;
}

std::vector<VertexId> assemble_members(const AuxiliaryGraph& h,
                                       std::span<const VertexId> h_vertices) {
    std::vector<VertexId> out;
    for (VertexId hv : h_vertices) {
        auto mem = h.members(hv);
        out.insert(out.end(), mem.begin(), mem.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// K_3j witness inside `g` via a triangle of the auxiliary graph, or nullopt.
std::optional<std::vector<VertexId>> detect_3j(const Graph& g, std::uint32_t j,
                                               const Budgets& budgets) {
    if (static_cast<std::uint64_t>(3) * j > g.vertex_count()) return std::nullopt;
    AuxiliaryGraph h = build_auxiliary_graph(g, j, budgets);
    std::optional<Triangle> t = detect_triangle(h.h_graph);
    if (!t) return std::nullopt;
    std::vector<VertexId> witness = assemble_members(h, std::array<VertexId, 3>{t->i, t->j, t->k});
    if (!is_clique(g, witness)) throw consistency_error("triangle-method witness not a clique");
    return witness;
}

}  // namespace

AuxiliaryGraph build_auxiliary_graph(const Graph& g, std::uint32_t j, const Budgets& budgets) {
    if (j == 0) throw contract_error("auxiliary graph needs j >= 1");
    AuxiliaryGraph h;
    h.j = j;

    std::vector<VertexId> flat;
    std::uint64_t copies = 0;
    list_k_cliques(g, j, [&](std::span<const VertexId> c) {
        if (++copies > budgets.h_vertex_budget)
            throw capacity_error("auxiliary graph exceeds H-vertex budget of " +
                                 std::to_string(budgets.h_vertex_budget));
        flat.insert(flat.end(), c.begin(), c.end());
    });

    // H-vertex ids follow the lexicographic order of their tuples; for j=1 this
    // makes H-vertex i the base vertex i
    std::vector<std::uint64_t> perm(copies);
    for (std::uint64_t i = 0; i < copies; ++i) perm[i] = i;
    auto tuple_less = [&](std::uint64_t a, std::uint64_t b) {
        return std::lexicographical_compare(flat.begin() + a * j, flat.begin() + (a + 1) * j,
                                            flat.begin() + b * j, flat.begin() + (b + 1) * j);
    };
    std::sort(perm.begin(), perm.end(), tuple_less);
    h.h_vertex_members.reserve(flat.size());
    std::unordered_map<std::vector<VertexId>, VertexId, TupleHash> id_of;
    id_of.reserve(copies);
    std::vector<VertexId> key(j);
    for (std::uint64_t i = 0; i < copies; ++i) {
        auto begin = flat.begin() + perm[i] * j;
        key.assign(begin, begin + j);
        id_of.emplace(key, static_cast<VertexId>(i));
        h.h_vertex_members.insert(h.h_vertex_members.end(), begin, begin + j);
    }

    std::vector<Edge> h_edges;
    std::vector<std::uint32_t> pick(j);  // positions of side A within the 2j-tuple; always holds 0
    std::vector<VertexId> side_a(j), side_b(j);
    list_k_cliques(g, 2 * j, [&](std::span<const VertexId> c) {
        // every split {A, B} with position 0 pinned to A: choose j-1 of the rest
        for (std::uint32_t i = 0; i < j; ++i) pick[i] = i;
        while (true) {
            std::size_t ai = 0, bi = 0;
            std::uint32_t next_pick = 0;
            for (std::uint32_t pos = 0; pos < 2 * j; ++pos) {
                if (next_pick < j && pick[next_pick] == pos) {
                    side_a[ai++] = c[pos];
                    ++next_pick;
                } else {
                    side_b[bi++] = c[pos];
                }
            }
            h_edges.push_back({id_of.at(side_a), id_of.at(side_b)});

            // next combination of {1..2j-1} of size j-1 (position 0 stays)
            std::uint32_t i = j;
            while (i > 1 && pick[i - 1] == 2 * j - (j - i + 1)) --i;
            if (i == 1) break;
            ++pick[i - 1];
            for (std::uint32_t t = i; t < j; ++t) pick[t] = pick[t - 1] + 1;
        }
    });

    h.h_graph = Graph::from_edges(static_cast<VertexId>(h.h_vertex_count()), h_edges);
    return h;
}

MethodPlan plan_extension(std::uint32_t l, std::optional<std::uint32_t> l1_opt) {
    if (l < 4) throw contract_error("extension method needs l >= 4");
    std::uint32_t l1 = l1_opt.value_or(l > 5 ? l - 3 : 2);
    if (l1 < 2 || l1 > l - 2) throw contract_error("extension split needs 2 <= l1 <= l-2");
    MethodPlan plan;
    plan.l = l;
    plan.split = {l1, l - l1};
    plan.multiplicity = binomial(l, l1);
    return plan;
}

MethodPlan plan_triangle_method(std::uint32_t l) {
    if (l < 3) throw contract_error("triangle method needs l >= 3");
    MethodPlan plan;
    plan.l = l;
    const std::uint32_t j = l / 3;
    const std::uint32_t i = l % 3;
    plan.split = {j, i};
    if (i == 0) {
        // (3j)! / ((j!)^3 3!) == C(3j,j) * C(2j,j) / 6
        BigCount mult = binomial(3 * j, j);
        BigCount c2 = binomial(2 * j, j);
        if (mult.saturated || c2.saturated || mult.value > u128_max() / c2.value) {
            mult.saturated = true;
            mult.value = u128_max();
        } else {
            mult.value = mult.value * c2.value / 6;
        }
        plan.multiplicity = mult;
    } else {
        plan.multiplicity.value = 1;  // detection-only splits carry no counting divisor
    }
    return plan;
}

MethodResult extension_count(const Graph& g, std::uint32_t l, std::optional<std::uint32_t> l1,
                             const Budgets& budgets, unsigned threads) {
    MethodResult r;
    r.plan = plan_extension(l, l1);
    const auto [split_l1, split_l2] = r.plan.split;

    std::vector<VertexId> copies;
    r.work += list_k_cliques(g, split_l1, [&](std::span<const VertexId> c) {
        copies.insert(copies.end(), c.begin(), c.end());
    });
    const std::size_t n_copies = copies.size() / split_l1;

    BigCount total;
    if (threads <= 1 || n_copies < 2 * threads) {
        total = extension_partial(g, copies, split_l1, split_l2, budgets, 0, n_copies, r.work);
    } else {
        std::size_t chunk = (n_copies + threads - 1) / threads;
        std::vector<BigCount> partial((n_copies + chunk - 1) / chunk);
        std::vector<WorkCounter> works(partial.size());
        std::vector<std::exception_ptr> errors(partial.size());
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < partial.size(); ++w) {
            pool.emplace_back([&, w] {
                try {
                    partial[w] = extension_partial(g, copies, split_l1, split_l2, budgets,
                                                   w * chunk, std::min((w + 1) * chunk, n_copies),
                                                   works[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
        for (std::size_t w = 0; w < partial.size(); ++w) {
            total.add(partial[w]);
            r.work += works[w];
        }
    }

    r.pre_division_total = total;
    if (total.saturated) {
        r.count = total;
        return r;
    }
    if (total.value % r.plan.multiplicity.value != 0)
        throw consistency_error("extension pre-division total " + u128_to_string(total.value) +
                                " not divisible by C(l,l1)=" +
                                u128_to_string(r.plan.multiplicity.value));
    r.count.value = total.value / r.plan.multiplicity.value;
    return r;
}

MethodResult triangle_method_count(const Graph& g, std::uint32_t l, const Budgets& budgets) {
    if (l < 3 || l % 3 != 0) throw contract_error("triangle-method counting needs l divisible by 3");
    MethodResult r;
    r.plan = plan_triangle_method(l);
    const std::uint32_t j = r.plan.split.first;

    AuxiliaryGraph h = build_auxiliary_graph(g, j, budgets);
    auto [h_triangles, work] = count_triangles(h.h_graph);
    r.work = work;
    r.pre_division_total.value = h_triangles;
    if (r.plan.multiplicity.saturated) throw capacity_error("triangle-method multiplicity overflow");
    if (r.pre_division_total.value % r.plan.multiplicity.value != 0)
        throw consistency_error("H-triangle total " + std::to_string(h_triangles) +
                                " not divisible by multiplicity " +
                                u128_to_string(r.plan.multiplicity.value));
    r.count.value = r.pre_division_total.value / r.plan.multiplicity.value;
    return r;
}

std::optional<std::vector<VertexId>> triangle_method_detect(const Graph& g, std::uint32_t l,
                                                            const Budgets& budgets) {
    if (l < 3) throw contract_error("triangle-method detection needs l >= 3");
    const std::uint32_t j = l / 3;
    const std::uint32_t i = l % 3;
    if (l > g.vertex_count()) return std::nullopt;
    if (i == 0) return detect_3j(g, j, budgets);

    // iterate K_i copies, restrict to their common neighborhood, recurse on 3j
    std::optional<std::vector<VertexId>> found;
    auto try_copy = [&](std::span<const VertexId> copy) -> bool {
        std::vector<VertexId> common = common_neighborhood(g, copy);
        if (common.size() < 3ull * j) return false;
        Graph sub = induced_subgraph(g, common);
        auto sub_witness = detect_3j(sub, j, budgets);
        if (!sub_witness) return false;
        std::vector<VertexId> witness(copy.begin(), copy.end());
        for (VertexId local : *sub_witness) witness.push_back(common[local]);
        std::sort(witness.begin(), witness.end());
        if (!is_clique(g, witness)) throw consistency_error("detection witness not a clique");
        found = std::move(witness);
        return true;
    };

    if (i == 1) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            VertexId copy[1] = {v};
            if (try_copy(copy)) return found;
        }
    } else {
        bool done = false;
        g.for_each_edge([&](VertexId u, VertexId v) {
            if (done) return;
            VertexId copy[2] = {u, v};
            done = try_copy(copy);
        });
        if (done) return found;
    }
    return std::nullopt;
}

std::optional<std::vector<VertexId>> edge_count_detect(const Graph& g, std::uint32_t j,
                                                       const Budgets& budgets) {
    if (j == 0) throw contract_error("edge-count detection needs j >= 1");
    if (static_cast<std::uint64_t>(4) * j > g.vertex_count()) return std::nullopt;
    AuxiliaryGraph h = build_auxiliary_graph(g, j, budgets);
    const Graph& hg = h.h_graph;

    std::optional<std::vector<VertexId>> found;
    bool done = false;
    hg.for_each_edge([&](VertexId a, VertexId b) {
        if (done) return;
        auto na = hg.neighbors(a);
        auto nb = hg.neighbors(b);
        std::vector<VertexId> common;
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                              std::back_inserter(common));
        // an H-edge inside the common neighborhood completes a K_4 in H
        for (VertexId c : common) {
            auto nc = hg.neighbors(c);
            std::vector<VertexId> deeper;
            std::set_intersection(nc.begin(), nc.end(), common.begin(), common.end(),
                                  std::back_inserter(deeper));
            auto dit = std::upper_bound(deeper.begin(), deeper.end(), c);
            if (dit == deeper.end()) continue;
            std::vector<VertexId> witness =
                assemble_members(h, std::array<VertexId, 4>{a, b, c, *dit});
            if (!is_clique(g, witness)) throw consistency_error("edge-count witness not a clique");
            found = std::move(witness);
            done = true;
            return;
        }
    });
    return found;
}

}  // namespace tricl
