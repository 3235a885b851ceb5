#include "morsekit/erasability.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <queue>
#include <stdexcept>

#include "morsekit/errors.hpp"
#include "morsekit/homology.hpp"
#include "morsekit/morse_ops.hpp"
#include "morsekit/parallel.hpp"

namespace morsekit {

EraseKernel::EraseKernel(const SimplicialComplex& K) {
    if (K.dimension() < 2) {
        edge_start_.assign(K.count(1) + 1, 0);
        return;
    }
    first_triangle_ = K.first_id(2);
    const SimplexId e0 = K.first_id(1);
    const std::size_t T = K.count(2), E = K.count(1);
    tri_edges_.resize(3 * T);
    edge_start_.assign(E + 1, 0);
    for (std::size_t t = 0; t < T; ++t) {
        auto f = K.facets(first_triangle_ + static_cast<SimplexId>(t));
        for (int i = 0; i < 3; ++i) {
            tri_edges_[3 * t + static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] - e0;
            ++edge_start_[f[static_cast<std::size_t>(i)] - e0 + 1];
        }
    }
    for (std::size_t e = 0; e < E; ++e) edge_start_[e + 1] += edge_start_[e];
    edge_tris_.resize(edge_start_[E]);
    std::vector<std::uint32_t> fill(edge_start_.begin(), edge_start_.end() - 1);
    for (std::size_t t = 0; t < T; ++t)
        for (int i = 0; i < 3; ++i) edge_tris_[fill[tri_edges_[3 * t + static_cast<std::size_t>(i)]]++] = static_cast<std::uint32_t>(t);
}

bool EraseKernel::erasable_without(std::span<const std::uint32_t> removed, Workspace& ws,
                                   std::vector<std::uint32_t>* core) const {
    const std::size_t T = triangles(), E = edge_start_.size() - 1;
    ws.count.resize(E);
    for (std::size_t e = 0; e < E; ++e) ws.count[e] = edge_start_[e + 1] - edge_start_[e];
    ws.alive.assign(T, 1);
    std::size_t alive = T;
    for (std::uint32_t t : removed) {
        if (!ws.alive[t]) continue;
        ws.alive[t] = 0;
        --alive;
        for (int i = 0; i < 3; ++i) --ws.count[tri_edges_[3 * t + static_cast<std::size_t>(i)]];
    }
    return run(ws, alive, core);
}

bool EraseKernel::erasable_subset(std::span<const std::uint32_t> present, Workspace& ws) const {
    const std::size_t T = triangles(), E = edge_start_.size() - 1;
    ws.count.assign(E, 0);
    ws.alive.assign(T, 0);
    for (std::uint32_t t : present) {
        ws.alive[t] = 1;
        for (int i = 0; i < 3; ++i) ++ws.count[tri_edges_[3 * t + static_cast<std::size_t>(i)]];
    }
    return run(ws, present.size(), nullptr);
}

bool EraseKernel::run(Workspace& ws, std::size_t alive, std::vector<std::uint32_t>* core) const {
    const std::size_t E = edge_start_.size() - 1;
    ws.stack.clear();
    for (std::size_t e = 0; e < E; ++e)
        if (ws.count[e] == 1) ws.stack.push_back(static_cast<std::uint32_t>(e));
    while (!ws.stack.empty() && alive > 0) {
        std::uint32_t e = ws.stack.back();
        ws.stack.pop_back();
        if (ws.count[e] != 1) continue;
        std::uint32_t t = 0;
        for (std::uint32_t k = edge_start_[e]; k < edge_start_[e + 1]; ++k)
            if (ws.alive[edge_tris_[k]]) {
                t = edge_tris_[k];
                break;
            }
        ws.alive[t] = 0;
        --alive;
        for (int i = 0; i < 3; ++i) {
            std::uint32_t f = tri_edges_[3 * t + static_cast<std::size_t>(i)];
            if (--ws.count[f] == 1) ws.stack.push_back(f);
        }
    }
    if (core) {
        core->clear();
        for (std::uint32_t t = 0; t < ws.alive.size(); ++t)
            if (ws.alive[t]) core->push_back(t);
    }
    return alive == 0;
}

EraseOutcome greedy_erase(const SimplicialComplex& K, std::span<const SimplexId> removed) {
    EraseOutcome out;
    if (K.dimension() < 2) {
        out.erasable = true;
        return out;
    }
    std::vector<unsigned char> alive(K.size(), 0);
    std::vector<std::uint32_t> count(K.size(), 0);
    for (SimplexId t = K.first_id(2); t < K.end_id(2); ++t) alive[t] = 1;
    for (SimplexId t : removed) alive[t] = 0;
    for (SimplexId t = K.first_id(2); t < K.end_id(2); ++t)
        if (alive[t])
            for (SimplexId e : K.facets(t)) ++count[e];
    std::priority_queue<SimplexId, std::vector<SimplexId>, std::greater<>> free_edges;
    for (SimplexId e = K.first_id(1); e < K.end_id(1); ++e)
        if (count[e] == 1) free_edges.push(e);
    while (!free_edges.empty()) {
        SimplexId e = free_edges.top();
        free_edges.pop();
        if (count[e] != 1) continue;
        SimplexId t = kNoSimplex;
        for (SimplexId c : K.cofacets(e))
            if (alive[c]) {
                t = c;
                break;
            }
        out.pairs.emplace_back(e, t);
        alive[t] = 0;
        count[e] = 0;
        for (SimplexId f : K.facets(t))
            if (f != e && --count[f] == 1) free_edges.push(f);
    }
    for (SimplexId t = K.first_id(2); t < K.end_id(2); ++t)
        if (alive[t]) out.remaining.push_back(t);
    out.erasable = out.remaining.empty();
    return out;
}

namespace {

std::vector<SimplexId> to_ids(const EraseKernel& ker, const std::vector<std::uint32_t>& local) {
    std::vector<SimplexId> out;
    for (auto t : local) out.push_back(ker.triangle_id(t));
    return out;
}

// Depth-first search below a fixed prefix: every further triangle is taken from
// the core left by the prefix and must exceed the last prefix element.
bool pruned_branch(const EraseKernel& ker, std::vector<std::uint32_t>& prefix, std::size_t remaining,
                   EraseKernel::Workspace& ws, std::size_t& tests) {
    std::vector<std::uint32_t> core;
    ++tests;
    if (ker.erasable_without(prefix, ws, &core)) return true;
    if (remaining == 0) return false;
    const std::uint32_t last = prefix.empty() ? 0 : prefix.back() + 1;
    for (std::uint32_t t : core) {
        if (t < last) continue;
        prefix.push_back(t);
        if (pruned_branch(ker, prefix, remaining - 1, ws, tests)) return true;
        prefix.pop_back();
    }
    return false;
}

// All k-subsets starting with `first`, lexicographic.
bool plain_branch(const EraseKernel& ker, std::vector<std::uint32_t>& prefix, std::size_t k,
                  EraseKernel::Workspace& ws, std::size_t& tests) {
    if (prefix.size() == k) {
        ++tests;
        return ker.erasable_without(prefix, ws);
    }
    const std::uint32_t T = static_cast<std::uint32_t>(ker.triangles());
    for (std::uint32_t t = prefix.back() + 1; t < T; ++t) {
        prefix.push_back(t);
        if (plain_branch(ker, prefix, k, ws, tests)) return true;
        prefix.pop_back();
    }
    return false;
}

// Tries every first element in parallel; keeps the witness with the smallest
// first element so the answer matches the serial lexicographic order.
template <class Branch>
std::optional<std::vector<std::uint32_t>> search_level(const std::vector<std::uint32_t>& firsts, int jobs,
                                                       std::size_t& tests, Branch branch) {
    std::atomic<std::size_t> best{firsts.size()};
    std::vector<std::uint32_t> best_witness;
    std::size_t total_tests = 0;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel num_threads(jobs) reduction(+ : total_tests)
    {
        EraseKernel::Workspace ws;
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            if (static_cast<std::size_t>(i) >= best.load()) continue;
            std::vector<std::uint32_t> prefix{firsts[static_cast<std::size_t>(i)]};
            std::size_t local = 0;
            bool ok = branch(prefix, ws, local);
            total_tests += local;
            if (ok) {
#pragma omp critical(morsekit_er_best)
                {
                    if (static_cast<std::size_t>(i) < best.load()) {
                        best.store(static_cast<std::size_t>(i));
                        best_witness = prefix;
                    }
                }
            }
        }
    }
    tests += total_tests;
    if (best.load() == firsts.size()) return std::nullopt;
    return best_witness;
}

}  // namespace

ErSearchResult er_search(const SimplicialComplex& K, const ErSearchOptions& opts) {
    ErSearchResult res;
    EraseKernel ker(K);
    EraseKernel::Workspace ws;
    std::vector<std::uint32_t> core;
    ++res.tests;
    if (ker.erasable_without({}, ws, &core)) {
        res.er = 0;
        return res;
    }
    std::size_t start = 1;
    if (opts.betti_bound) {
        auto b = betti_mod2(K);
        if (b.size() > 2) start = std::max<std::size_t>(start, b[2]);
    }
    const int jobs = resolve_jobs(opts.jobs);
    std::vector<std::uint32_t> all(ker.triangles());
    for (std::uint32_t t = 0; t < all.size(); ++t) all[t] = t;
    for (std::size_t k = start; k <= opts.k_max; ++k) {
        std::optional<std::vector<std::uint32_t>> w;
        if (opts.prune) {
            w = search_level(core, jobs, res.tests, [&](std::vector<std::uint32_t>& prefix, EraseKernel::Workspace& wsp, std::size_t& tests) {
                return pruned_branch(ker, prefix, k - 1, wsp, tests);
            });
        } else {
            w = search_level(all, jobs, res.tests, [&](std::vector<std::uint32_t>& prefix, EraseKernel::Workspace& wsp, std::size_t& tests) {
                return plain_branch(ker, prefix, k, wsp, tests);
            });
        }
        if (w) {
            res.er = w->size();
            res.witness = to_ids(ker, *w);
            return res;
        }
    }
    return res;
}

ErSearchResult er_search_serial(const SimplicialComplex& K, std::size_t k_max) {
    ErSearchResult res;
    EraseKernel ker(K);
    EraseKernel::Workspace ws;
    const std::uint32_t T = static_cast<std::uint32_t>(ker.triangles());
    for (std::size_t k = 0; k <= k_max && k <= T; ++k) {
        std::vector<std::uint32_t> idx(k);
        for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            ++res.tests;
            if (ker.erasable_without(idx, ws)) {
                res.er = k;
                res.witness = to_ids(ker, idx);
                return res;
            }
            // next combination in lexicographic order
            std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == T - k + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return res;
}

std::vector<SimplexId> greedy_erase_witness(const SimplicialComplex& K) {
    std::vector<SimplexId> critical;
    while (true) {
        auto outcome = greedy_erase(K, critical);
        if (outcome.erasable) return critical;
        critical.push_back(*std::min_element(outcome.remaining.begin(), outcome.remaining.end()));
    }
}

DiscreteGradient gradient_from_erasure(const SimplicialComplex& K, std::span<const SimplexId> critical_triangles) {
    auto outcome = greedy_erase(K, critical_triangles);
    if (!outcome.erasable) throw std::invalid_argument("complex minus the given triangles is not erasable");
    DiscreteGradient V(K.size());
    for (auto [e, t] : outcome.pairs) V.pair(e, t);
    pair_spanning_tree(K, V, K.vertex_labels().front());
    return V;
}

OptimalGradient opt_min_morse_2complex(const SimplicialComplex& K, std::size_t k_max, int jobs) {
    if (K.dimension() > 2) throw NotTwoComplexError("complex has dimension above 2");
    if (!K.is_connected()) throw NotTwoComplexError("complex is not connected");
    ErSearchOptions opts;
    opts.k_max = k_max;
    opts.jobs = jobs;
    auto res = er_search(K, opts);
    if (!res.er) throw SearchLimitError("no erasing set of at most " + std::to_string(k_max) + " triangles");
    OptimalGradient out;
    out.er = *res.er;
    out.gradient = gradient_from_erasure(K, res.witness);
    out.morse = morse_vector(K, out.gradient);
    out.total = total_critical(out.morse);
    return out;
}

}  // namespace morsekit
