#include "morsekit/gradient.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsekit {

void DiscreteGradient::pair(SimplexId a, SimplexId b) {
    if (partner_[a] != kNoSimplex || partner_[b] != kNoSimplex)
        throw std::logic_error("simplex already matched");
    partner_[a] = b;
    partner_[b] = a;
}

void DiscreteGradient::unpair(SimplexId s) {
    SimplexId p = partner_[s];
    if (p == kNoSimplex) return;
    partner_[s] = kNoSimplex;
    partner_[p] = kNoSimplex;
}

std::vector<std::pair<SimplexId, SimplexId>> DiscreteGradient::pairs(const SimplicialComplex& K) const {
    std::vector<std::pair<SimplexId, SimplexId>> out;
    for (SimplexId s = 0; s < partner_.size(); ++s) {
        SimplexId p = partner_[s];
        if (p != kNoSimplex && K.dim_of(s) < K.dim_of(p)) out.emplace_back(s, p);
    }
    return out;
}

std::vector<SimplexId> DiscreteGradient::critical() const {
    std::vector<SimplexId> out;
    for (SimplexId s = 0; s < partner_.size(); ++s)
        if (partner_[s] == kNoSimplex) out.push_back(s);
    return out;
}

const char* to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::NotAFacet: return "not-a-facet";
        case Violation::Kind::DoubleMatched: return "double-matched";
        case Violation::Kind::Uncovered: return "uncovered";
        case Violation::Kind::DirectedCycle: return "directed-cycle";
    }
    return "?";
}

std::vector<std::size_t> morse_vector(const SimplicialComplex& K, const DiscreteGradient& V) {
    std::vector<std::size_t> mv(static_cast<std::size_t>(std::max(K.dimension(), 0)) + 1, 0);
    if (K.size() == 0) return {};
    for (int k = 0; k <= K.dimension(); ++k)
        for (SimplexId s = K.first_id(k); s < K.end_id(k); ++s)
            if (V.is_critical(s)) ++mv[static_cast<std::size_t>(k)];
    return mv;
}

std::size_t total_critical(const std::vector<std::size_t>& mv) {
    std::size_t t = 0;
    for (auto x : mv) t += x;
    return t;
}

namespace {

bool is_facet(const SimplicialComplex& K, SimplexId lower, SimplexId upper) {
    auto f = K.facets(upper);
    return std::find(f.begin(), f.end(), lower) != f.end();
}

std::optional<Violation> check_pairs(const SimplicialComplex& K, const DiscreteGradient& V) {
    if (V.size() != K.size()) throw std::invalid_argument("gradient size does not match complex");
    for (SimplexId s = 0; s < V.size(); ++s) {
        SimplexId p = V.partner(s);
        if (p == kNoSimplex) continue;
        if (p >= V.size() || V.partner(p) != s)
            return Violation{Violation::Kind::DoubleMatched, {s, p}, "partner table is not symmetric"};
        SimplexId lo = std::min(s, p), hi = std::max(s, p);
        if (K.dim_of(hi) != K.dim_of(lo) + 1 || !is_facet(K, lo, hi))
            return Violation{Violation::Kind::NotAFacet, {lo, hi}, "paired simplices are not facet and cofacet"};
    }
    return std::nullopt;
}

}  // namespace

// Iterative DFS over the k-simplices of one layer. Edge sigma -> sigma' whenever
// sigma is matched with a (k+1)-simplex tau and sigma' is another facet of tau.
std::optional<Violation> find_layer_cycle(const SimplicialComplex& K, const DiscreteGradient& V, int k) {
    const SimplexId lo = K.first_id(k), hi = K.end_id(k);
    std::vector<unsigned char> color(hi - lo, 0);  // 0 new, 1 on stack, 2 done
    struct Frame {
        SimplexId node;
        std::size_t next;
    };
    std::vector<Frame> stack;
    auto up = [&](SimplexId s) -> SimplexId {
        SimplexId p = V.partner(s);
        return (p != kNoSimplex && p > s) ? p : kNoSimplex;  // ids grow with dimension
    };
    for (SimplexId start = lo; start < hi; ++start) {
        if (color[start - lo] || up(start) == kNoSimplex) continue;
        stack.push_back({start, 0});
        color[start - lo] = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            SimplexId tau = up(fr.node);
            auto facets = tau == kNoSimplex ? std::span<const SimplexId>{} : K.facets(tau);
            if (fr.next >= facets.size()) {
                color[fr.node - lo] = 2;
                stack.pop_back();
                continue;
            }
            SimplexId nxt = facets[fr.next++];
            if (nxt == fr.node) continue;
            auto& c = color[nxt - lo];
            if (c == 1) {
                Violation v{Violation::Kind::DirectedCycle, {}, "gradient path returns to its start"};
                auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.node == nxt; });
                for (; it != stack.end(); ++it) {
                    v.simplices.push_back(it->node);
                    v.simplices.push_back(up(it->node));
                }
                return v;
            }
            if (c == 0 && up(nxt) != kNoSimplex) {
                c = 1;
                stack.push_back({nxt, 0});
            } else if (c == 0) {
                c = 2;
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> validate_gradient(const SimplicialComplex& K, const DiscreteGradient& V) {
    if (auto v = check_pairs(K, V)) return v;
    for (int k = 0; k < K.dimension(); ++k)
        if (auto v = find_layer_cycle(K, V, k)) return v;
    return std::nullopt;
}

std::optional<Violation> validate_matching(const SimplicialComplex& K, const Matching& M, DiscreteGradient* out) {
    const std::size_t n = K.size();
    std::vector<unsigned char> seen(n, 0);
    DiscreteGradient V(n);
    for (auto [a, b] : M.pairs) {
        if (a >= n || b >= n) throw std::out_of_range("simplex id out of range");
        SimplexId lo = std::min(a, b), hi = std::max(a, b);
        if (a == b || K.dim_of(hi) != K.dim_of(lo) + 1 || !is_facet(K, lo, hi))
            return Violation{Violation::Kind::NotAFacet, {a, b}, "paired simplices are not facet and cofacet"};
        for (SimplexId s : {a, b}) {
            if (seen[s]) return Violation{Violation::Kind::DoubleMatched, {s}, "simplex appears more than once"};
            seen[s] = 1;
        }
        V.pair(lo, hi);
    }
    for (SimplexId c : M.critical) {
        if (c >= n) throw std::out_of_range("simplex id out of range");
        if (seen[c]) return Violation{Violation::Kind::DoubleMatched, {c}, "simplex is both paired and critical"};
        seen[c] = 1;
    }
    for (SimplexId s = 0; s < n; ++s)
        if (!seen[s]) return Violation{Violation::Kind::Uncovered, {s}, "simplex is neither paired nor critical"};
    if (auto v = validate_gradient(K, V)) return v;
    if (out) *out = std::move(V);
    return std::nullopt;
}

std::optional<Violation> validate_gradient_reference(const SimplicialComplex& K, const DiscreteGradient& V) {
    if (auto v = check_pairs(K, V)) return v;
    const std::size_t n = K.size();
    // Arcs: matched pairs point up, every other facet relation points down.
    std::vector<std::vector<SimplexId>> adj(n);
    for (SimplexId t = 0; t < n; ++t)
        for (SimplexId f : K.facets(t)) {
            if (V.partner(f) == t) adj[f].push_back(t);
            else adj[t].push_back(f);
        }
    std::vector<unsigned char> color(n, 0);
    std::vector<SimplexId> path;
    std::vector<std::size_t> next;
    for (SimplexId s = 0; s < n; ++s) {
        if (color[s]) continue;
        path = {s};
        next = {0};
        color[s] = 1;
        while (!path.empty()) {
            SimplexId u = path.back();
            if (next.back() == adj[u].size()) {
                color[u] = 2;
                path.pop_back();
                next.pop_back();
                continue;
            }
            SimplexId w = adj[u][next.back()++];
            if (color[w] == 1) {
                auto it = std::find(path.begin(), path.end(), w);
                return Violation{Violation::Kind::DirectedCycle, std::vector<SimplexId>(it, path.end()),
                                 "directed cycle in the modified Hasse diagram"};
            }
            if (color[w] == 0) {
                color[w] = 1;
                path.push_back(w);
                next.push_back(0);
            }
        }
    }
    return std::nullopt;
}

std::string describe(const SimplicialComplex& K, const Violation& v) {
    std::string out = std::string(to_string(v.kind)) + ": " + v.message;
    for (SimplexId s : v.simplices) {
        out += " {";
        if (s < K.size()) out += K.simplex(s).to_string();
        else out += "?";
        out += "}";
    }
    return out;
}

}  // namespace morsekit
