#include "morsekit/reduction.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace morsekit {

namespace {

struct UnionFind {
    std::vector<Vertex> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<Vertex>(i);
    }
    Vertex find(Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    // the smaller root wins, so every class is labelled by its smallest member
    void unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

Simplex edge_simplex(Edge e) { return Simplex{e.first, e.second}; }

Simplex triangle_simplex(const Triangle& t) { return Simplex(std::vector<Vertex>(t.begin(), t.end())); }

// Simplex ids of every hat in G.complex.
void index_hats(GadgetComplex& G) {
    const SimplicialComplex& K = G.complex;
    for (HatInstance& h : G.hats) {
        h.triangles.clear();
        h.gammas.clear();
        h.blocked.clear();
        for (const Triangle& t : h.shape.triangles())
            h.triangles.push_back(K.id_of(triangle_simplex({h.map(t[0]), h.map(t[1]), h.map(t[2])})));
        for (const Triangle& t : h.shape.gammas())
            h.gammas.push_back(K.id_of(triangle_simplex({h.map(t[0]), h.map(t[1]), h.map(t[2])})));
        for (const Edge& e : h.shape.residual_edges())
            h.blocked.push_back(K.id_of(edge_simplex({h.map(e.first), h.map(e.second)})));
    }
}

}  // namespace

const char* role_name(HatRole r) {
    switch (r) {
        case HatRole::Input: return "input";
        case HatRole::Component1: return "component1";
        case HatRole::Component2: return "component2";
        case HatRole::Component3: return "component3";
        case HatRole::OutputCopy: return "output-copy";
    }
    return "?";
}

std::size_t GadgetComplex::hat(std::size_t gate, HatRole role, std::size_t block) const {
    for (std::size_t h : hats_of_gate.at(gate))
        if (hats[h].role == role && hats[h].block == block) return h;
    throw std::out_of_range("no such hat");
}

SimplexId GadgetComplex::feedback_edge(std::size_t input_gate) const {
    const Edge e = hats[hat(input_gate, HatRole::Input, 0)].s_edges.at(0);
    return complex.id_of(edge_simplex(e));
}

GadgetComplex build_kprime(const MonotoneCircuit& C) {
    if (!C.is_fanin2()) throw std::invalid_argument("every and/or gate needs exactly two inputs; normalize first");
    if (C.gate(C.output()).kind == GateKind::Input) throw std::invalid_argument("output must be an and/or gate");
    if (!C.successors(C.output()).empty()) throw std::invalid_argument("output gate must not feed other gates");
    if (!C.all_gates_reach_output()) throw std::invalid_argument("every gate must lie on a path to the output");

    GadgetComplex G;
    G.circuit = C;
    G.n = C.size();
    const int n = static_cast<int>(G.n);
    G.hats_of_gate.assign(G.n, {});

    Vertex next_vertex = 0;
    auto add_hat = [&](std::size_t g, HatRole role, std::size_t block, int m, int ell) {
        HatInstance h;
        h.gate = g;
        h.role = role;
        h.block = block;
        h.shape = DunceHat(m, ell, next_vertex);
        next_vertex += static_cast<Vertex>(h.shape.vertex_count());
        G.hats.push_back(std::move(h));
        G.hats_of_gate[g].push_back(G.hats.size() - 1);
    };
    // t-edges a predecessor hands back to each successor copy
    auto feedback_load = [&](std::size_t p) { return C.gate(p).kind == GateKind::Input ? 1 : 2 * n; };

    for (std::size_t g : C.topological_order()) {
        const Gate& gate = C.gate(g);
        const int theta = static_cast<int>(C.successors(g).size());
        if (gate.kind == GateKind::Input) {
            add_hat(g, HatRole::Input, 0, 1, theta * n);
            continue;
        }
        const int feedback = feedback_load(gate.inputs[0]) + feedback_load(gate.inputs[1]);
        const int m = gate.kind == GateKind::And ? 1 : 2;
        for (std::size_t j = 0; j < G.n; ++j) {
            if (g == C.output()) {
                add_hat(g, HatRole::OutputCopy, j, m, feedback);
            } else {
                add_hat(g, HatRole::Component1, j, 2, 1);
                add_hat(g, HatRole::Component2, j, 2, 1);
                add_hat(g, HatRole::Component3, j, m, theta * n + feedback);
            }
        }
    }

    std::vector<std::size_t> next_t(G.hats.size(), 0);
    auto glue = [&](std::size_t src, std::size_t dst, std::size_t s_index) {
        const std::size_t t = next_t[src]++;
        if (t >= static_cast<std::size_t>(G.hats[src].shape.ell())) throw std::logic_error("hat ran out of t-edges");
        if (s_index >= static_cast<std::size_t>(G.hats[dst].shape.m())) throw std::logic_error("no such s-edge");
        G.gluings.push_back({src, t, dst, s_index});
    };
    auto top_hat = [&](std::size_t q, std::size_t j) {
        return G.hat(q, q == C.output() ? HatRole::OutputCopy : HatRole::Component3, j);
    };

    for (std::size_t q : C.topological_order()) {
        const Gate& gq = C.gate(q);
        if (gq.kind == GateKind::Input) continue;
        const bool is_and = gq.kind == GateKind::And;
        if (q != C.output())
            for (std::size_t j = 0; j < G.n; ++j) {
                glue(G.hat(q, HatRole::Component1, j), G.hat(q, HatRole::Component3, j), 0);
                glue(G.hat(q, HatRole::Component2, j), G.hat(q, HatRole::Component3, j), is_and ? 0 : 1);
            }
        for (std::size_t slot = 0; slot < 2; ++slot) {
            const std::size_t p = gq.inputs[slot];
            const bool p_input = C.gate(p).kind == GateKind::Input;
            // input edges of q
            for (std::size_t j = 0; j < G.n; ++j) {
                std::size_t dst, s;
                if (q == C.output()) {
                    dst = G.hat(q, HatRole::OutputCopy, j);
                    s = is_and ? 0 : slot;
                } else {
                    dst = G.hat(q, slot == 0 ? HatRole::Component1 : HatRole::Component2, j);
                    s = 0;
                }
                if (p_input) glue(G.hat(p, HatRole::Input, 0), dst, s);
                else
                    for (std::size_t k = 0; k < G.n; ++k) glue(G.hat(p, HatRole::Component3, k), dst, s);
            }
            // feedback edges of p
            for (std::size_t j = 0; j < G.n; ++j) {
                const std::size_t src = top_hat(q, j);
                if (p_input) {
                    glue(src, G.hat(p, HatRole::Input, 0), 0);
                } else {
                    for (std::size_t k = 0; k < G.n; ++k) {
                        glue(src, G.hat(p, HatRole::Component1, k), 1);
                        glue(src, G.hat(p, HatRole::Component2, k), 1);
                    }
                }
            }
        }
    }
    for (std::size_t h = 0; h < G.hats.size(); ++h)
        if (next_t[h] != static_cast<std::size_t>(G.hats[h].shape.ell()))
            throw std::logic_error("hat has unglued t-edges");

    UnionFind uf(next_vertex);
    for (const Gluing& gl : G.gluings) {
        const Edge t = G.hats[gl.source].shape.t_edges()[gl.t_index];
        const Edge s = G.hats[gl.target].shape.s_edges()[gl.s_index];
        uf.unite(t.first, s.first);
        uf.unite(t.second, s.second);
    }

    std::vector<Simplex> triangles;
    for (HatInstance& h : G.hats) {
        h.final_label.resize(h.shape.vertex_count());
        for (std::size_t i = 0; i < h.final_label.size(); ++i)
            h.final_label[i] = uf.find(h.shape.offset() + static_cast<Vertex>(i));
        for (const Edge& e : h.shape.s_edges()) h.s_edges.emplace_back(h.map(e.first), h.map(e.second));
        for (const Edge& e : h.shape.t_edges()) h.t_edges.emplace_back(h.map(e.first), h.map(e.second));
        for (const Triangle& t : h.shape.triangles()) {
            const Triangle u{h.map(t[0]), h.map(t[1]), h.map(t[2])};
            if (u[0] == u[1] || u[0] == u[2] || u[1] == u[2]) throw std::logic_error("gluing collapsed a triangle");
            triangles.push_back(triangle_simplex(u));
        }
        for (const Edge& e : h.shape.stem_edges()) G.stem.push_back(normalized({h.map(e.first), h.map(e.second)}));
    }
    std::sort(triangles.begin(), triangles.end());
    if (std::adjacent_find(triangles.begin(), triangles.end()) != triangles.end())
        throw std::logic_error("gluing identified two triangles");
    std::sort(G.stem.begin(), G.stem.end());
    G.stem.erase(std::unique(G.stem.begin(), G.stem.end()), G.stem.end());
    G.basepoint = G.stem.front().first;

    G.kprime = SimplicialComplex::from_simplices(triangles);
    G.complex = G.kprime;
    index_hats(G);
    return G;
}

std::vector<FillingCycle> filling_cycles(const std::vector<Edge>& edges, Vertex first_apex) {
    std::map<Vertex, std::set<Vertex>> adj;
    std::set<Edge> E;
    for (Edge e : edges) {
        e = normalized(e);
        if (e.first == e.second) throw std::invalid_argument("loop edge");
        E.insert(e);
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    auto drop = [&](Edge e) {
        E.erase(e);
        adj[e.first].erase(e.second);
        adj[e.second].erase(e.first);
    };
    std::vector<FillingCycle> out;
    Vertex apex = first_apex;
    while (true) {
        std::vector<Vertex> leaves;
        for (const auto& [v, nb] : adj)
            if (nb.size() == 1) leaves.push_back(v);
        while (!leaves.empty()) {
            const Vertex v = leaves.back();
            leaves.pop_back();
            if (adj[v].size() != 1) continue;
            const Vertex w = *adj[v].begin();
            drop(normalized({v, w}));
            if (adj[w].size() == 1) leaves.push_back(w);
        }
        if (E.empty()) break;
        const Edge e = *E.rbegin();
        drop(e);
        const auto [u, v] = e;
        std::unordered_map<Vertex, std::size_t> dist{{v, 0}};
        std::queue<Vertex> bfs;
        bfs.push(v);
        while (!bfs.empty() && !dist.count(u)) {
            const Vertex x = bfs.front();
            bfs.pop();
            for (Vertex w : adj[x])
                if (dist.emplace(w, dist[x] + 1).second) bfs.push(w);
        }
        if (!dist.count(u)) continue;  // a bridge between two cyclic parts
        // walk back from u, always to the smallest neighbour one step closer to v
        std::vector<Vertex> path{u};
        while (path.back() != v) {
            const Vertex x = path.back();
            for (Vertex w : adj[x]) {
                auto it = dist.find(w);
                if (it != dist.end() && it->second + 1 == dist[x]) {
                    path.push_back(w);
                    break;
                }
            }
        }
        FillingCycle c;
        c.vertices = {u, v};
        for (std::size_t i = path.size() - 2; i >= 1; --i) c.vertices.push_back(path[i]);
        c.pivot = e;
        c.apex = apex++;
        out.push_back(std::move(c));
    }
    return out;
}

void fill_cycles(GadgetComplex& G) {
    const auto labels = G.kprime.vertex_labels();
    G.cycles = filling_cycles(G.stem, labels.back() + 1);
    std::vector<Simplex> gens = G.kprime.maximal_simplices();
    for (const FillingCycle& c : G.cycles) {
        const std::size_t k = c.vertices.size();
        for (std::size_t j = 0; j < k; ++j) gens.push_back(Simplex{c.vertices[j], c.vertices[(j + 1) % k], c.apex});
    }
    G.complex = SimplicialComplex::from_simplices(gens);
    index_hats(G);
}

GadgetComplex compile_reduction(const MonotoneCircuit& C) {
    GadgetComplex G = build_kprime(C);
    fill_cycles(G);
    return G;
}

std::string gadget_metadata_json(const GadgetComplex& G) {
    using nlohmann::json;
    auto edge_list = [](const std::vector<Edge>& es) {
        json a = json::array();
        for (const auto& e : es) a.push_back({e.first, e.second});
        return a;
    };
    json gates = json::array();
    for (std::size_t g = 0; g < G.n; ++g) {
        const Gate& gate = G.circuit.gate(g);
        json ins = json::array();
        for (std::size_t p : gate.inputs) ins.push_back(G.circuit.gate(p).name);
        gates.push_back({{"name", gate.name},
                         {"kind", gate.kind == GateKind::Input ? "input" : (gate.kind == GateKind::And ? "and" : "or")},
                         {"inputs", ins},
                         {"hats", G.hats_of_gate[g]}});
    }
    json hats = json::array();
    for (std::size_t h = 0; h < G.hats.size(); ++h) {
        const HatInstance& H = G.hats[h];
        json gammas = json::array();
        for (SimplexId t : H.gammas) {
            auto vs = G.complex.vertices_of(t);
            gammas.push_back(std::vector<Vertex>(vs.begin(), vs.end()));
        }
        hats.push_back({{"id", h},
                        {"gate", G.circuit.gate(H.gate).name},
                        {"role", role_name(H.role)},
                        {"block", H.block},
                        {"m", H.shape.m()},
                        {"ell", H.shape.ell()},
                        {"s_edges", edge_list(H.s_edges)},
                        {"t_edges", edge_list(H.t_edges)},
                        {"gammas", gammas}});
    }
    json gluings = json::array();
    for (const Gluing& g : G.gluings)
        gluings.push_back({{"source", g.source}, {"t_index", g.t_index}, {"target", g.target}, {"s_index", g.s_index}});
    json cycles = json::array();
    for (const FillingCycle& c : G.cycles)
        cycles.push_back({{"vertices", c.vertices}, {"pivot", {c.pivot.first, c.pivot.second}}, {"apex", c.apex}});
    json f_vector = json::array();
    for (int k = 0; k <= G.complex.dimension(); ++k) f_vector.push_back(G.complex.count(k));
    json doc = {{"gates", gates},
                {"output", G.circuit.gate(G.circuit.output()).name},
                {"hats", hats},
                {"gluings", gluings},
                {"stem", edge_list(G.stem)},
                {"cycles", cycles},
                {"basepoint", G.basepoint},
                {"f_vector", f_vector}};
    return doc.dump(2) + "\n";
}

}  // namespace morsekit
