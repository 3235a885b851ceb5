#pragma once

#include <string>
#include <vector>

#include "morsekit/circuit.hpp"
#include "morsekit/dunce_hat.hpp"
#include "morsekit/gradient.hpp"

namespace morsekit {

/// What a dunce hat stands for in the compiled complex.
enum class HatRole {
    Input,       ///< the single hat of an input gate
    Component1,  ///< ordinary gate block: hat fed by the first predecessor
    Component2,  ///< ordinary gate block: hat fed by the second predecessor
    Component3,  ///< ordinary gate block: hat combining the two above
    OutputCopy,  ///< one of the n copies for the output gate
};

const char* role_name(HatRole r);

struct HatInstance {
    std::size_t gate = 0;
    HatRole role = HatRole::Input;
    std::size_t block = 0;
    DunceHat shape{1, 1};            ///< local layout, offset = first pre-merge vertex
    std::vector<Vertex> final_label; ///< local vertex index -> vertex of the compiled complex

    std::vector<Edge> s_edges;       ///< oriented, final labels
    std::vector<Edge> t_edges;       ///< final labels
    std::vector<SimplexId> triangles;///< ids in the compiled complex
    std::vector<SimplexId> gammas;   ///< ids of Gamma_1..Gamma_m
    std::vector<SimplexId> blocked;  ///< residual edges: never used as free faces when erasing this hat

    Vertex map(Vertex pre_merge) const { return final_label[pre_merge - shape.offset()]; }
};

/// t-edge `t_index` of hat `source` is identified with s-edge `s_index` of hat `target`.
struct Gluing {
    std::size_t source = 0, t_index = 0, target = 0, s_index = 0;
};

/// Cycle of the stem graph filled by a cone: vertices v^1..v^k with pivot
/// {v^1, v^2}, the largest edge of the cycle, and a fresh apex.
struct FillingCycle {
    std::vector<Vertex> vertices;
    Edge pivot;
    Vertex apex = 0;
};

struct GadgetComplex {
    MonotoneCircuit circuit;
    std::size_t n = 0;  ///< number of gates
    std::vector<HatInstance> hats;
    std::vector<std::vector<std::size_t>> hats_of_gate;
    std::vector<Gluing> gluings;
    std::vector<Edge> stem;  ///< edges of the stem graph, sorted
    std::vector<FillingCycle> cycles;
    SimplicialComplex kprime;   ///< glued dunce hats
    SimplicialComplex complex;  ///< kprime with every stem cycle filled
    Vertex basepoint = 0;       ///< smallest stem vertex

    /// Hat of a gate by role and block (copy) index.
    std::size_t hat(std::size_t gate, HatRole role, std::size_t block) const;
    /// The edge of an input gate that is critical when the input is set.
    SimplexId feedback_edge(std::size_t input_gate) const;
};

/// Glues the dunce hats of a fan-in-2 circuit. Requires the output gate to be
/// an and/or gate without successors and every gate to reach the output.
GadgetComplex build_kprime(const MonotoneCircuit& C);

/// Pivoted cycle basis of a graph: repeatedly prune leaves, take the largest
/// edge, record the shortest cycle through it (lexicographically first among
/// ties) and delete that edge. Apexes are numbered from `first_apex`.
std::vector<FillingCycle> filling_cycles(const std::vector<Edge>& edges, Vertex first_apex);

/// Cones off the cycle basis of the stem graph.
void fill_cycles(GadgetComplex& G);

/// build_kprime followed by fill_cycles.
GadgetComplex compile_reduction(const MonotoneCircuit& C);

/// Gradient with Morse vector (1, w, w) for a satisfying assignment of weight w.
/// Throws NotSatisfyingError otherwise.
DiscreteGradient assignment_to_gradient(const GadgetComplex& G, const Assignment& a);

/// Reads a satisfying assignment off any valid gradient of the compiled complex:
/// all ones when at least n triangles are critical, else the inputs whose hat
/// carries a critical triangle. Its weight w obeys 2w <= m_0 + m_1 + m_2 - 1.
Assignment gradient_to_assignment(const GadgetComplex& G, const DiscreteGradient& V);

/// Removes the listed triangles from the compiled complex, then greedily
/// collapses hat `hat` alone. True when every triangle of the hat goes.
/// Throws std::out_of_range for an unknown hat.
bool erasable_check_after_free(const GadgetComplex& G, std::size_t hat, const std::vector<SimplexId>& removed = {});

/// Hat registry, gluings and filling cycles as JSON with sorted keys.
std::string gadget_metadata_json(const GadgetComplex& G);

}  // namespace morsekit
