#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "morsekit/complex.hpp"

namespace morsekit {

using Edge = std::pair<Vertex, Vertex>;
using Triangle = std::array<Vertex, 3>;

/// Triangulated dunce hat with m free boundary edges and ell gadget diamonds.
///
/// Vertex names: corners 1..7 (8 splits the top edge when
/// m = 2) and, per diamond j = 1..ell, the vertices a_j b_j c_j d_j y_j z_j.
/// All returned vertices are offset + local index.
class DunceHat {
public:
    DunceHat(int m, int ell, Vertex offset = 0);

    int m() const { return m_; }
    int ell() const { return ell_; }
    Vertex offset() const { return offset_; }
    std::size_t vertex_count() const { return base() + 6 * static_cast<std::size_t>(ell_); }

    Vertex corner(int label) const;  ///< 1..7, or 8 when m = 2
    Vertex a(int j) const { return diamond(j, 0); }
    Vertex b(int j) const { return diamond(j, 1); }
    Vertex c(int j) const { return diamond(j, 2); }
    Vertex d(int j) const { return diamond(j, 3); }
    Vertex y(int j) const { return diamond(j, 4); }
    Vertex z(int j) const { return diamond(j, 5); }

    std::vector<Triangle> triangles() const;
    /// Free edges s_1..s_m, oriented: (3,1) for m = 1, (8,3) and (8,1) for m = 2.
    std::vector<Edge> s_edges() const;
    /// t_j = (y_j, z_j).
    std::vector<Edge> t_edges() const;
    /// Gamma_i, the triangle on s_i.
    std::vector<Triangle> gammas() const;
    /// {1,2}, {2,3}, {2,6} and {6,b_k}, {b_k,z_k} for every k.
    std::vector<Edge> stem_edges() const;
    /// Edges left by a full collapse that starts at a free s-edge, besides the
    /// extra edges at 4 (and 8): the stem plus {5,6}, {6,7}, {6,c_k}, {6,d_k},
    /// {z_k,y_k}, {y_k,a_k}.
    std::vector<Edge> residual_edges() const;

    SimplicialComplex complex() const;
    std::string label(Vertex v) const;

private:
    std::size_t base() const { return m_ == 2 ? 8 : 7; }
    Vertex diamond(int j, int k) const;

    int m_, ell_;
    Vertex offset_;
};

}  // namespace morsekit
