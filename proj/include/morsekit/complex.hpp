#pragma once

#include <optional>
#include <span>
#include <vector>

#include "morsekit/simplex.hpp"

namespace morsekit {

/// Finite abstract simplicial complex with a fixed simplex numbering.
///
/// Simplex ids are dense and ordered by (dimension, lexicographic vertex list),
/// so every id range of one dimension is sorted. Facet and cofacet incidences
/// are precomputed; the complex is immutable once built.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closure of the given simplices.
    static SimplicialComplex from_simplices(std::span<const Simplex> generators);
    static SimplicialComplex from_simplices(std::initializer_list<Simplex> generators);

    /// `levels[k]` holds the k-simplices back to back (k+1 vertices each), strictly
    /// increasing in lexicographic order. The levels must be closed under faces;
    /// `check` verifies this and throws std::invalid_argument otherwise.
    static SimplicialComplex from_sorted_levels(std::vector<std::vector<Vertex>> levels, bool check = true);

    std::size_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }
    int dimension() const { return static_cast<int>(levels_.size()) - 1; }
    std::size_t count(int k) const;
    SimplexId first_id(int k) const { return offsets_[static_cast<std::size_t>(k)]; }
    SimplexId end_id(int k) const { return offsets_[static_cast<std::size_t>(k) + 1]; }
    int dim_of(SimplexId id) const;

    std::span<const Vertex> vertices_of(SimplexId id) const;
    Simplex simplex(SimplexId id) const { return Simplex::from_sorted(vertices_of(id)); }

    std::optional<SimplexId> find(std::span<const Vertex> sorted_vertices) const;
    std::optional<SimplexId> find(const Simplex& s) const { return find(s.vertices()); }
    SimplexId id_of(const Simplex& s) const;  ///< throws std::out_of_range if absent
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    /// Facet ids; entry i is the facet missing the i-th vertex.
    std::span<const SimplexId> facets(SimplexId id) const;
    /// Cofacet ids in increasing order.
    std::span<const SimplexId> cofacets(SimplexId id) const;

    /// Vertex labels in increasing order (the 0-simplices).
    std::span<const Vertex> vertex_labels() const;
    /// Id of the 0-simplex with the given label, if present.
    std::optional<SimplexId> vertex_id(Vertex v) const;

    long euler_characteristic() const;
    std::vector<Simplex> maximal_simplices() const;
    bool is_connected() const;
    SimplicialComplex skeleton(int k) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.levels_ == b.levels_;
    }

private:
    void index();

    std::vector<std::vector<Vertex>> levels_;
    std::vector<SimplexId> offsets_;
    std::vector<std::vector<SimplexId>> facet_levels_;
    std::vector<std::size_t> cof_start_;
    std::vector<SimplexId> cof_;
};

}  // namespace morsekit
