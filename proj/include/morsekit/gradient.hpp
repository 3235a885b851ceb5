#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morsekit/complex.hpp"

namespace morsekit {

/// A partial matching on the Hasse diagram, stored as a partner table.
///
/// Every simplex is either paired with exactly one facet or cofacet, or
/// critical. Whether the matching is acyclic is checked by validate_gradient.
class DiscreteGradient {
public:
    DiscreteGradient() = default;
    explicit DiscreteGradient(std::size_t n) : partner_(n, kNoSimplex) {}

    std::size_t size() const { return partner_.size(); }
    SimplexId partner(SimplexId s) const { return partner_[s]; }
    bool is_critical(SimplexId s) const { return partner_[s] == kNoSimplex; }

    /// Throws std::logic_error if either simplex is already matched.
    void pair(SimplexId a, SimplexId b);
    void unpair(SimplexId s);

    /// Pairs as (lower, upper); needs the complex to tell dimensions apart.
    std::vector<std::pair<SimplexId, SimplexId>> pairs(const SimplicialComplex& K) const;
    std::vector<SimplexId> critical() const;

    friend bool operator==(const DiscreteGradient&, const DiscreteGradient&) = default;

private:
    std::vector<SimplexId> partner_;
};

/// Unchecked pair/critical lists, e.g. as read from a file.
struct Matching {
    std::vector<std::pair<SimplexId, SimplexId>> pairs;  // (lower, upper)
    std::vector<SimplexId> critical;
};

struct Violation {
    enum class Kind { NotAFacet, DoubleMatched, Uncovered, DirectedCycle };
    Kind kind;
    std::vector<SimplexId> simplices;  ///< offending simplices; for a cycle, the cycle itself
    std::string message;
};

const char* to_string(Violation::Kind k);

/// Number of critical simplices per dimension, indices 0..dim K.
std::vector<std::size_t> morse_vector(const SimplicialComplex& K, const DiscreteGradient& V);
std::size_t total_critical(const std::vector<std::size_t>& mv);

/// Layer-by-layer acyclicity test: a directed cycle in the modified Hasse
/// diagram only uses two adjacent dimensions, so each (k, k+1) layer is
/// searched on its own.
std::optional<Violation> validate_gradient(const SimplicialComplex& K, const DiscreteGradient& V);

/// Cycle search in the layer between dimensions k and k+1 only. A found cycle
/// lists k-simplices and their matched cofacets alternately.
std::optional<Violation> find_layer_cycle(const SimplicialComplex& K, const DiscreteGradient& V, int k);

/// Checks that the lists form a partition into facet pairs and singletons,
/// then validates the resulting gradient. Returns it when everything holds.
std::optional<Violation> validate_matching(const SimplicialComplex& K, const Matching& M,
                                           DiscreteGradient* out = nullptr);

/// Slow reference: builds the whole modified Hasse digraph and searches it.
/// Kept to cross-check the layered test.
std::optional<Violation> validate_gradient_reference(const SimplicialComplex& K, const DiscreteGradient& V);

inline bool is_valid_gradient(const SimplicialComplex& K, const DiscreteGradient& V) {
    return !validate_gradient(K, V).has_value();
}

std::string describe(const SimplicialComplex& K, const Violation& v);

}  // namespace morsekit
