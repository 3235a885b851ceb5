#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace morsekit {

using Vertex = std::uint32_t;
using SimplexId = std::uint32_t;

inline constexpr SimplexId kNoSimplex = ~SimplexId{0};

/// A simplex stored as a strictly increasing list of vertex labels.
///
/// Ordering is by dimension first, then lexicographic on the vertex lists.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<Vertex> vs);
    /// Sorts the input. Throws std::invalid_argument on repeated or missing vertices.
    explicit Simplex(std::vector<Vertex> vs);

    /// Trusts the caller: `vs` must already be strictly increasing.
    static Simplex from_sorted(std::vector<Vertex> vs);
    static Simplex from_sorted(std::span<const Vertex> vs);

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    Vertex operator[](std::size_t i) const { return v_[i]; }
    std::span<const Vertex> vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    /// The facet obtained by dropping the vertex at position `i`.
    Simplex facet(std::size_t i) const;
    bool is_face_of(const Simplex& other) const;
    bool contains(Vertex v) const;

    std::string to_string(char sep = ',') const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

private:
    std::vector<Vertex> v_;
};

/// Lexicographic comparison of two vertex lists, ignoring dimension.
bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace morsekit
