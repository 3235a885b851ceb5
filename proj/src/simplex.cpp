#include "morsekit/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsekit {

Simplex::Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

Simplex::Simplex(std::vector<Vertex> vs) : v_(std::move(vs)) {
    if (v_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
        throw std::invalid_argument("simplex has a repeated vertex");
}

Simplex Simplex::from_sorted(std::vector<Vertex> vs) {
    Simplex s;
    s.v_ = std::move(vs);
    return s;
}

Simplex Simplex::from_sorted(std::span<const Vertex> vs) {
    return from_sorted(std::vector<Vertex>(vs.begin(), vs.end()));
}

Simplex Simplex::facet(std::size_t i) const {
    std::vector<Vertex> out;
    out.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
        if (j != i) out.push_back(v_[j]);
    return from_sorted(std::move(out));
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Simplex::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

std::string Simplex::to_string(char sep) const {
    std::string out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
}

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Vertex v : s) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

}  // namespace morsekit
