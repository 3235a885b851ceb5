#include "morsekit/dunce_hat.hpp"

#include <stdexcept>

namespace morsekit {

DunceHat::DunceHat(int m, int ell, Vertex offset) : m_(m), ell_(ell), offset_(offset) {
    if (m != 1 && m != 2) throw std::invalid_argument("dunce hat needs m in {1, 2}");
    if (ell < 1) throw std::invalid_argument("dunce hat needs ell >= 1");
}

Vertex DunceHat::corner(int label) const {
    if (label < 1 || label > 8 || (label == 8 && m_ != 2)) throw std::out_of_range("no such corner");
    return offset_ + static_cast<Vertex>(label - 1);
}

Vertex DunceHat::diamond(int j, int k) const {
    if (j < 1 || j > ell_) throw std::out_of_range("no such diamond");
    return offset_ + static_cast<Vertex>(base() + 6 * static_cast<std::size_t>(j - 1) + static_cast<std::size_t>(k));
}

std::vector<Triangle> DunceHat::triangles() const {
    auto v = [&](int l) { return corner(l); };
    std::vector<Triangle> T;
    // ring between the square and the diamond 4-5-6-7
    if (m_ == 1) {
        T.push_back({v(1), v(3), v(4)});
    } else {
        T.push_back({v(3), v(8), v(4)});
        T.push_back({v(8), v(1), v(4)});
    }
    const int ring[][3] = {{3, 4, 5}, {3, 5, 2}, {2, 5, 1}, {1, 5, 6}, {1, 6, 2},
                           {2, 6, 3}, {6, 3, 7}, {3, 7, 2}, {2, 7, 1}, {7, 1, 4}};
    for (const auto& t : ring) T.push_back({v(t[0]), v(t[1]), v(t[2])});
    // fans from 4 (above the chain) and 6 (below it)
    T.push_back({v(4), v(5), c(1)});
    T.push_back({v(6), v(5), c(1)});
    for (int j = 1; j <= ell_; ++j) {
        T.push_back({v(4), c(j), a(j)});
        T.push_back({v(4), a(j), d(j)});
        T.push_back({v(6), c(j), b(j)});
        T.push_back({v(6), b(j), d(j)});
        const Vertex next = j < ell_ ? c(j + 1) : v(7);
        T.push_back({v(4), d(j), next});
        T.push_back({v(6), d(j), next});
        // the diamond a-d-b-c with y above z on its axis
        T.push_back({a(j), c(j), y(j)});
        T.push_back({a(j), d(j), y(j)});
        T.push_back({c(j), y(j), z(j)});
        T.push_back({d(j), y(j), z(j)});
        T.push_back({c(j), z(j), b(j)});
        T.push_back({d(j), z(j), b(j)});
    }
    return T;
}

std::vector<Edge> DunceHat::s_edges() const {
    if (m_ == 1) return {{corner(3), corner(1)}};
    return {{corner(8), corner(3)}, {corner(8), corner(1)}};
}

std::vector<Edge> DunceHat::t_edges() const {
    std::vector<Edge> out;
    for (int j = 1; j <= ell_; ++j) out.emplace_back(y(j), z(j));
    return out;
}

std::vector<Triangle> DunceHat::gammas() const {
    if (m_ == 1) return {{corner(1), corner(3), corner(4)}};
    return {{corner(3), corner(8), corner(4)}, {corner(8), corner(1), corner(4)}};
}

std::vector<Edge> DunceHat::stem_edges() const {
    std::vector<Edge> out{{corner(1), corner(2)}, {corner(2), corner(3)}, {corner(2), corner(6)}};
    for (int k = 1; k <= ell_; ++k) {
        out.emplace_back(corner(6), b(k));
        out.emplace_back(b(k), z(k));
    }
    return out;
}

std::vector<Edge> DunceHat::residual_edges() const {
    std::vector<Edge> out = stem_edges();
    out.emplace_back(corner(5), corner(6));
    out.emplace_back(corner(6), corner(7));
    for (int k = 1; k <= ell_; ++k) {
        out.emplace_back(corner(6), c(k));
        out.emplace_back(corner(6), d(k));
        out.emplace_back(z(k), y(k));
        out.emplace_back(y(k), a(k));
    }
    return out;
}

SimplicialComplex DunceHat::complex() const {
    std::vector<Simplex> gens;
    for (const auto& t : triangles()) gens.emplace_back(std::vector<Vertex>(t.begin(), t.end()));
    return SimplicialComplex::from_simplices(gens);
}

std::string DunceHat::label(Vertex v) const {
    if (v < offset_ || v >= offset_ + vertex_count()) return "?";
    const std::size_t local = v - offset_;
    if (local < base()) return std::to_string(local + 1);
    const std::size_t k = local - base();
    static const char names[] = {'a', 'b', 'c', 'd', 'y', 'z'};
    return std::string(1, names[k % 6]) + std::to_string(k / 6 + 1);
}

}  // namespace morsekit
