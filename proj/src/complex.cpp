#include "morsekit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace morsekit {

namespace {

// Sorts the fixed-stride records of `flat` lexicographically and drops duplicates.
void sort_unique_level(std::vector<Vertex>& flat, std::size_t stride) {
    const std::size_t n = flat.size() / stride;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto rec = [&](std::size_t i) { return std::span<const Vertex>(flat.data() + i * stride, stride); };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lex_less(rec(a), rec(b)); });
    std::vector<Vertex> out;
    out.reserve(flat.size());
    for (std::size_t k = 0; k < n; ++k) {
        auto r = rec(idx[k]);
        if (k > 0 && std::equal(r.begin(), r.end(), out.end() - static_cast<std::ptrdiff_t>(stride))) continue;
        out.insert(out.end(), r.begin(), r.end());
    }
    flat.swap(out);
}

std::optional<std::size_t> find_in_level(const std::vector<Vertex>& flat, std::size_t stride,
                                         std::span<const Vertex> key) {
    std::size_t lo = 0, hi = flat.size() / stride;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        std::span<const Vertex> r(flat.data() + mid * stride, stride);
        if (lex_less(r, key)) lo = mid + 1;
        else hi = mid;
    }
    if (lo < flat.size() / stride && std::equal(key.begin(), key.end(), flat.begin() + static_cast<std::ptrdiff_t>(lo * stride)))
        return lo;
    return std::nullopt;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::span<const Simplex> generators) {
    int top = -1;
    for (const auto& s : generators) top = std::max(top, s.dim());
    std::vector<std::vector<Vertex>> levels(static_cast<std::size_t>(top + 1));
    for (const auto& s : generators) {
        if (s.empty()) continue;
        auto& L = levels[static_cast<std::size_t>(s.dim())];
        L.insert(L.end(), s.begin(), s.end());
    }
    for (int k = top; k >= 0; --k) {
        auto& L = levels[static_cast<std::size_t>(k)];
        const std::size_t stride = static_cast<std::size_t>(k) + 1;
        sort_unique_level(L, stride);
        if (k == 0) break;
        auto& below = levels[static_cast<std::size_t>(k) - 1];
        below.reserve(below.size() + L.size());
        for (std::size_t i = 0; i < L.size(); i += stride)
            for (std::size_t drop = 0; drop < stride; ++drop)
                for (std::size_t j = 0; j < stride; ++j)
                    if (j != drop) below.push_back(L[i + j]);
    }
    SimplicialComplex K;
    K.levels_ = std::move(levels);
    K.index();
    return K;
}

SimplicialComplex SimplicialComplex::from_simplices(std::initializer_list<Simplex> generators) {
    return from_simplices(std::span<const Simplex>(generators.begin(), generators.size()));
}

SimplicialComplex SimplicialComplex::from_sorted_levels(std::vector<std::vector<Vertex>> levels, bool check) {
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    if (check) {
        for (std::size_t k = 0; k < levels.size(); ++k) {
            const std::size_t stride = k + 1;
            if (levels[k].size() % stride != 0) throw std::invalid_argument("level size not a multiple of its stride");
            for (std::size_t i = 0; i < levels[k].size(); i += stride) {
                for (std::size_t j = 1; j < stride; ++j)
                    if (levels[k][i + j - 1] >= levels[k][i + j]) throw std::invalid_argument("simplex not strictly increasing");
                if (i > 0) {
                    std::span<const Vertex> prev(levels[k].data() + i - stride, stride), cur(levels[k].data() + i, stride);
                    if (!lex_less(prev, cur)) throw std::invalid_argument("level not strictly sorted");
                }
            }
        }
    }
    SimplicialComplex K;
    K.levels_ = std::move(levels);
    K.index();  // throws if a facet is missing
    return K;
}

void SimplicialComplex::index() {
    const std::size_t L = levels_.size();
    offsets_.assign(L + 1, 0);
    for (std::size_t k = 0; k < L; ++k) offsets_[k + 1] = offsets_[k] + static_cast<SimplexId>(levels_[k].size() / (k + 1));
    facet_levels_.assign(L, {});
    for (std::size_t k = 1; k < L; ++k) {
        const std::size_t stride = k + 1;
        const std::size_t n = levels_[k].size() / stride;
        auto& F = facet_levels_[k];
        F.resize(n * stride);
        std::vector<Vertex> buf(k);
        for (std::size_t i = 0; i < n; ++i) {
            const Vertex* s = levels_[k].data() + i * stride;
            for (std::size_t drop = 0; drop < stride; ++drop) {
                std::size_t w = 0;
                for (std::size_t j = 0; j < stride; ++j)
                    if (j != drop) buf[w++] = s[j];
                auto pos = find_in_level(levels_[k - 1], k, buf);
                if (!pos) throw std::invalid_argument("complex is not closed under faces");
                F[i * stride + drop] = offsets_[k - 1] + static_cast<SimplexId>(*pos);
            }
        }
    }
    const std::size_t N = size();
    cof_start_.assign(N + 1, 0);
    for (std::size_t k = 1; k < L; ++k)
        for (SimplexId f : facet_levels_[k]) ++cof_start_[f + 1];
    for (std::size_t i = 0; i < N; ++i) cof_start_[i + 1] += cof_start_[i];
    cof_.assign(cof_start_[N], 0);
    std::vector<std::size_t> fill(cof_start_.begin(), cof_start_.end() - 1);
    for (std::size_t k = 1; k < L; ++k) {
        const std::size_t stride = k + 1;
        for (std::size_t i = 0; i < facet_levels_[k].size(); ++i) {
            SimplexId upper = offsets_[k] + static_cast<SimplexId>(i / stride);
            cof_[fill[facet_levels_[k][i]]++] = upper;
        }
    }
}

std::size_t SimplicialComplex::count(int k) const {
    if (k < 0 || k > dimension()) return 0;
    return offsets_[static_cast<std::size_t>(k) + 1] - offsets_[static_cast<std::size_t>(k)];
}

int SimplicialComplex::dim_of(SimplexId id) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
    return static_cast<int>(it - offsets_.begin()) - 1;
}

std::span<const Vertex> SimplicialComplex::vertices_of(SimplexId id) const {
    const int k = dim_of(id);
    const std::size_t stride = static_cast<std::size_t>(k) + 1;
    return {levels_[static_cast<std::size_t>(k)].data() + (id - offsets_[static_cast<std::size_t>(k)]) * stride, stride};
}

std::optional<SimplexId> SimplicialComplex::find(std::span<const Vertex> key) const {
    if (key.empty() || key.size() > levels_.size()) return std::nullopt;
    const std::size_t k = key.size() - 1;
    auto pos = find_in_level(levels_[k], key.size(), key);
    if (!pos) return std::nullopt;
    return offsets_[k] + static_cast<SimplexId>(*pos);
}

SimplexId SimplicialComplex::id_of(const Simplex& s) const {
    auto id = find(s);
    if (!id) throw std::out_of_range("simplex {" + s.to_string() + "} not in complex");
    return *id;
}

std::span<const SimplexId> SimplicialComplex::facets(SimplexId id) const {
    const int k = dim_of(id);
    if (k <= 0) return {};
    const std::size_t stride = static_cast<std::size_t>(k) + 1;
    return {facet_levels_[static_cast<std::size_t>(k)].data() + (id - offsets_[static_cast<std::size_t>(k)]) * stride, stride};
}

std::span<const SimplexId> SimplicialComplex::cofacets(SimplexId id) const {
    return {cof_.data() + cof_start_[id], cof_start_[id + 1] - cof_start_[id]};
}

std::span<const Vertex> SimplicialComplex::vertex_labels() const {
    if (levels_.empty()) return {};
    return levels_[0];
}

std::optional<SimplexId> SimplicialComplex::vertex_id(Vertex v) const {
    const Vertex key[1] = {v};
    return find(key);
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(count(k));
    return chi;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (SimplexId id = 0; id < size(); ++id)
        if (cofacets(id).empty()) out.push_back(simplex(id));
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) { return lex_less(a.vertices(), b.vertices()); });
    return out;
}

bool SimplicialComplex::is_connected() const {
    const std::size_t nv = count(0);
    if (nv == 0) return false;
    std::vector<SimplexId> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](SimplexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = nv;
    for (SimplexId e = first_id(1); e < end_id(1); ++e) {
        auto f = facets(e);
        SimplexId a = root(f[0]), b = root(f[1]);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            --comps;
        }
    }
    return comps == 1;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
    std::vector<std::vector<Vertex>> levels(levels_.begin(), levels_.begin() + std::min<std::ptrdiff_t>(k + 1, static_cast<std::ptrdiff_t>(levels_.size())));
    return from_sorted_levels(std::move(levels), false);
}

}  // namespace morsekit
