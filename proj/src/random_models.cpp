#include "morsekit/random_models.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "morsekit/rng.hpp"

namespace morsekit {

const char* model_name(ModelKind k) {
    switch (k) {
        case ModelKind::Clique: return "clique";
        case ModelKind::LinialMeshulam: return "lm";
        case ModelKind::CostaFarber: return "cf";
    }
    return "?";
}

ModelKind parse_model_name(const std::string& s) {
    if (s == "clique") return ModelKind::Clique;
    if (s == "lm") return ModelKind::LinialMeshulam;
    if (s == "cf") return ModelKind::CostaFarber;
    throw std::invalid_argument("unknown model '" + s + "'");
}

std::vector<double> level_probabilities(const ModelSpec& spec) {
    const std::size_t n = spec.n;
    if (spec.kind == ModelKind::LinialMeshulam && (spec.d < 1 || static_cast<std::size_t>(spec.d) >= std::max<std::size_t>(n, 1)))
        throw std::invalid_argument("LM dimension must lie in [1, n-1]");
    std::vector<double> p(std::max<std::size_t>(n, 1), 0.0);
    p[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        switch (spec.kind) {
            case ModelKind::Clique: p[k] = k == 1 ? spec.p : 1.0; break;
            case ModelKind::LinialMeshulam:
                p[k] = static_cast<int>(k) < spec.d ? 1.0 : (static_cast<int>(k) == spec.d ? spec.p : 0.0);
                break;
            case ModelKind::CostaFarber: p[k] = k <= spec.probs.size() ? spec.probs[k - 1] : 0.0; break;
        }
    }
    for (double x : p)
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("probabilities must lie in [0, 1]");
    return p;
}

SimplicialComplex sample_complex(const ModelSpec& spec, std::uint64_t seed) {
    if (spec.n == 0) return {};
    if (spec.n > (std::size_t{1} << 20)) throw std::invalid_argument("too many vertices");
    const auto p = level_probabilities(spec);
    const std::size_t n = spec.n, words = (n + 63) / 64;
    Rng rng(seed);
    std::vector<std::vector<Vertex>> levels(1);
    for (Vertex v = 0; v < n; ++v) levels[0].push_back(v);
    std::vector<std::uint64_t> adj(n * words, 0);
    std::vector<std::uint64_t> cand(words);
    const std::size_t cap = spec.max_dim < 0 ? n - 1 : std::min<std::size_t>(n - 1, static_cast<std::size_t>(spec.max_dim));
    bool faces_automatic = true;  // every clique of size <= k is present
    for (std::size_t k = 1; k <= cap; ++k) {
        if (p[k] == 0.0) break;
        const auto& prev = levels[k - 1];
        std::vector<Vertex> cur;
        std::vector<Vertex> buf(k + 1), facet(k);
        const std::size_t count_prev = prev.size() / k;
        for (std::size_t i = 0; i < count_prev; ++i) {
            const Vertex* tau = prev.data() + i * k;
            // candidates v > max(tau) adjacent to every vertex of tau
            std::fill(cand.begin(), cand.end(), ~std::uint64_t{0});
            if (k >= 2)
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t w = 0; w < words; ++w) cand[w] &= adj[tau[j] * words + w];
            const Vertex start = tau[k - 1] + 1;
            for (std::size_t w = start / 64; w < words; ++w) {
                std::uint64_t bits = cand[w];
                if (w == start / 64) bits &= ~std::uint64_t{0} << (start % 64);
                while (bits) {
                    const Vertex v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                    bits &= bits - 1;
                    if (v >= n) break;
                    std::copy(tau, tau + k, buf.begin());
                    buf[k] = v;
                    if (k >= 3 && !faces_automatic) {
                        bool ok = true;
                        for (std::size_t drop = 0; drop < k && ok; ++drop) {
                            std::size_t m = 0;
                            for (std::size_t j = 0; j <= k; ++j)
                                if (j != drop) facet[m++] = buf[j];
                            std::size_t lo = 0, hi = count_prev;
                            while (lo < hi) {
                                std::size_t mid = (lo + hi) / 2;
                                if (lex_less({prev.data() + mid * k, k}, facet)) lo = mid + 1;
                                else hi = mid;
                            }
                            ok = lo < count_prev && std::equal(facet.begin(), facet.end(), prev.begin() + static_cast<std::ptrdiff_t>(lo * k));
                        }
                        if (!ok) continue;
                    }
                    const bool keep = p[k] >= 1.0 || rng.bernoulli(p[k]);
                    if (keep) cur.insert(cur.end(), buf.begin(), buf.end());
                }
            }
        }
        if (k == 1)
            for (std::size_t i = 0; i < cur.size(); i += 2) {
                adj[cur[i] * words + cur[i + 1] / 64] |= std::uint64_t{1} << (cur[i + 1] % 64);
                adj[cur[i + 1] * words + cur[i] / 64] |= std::uint64_t{1} << (cur[i] % 64);
            }
        if (k >= 2 && p[k] < 1.0) faces_automatic = false;
        if (cur.empty()) break;
        levels.push_back(std::move(cur));
    }
    return SimplicialComplex::from_sorted_levels(std::move(levels), false);
}

namespace {

double binom(double n, double k) {
    if (k < 0 || k > n) return 0.0;
    return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

double level_p(const std::vector<double>& p, std::size_t k) { return k < p.size() ? p[k] : 0.0; }

}  // namespace

double apparent_pairs_bound(const ModelSpec& spec, int r) {
    const auto p = level_probabilities(spec);
    double prod = 1.0;
    for (int l = 1; l <= r + 1; ++l) prod *= std::pow(level_p(p, static_cast<std::size_t>(l)), binom(r + 1, l));
    return (r + 1) / ((static_cast<double>(spec.n) - r) * prod);
}

double random_face_bound(const ModelSpec& spec, int r) {
    const auto p = level_probabilities(spec);
    double prod = 1.0;
    for (int j = 1; j <= r; ++j) prod *= std::pow(level_p(p, static_cast<std::size_t>(j)), binom(r, j));
    const double n = static_cast<double>(spec.n);
    // C(n, r+2) / C(n, r+1) = (n - r - 1) / (r + 2)
    return binom(r + 2, 2) * (n - r - 1) / (r + 2) * prod;
}

}  // namespace morsekit
