#include "morsekit/approx.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>

#include "morsekit/erasability.hpp"
#include "morsekit/errors.hpp"
#include "morsekit/homology.hpp"
#include "morsekit/parallel.hpp"
#include "morsekit/rng.hpp"

namespace morsekit {

std::vector<std::vector<SimplexId>> approx_partition(const SimplicialComplex& K, std::size_t parts,
                                                     std::optional<std::uint64_t> shuffle_seed) {
    std::vector<SimplexId> tris;
    for (SimplexId t = K.first_id(2); t < K.end_id(2); ++t) tris.push_back(t);
    if (shuffle_seed) {
        Rng rng(*shuffle_seed);
        for (std::size_t i = tris.size(); i > 1; --i) std::swap(tris[i - 1], tris[rng.below(i)]);
    }
    std::vector<std::vector<SimplexId>> out(parts);
    const std::size_t n = tris.size(), base = n / parts, extra = n % parts;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        std::size_t len = base + (i < extra ? 1 : 0);
        out[i].assign(tris.begin() + static_cast<std::ptrdiff_t>(pos), tris.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
    }
    return out;
}

namespace {

std::vector<std::uint32_t> gather(const SimplicialComplex& K, const std::vector<std::vector<SimplexId>>& parts,
                                  std::uint64_t mask) {
    std::vector<std::uint32_t> present;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (mask >> i & 1U)
            for (SimplexId t : parts[i]) present.push_back(t - K.first_id(2));
    return present;
}

// Masks of b bits with the given popcount, increasing.
std::vector<std::uint64_t> masks_with_popcount(std::size_t b, std::size_t c) {
    std::vector<std::uint64_t> out;
    if (c == 0) return {0};
    std::uint64_t m = (std::uint64_t{1} << c) - 1;
    const std::uint64_t limit = std::uint64_t{1} << b;
    while (m < limit) {
        out.push_back(m);
        std::uint64_t lo = m & (~m + 1), r = m + lo;  // Gosper's hack
        m = (((r ^ m) >> 2) / lo) | r;
    }
    return out;
}

}  // namespace

std::uint64_t best_erasable_mask_serial(const SimplicialComplex& K, const std::vector<std::vector<SimplexId>>& parts) {
    EraseKernel ker(K);
    EraseKernel::Workspace ws;
    for (std::size_t c = parts.size() + 1; c-- > 0;)
        for (std::uint64_t m : masks_with_popcount(parts.size(), c))
            if (ker.erasable_subset(gather(K, parts, m), ws)) return m;
    return 0;
}

std::uint64_t best_erasable_mask(const SimplicialComplex& K, const std::vector<std::vector<SimplexId>>& parts, int jobs) {
    EraseKernel ker(K);
    jobs = resolve_jobs(jobs);
    for (std::size_t c = parts.size() + 1; c-- > 0;) {
        auto masks = masks_with_popcount(parts.size(), c);
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(masks.size());
        std::ptrdiff_t best = n;
#pragma omp parallel num_threads(jobs) reduction(min : best)
        {
            EraseKernel::Workspace ws;
#pragma omp for schedule(dynamic, 1)
            for (std::ptrdiff_t i = 0; i < n; ++i)
                if (i < best && ker.erasable_subset(gather(K, parts, masks[static_cast<std::size_t>(i)]), ws)) best = std::min(best, i);
        }
        if (best < n) return masks[static_cast<std::size_t>(best)];
    }
    return 0;
}

ApproxResult approx_morse_matching(const SimplicialComplex& K, const ApproxOptions& opts) {
    if (K.dimension() != 2) throw NotTwoComplexError("approximation needs a 2-dimensional complex");
    if (!K.is_connected()) throw NotTwoComplexError("approximation needs a connected complex");
    const std::size_t n = K.count(2);
    ApproxResult out;
    out.parts = std::max<std::size_t>(1, static_cast<std::size_t>(std::bit_width(n)) - 1);
    out.partition = approx_partition(K, out.parts, opts.shuffle_seed);
    out.best_subset = best_erasable_mask(K, out.partition, opts.jobs);
    out.gamma = out.parts - static_cast<std::size_t>(std::popcount(out.best_subset));
    std::vector<SimplexId> excluded;
    for (std::size_t i = 0; i < out.parts; ++i)
        if (!(out.best_subset >> i & 1U)) excluded.insert(excluded.end(), out.partition[i].begin(), out.partition[i].end());
    std::sort(excluded.begin(), excluded.end());
    out.gradient = gradient_from_erasure(K, excluded);
    out.morse = morse_vector(K, out.gradient);
    auto b = betti_mod2(K);
    const std::size_t chunk = (n + out.parts - 1) / out.parts;
    out.bound = b[1] + 1 + 2 * out.gamma * chunk - b[2];
    return out;
}

}  // namespace morsekit
