// Wall-clock comparison of the OpenMP kernels against their serial references.
// Usage: morsekit_bench [jobs]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "morsekit/approx.hpp"
#include "morsekit/erasability.hpp"
#include "morsekit/experiment.hpp"
#include "morsekit/parallel.hpp"
#include "morsekit/random_models.hpp"

using namespace morsekit;

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

static void report(const char* name, double serial, double parallel, bool same) {
    std::printf("%-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "same result" : "RESULTS DIFFER");
}

int main(int argc, char** argv) {
    const int jobs = resolve_jobs(argc > 1 ? std::atoi(argv[1]) : 0);
    std::printf("jobs = %d\n", jobs);

    // er search on a connected LM complex that is not erasable
    SimplicialComplex K;
    for (std::uint64_t s = 1;; ++s) {
        K = sample_complex({ModelKind::LinialMeshulam, 14, 0.35, 2, {}, -1}, s);
        if (K.is_connected() && !is_erasable(K)) break;
    }
    ErSearchOptions opts;
    opts.k_max = 4;
    opts.prune = false;
    opts.betti_bound = false;
    ErSearchResult a, b;
    opts.jobs = 1;
    double ts = seconds([&] { a = er_search(K, opts); });
    opts.jobs = jobs;
    double tp = seconds([&] { b = er_search(K, opts); });
    report("er_search", ts, tp, a.er == b.er && a.witness == b.witness);

    // approx subset scan
    auto parts = approx_partition(K, 12, std::nullopt);
    std::uint64_t m1 = 0, m2 = 0;
    ts = seconds([&] { m1 = best_erasable_mask_serial(K, parts); });
    tp = seconds([&] { m2 = best_erasable_mask(K, parts, jobs); });
    report("approx subset scan", ts, tp, m1 == m2);

    // experiment trials
    ExperimentConfig cfg;
    cfg.model = {ModelKind::Clique, 60, 0.5, 2, {}, -1};
    cfg.trials = 16;
    cfg.master_seed = 3;
    cfg.jobs = jobs;
    std::vector<TrialRecord> r1, r2;
    ts = seconds([&] { r1 = run_experiment_serial(cfg); });
    tp = seconds([&] { r2 = run_experiment(cfg); });
    report("experiment trials", ts, tp, format_csv(r1) == format_csv(r2));
    return 0;
}
