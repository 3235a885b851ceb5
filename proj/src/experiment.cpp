#include "morsekit/experiment.hpp"

#include <omp.h>

#include <cstdio>
#include <stdexcept>

#include "morsekit/parallel.hpp"
#include "morsekit/random_gradients.hpp"
#include "morsekit/rng.hpp"

namespace morsekit {

const char* algo_name(ExperimentAlgo a) {
    switch (a) {
        case ExperimentAlgo::ApparentPairs: return "apparent";
        case ExperimentAlgo::RandomFace: return "random-face";
        case ExperimentAlgo::CombinedDense: return "dense";
        case ExperimentAlgo::CombinedSparse: return "sparse";
    }
    return "?";
}

ExperimentAlgo parse_algo_name(const std::string& s) {
    if (s == "apparent") return ExperimentAlgo::ApparentPairs;
    if (s == "random-face") return ExperimentAlgo::RandomFace;
    if (s == "dense") return ExperimentAlgo::CombinedDense;
    if (s == "sparse") return ExperimentAlgo::CombinedSparse;
    throw std::invalid_argument("unknown experiment algorithm '" + s + "'");
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t i) {
    ModelSpec spec = cfg.model;
    if (spec.max_dim < 0) spec.max_dim = cfg.r + 1;
    TrialRecord rec;
    rec.trial = i;
    rec.seed = trial_seed(cfg.master_seed, i);
    rec.n = spec.n;
    rec.model = model_name(spec.kind);
    rec.r = cfg.r;
    SimplicialComplex K = sample_complex(spec, rec.seed);
    const std::uint64_t gseed = splitmix64(rec.seed ^ 0x6a09e667f3bcc909ULL);
    RandomFaceResult res;
    switch (cfg.algo) {
        case ExperimentAlgo::ApparentPairs: res = {apparent_pairs_gradient(K), 0}; break;
        case ExperimentAlgo::RandomFace: res = random_face_gradient(K, cfg.r, gseed); break;
        case ExperimentAlgo::CombinedDense: res = combined_gradient(K, cfg.r, gseed, Regime::Dense); break;
        case ExperimentAlgo::CombinedSparse: res = combined_gradient(K, cfg.r, gseed, Regime::Sparse); break;
    }
    const std::size_t D = static_cast<std::size_t>(spec.max_dim);
    rec.c.assign(D + 1, 0);
    rec.m.assign(D + 1, 0);
    for (int k = 0; k <= K.dimension() && static_cast<std::size_t>(k) <= D; ++k) {
        rec.c[static_cast<std::size_t>(k)] = K.count(k);
        for (SimplexId s = K.first_id(k); s < K.end_id(k); ++s)
            if (res.gradient.is_critical(s)) ++rec.m[static_cast<std::size_t>(k)];
    }
    rec.bad_events = res.bad_events;
    const std::size_t r = static_cast<std::size_t>(cfg.r);
    const double cr = r < rec.c.size() ? static_cast<double>(rec.c[r]) : 0.0;
    const bool by_events = cfg.algo == ExperimentAlgo::RandomFace || cfg.algo == ExperimentAlgo::CombinedSparse;
    const double num = by_events ? static_cast<double>(rec.bad_events) : static_cast<double>(rec.m[r]);
    rec.ratio = cr > 0 ? num / cr : 0.0;
    rec.predicted_bound = by_events ? random_face_bound(spec, cfg.r) : apparent_pairs_bound(spec, cfg.r);
    return rec;
}

void check_config(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("need at least one trial");
    if (cfg.r < 1) throw std::invalid_argument("r must be at least 1");
    level_probabilities(cfg.model);
}

}  // namespace

std::vector<TrialRecord> run_experiment_serial(const ExperimentConfig& cfg) {
    check_config(cfg);
    std::vector<TrialRecord> out;
    for (std::size_t i = 0; i < cfg.trials; ++i) out.push_back(run_trial(cfg, i));
    return out;
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
    check_config(cfg);
    std::vector<TrialRecord> out(cfg.trials);
    const int jobs = resolve_jobs(cfg.jobs);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cfg.trials);
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_trial(cfg, static_cast<std::size_t>(i));
    return out;
}

std::string format_csv(const std::vector<TrialRecord>& rows) {
    std::size_t D = 0;
    for (const auto& r : rows) D = std::max(D, r.c.size());
    std::string out = "trial,seed,n,model,r";
    for (std::size_t k = 0; k < D; ++k) out += ",c_" + std::to_string(k);
    for (std::size_t k = 0; k < D; ++k) out += ",m_" + std::to_string(k);
    out += ",B_r,ratio,predicted_bound\n";
    char buf[64];
    for (const auto& r : rows) {
        out += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + std::to_string(r.n) + "," + r.model + "," +
               std::to_string(r.r);
        for (std::size_t k = 0; k < D; ++k) out += "," + std::to_string(k < r.c.size() ? r.c[k] : 0);
        for (std::size_t k = 0; k < D; ++k) out += "," + std::to_string(k < r.m.size() ? r.m[k] : 0);
        out += "," + std::to_string(r.bad_events);
        std::snprintf(buf, sizeof buf, ",%.9g,%.9g\n", r.ratio, r.predicted_bound);
        out += buf;
    }
    return out;
}

ExperimentSummary summarize(const std::vector<TrialRecord>& rows) {
    ExperimentSummary s;
    if (rows.empty()) return s;
    double num = 0, den = 0;
    for (const auto& r : rows) {
        s.mean_ratio += r.ratio;
        const std::size_t k = static_cast<std::size_t>(r.r);
        den += static_cast<double>(k < r.c.size() ? r.c[k] : 0);
        num += r.ratio * static_cast<double>(k < r.c.size() ? r.c[k] : 0);
    }
    s.mean_ratio /= static_cast<double>(rows.size());
    s.ratio_of_means = den > 0 ? num / den : 0.0;
    s.predicted_bound = rows.front().predicted_bound;
    return s;
}

}  // namespace morsekit
