#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morsekit/random_models.hpp"

namespace morsekit {

enum class ExperimentAlgo { ApparentPairs, RandomFace, CombinedDense, CombinedSparse };

const char* algo_name(ExperimentAlgo a);
ExperimentAlgo parse_algo_name(const std::string& s);  ///< apparent, random-face, dense, sparse

struct ExperimentConfig {
    ModelSpec model;  ///< max_dim < 0 becomes r + 1
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    int r = 2;
    ExperimentAlgo algo = ExperimentAlgo::ApparentPairs;
    int jobs = 0;
};

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::string model;
    int r = 0;
    std::vector<std::size_t> c;  ///< simplices per dimension
    std::vector<std::size_t> m;  ///< critical simplices per dimension
    std::size_t bad_events = 0;
    double ratio = 0.0;  ///< m_r / c_r for apparent pairs, B_r / c_r for random faces
    double predicted_bound = 0.0;
};

/// Trials are independent: trial i samples with trial_seed(master, i).
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);
std::vector<TrialRecord> run_experiment_serial(const ExperimentConfig& cfg);

/// Header: trial,seed,n,model,r,c_0..c_D,m_0..m_D,B_r,ratio,predicted_bound
std::string format_csv(const std::vector<TrialRecord>& rows);

struct ExperimentSummary {
    double mean_ratio = 0.0;
    double ratio_of_means = 0.0;
    double predicted_bound = 0.0;
};
ExperimentSummary summarize(const std::vector<TrialRecord>& rows);

}  // namespace morsekit
