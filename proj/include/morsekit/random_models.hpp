#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morsekit/complex.hpp"

namespace morsekit {

enum class ModelKind { Clique, LinialMeshulam, CostaFarber };

struct ModelSpec {
    ModelKind kind = ModelKind::Clique;
    std::size_t n = 0;
    double p = 0.0;             ///< clique: edge probability; LM: top-level probability
    int d = 2;                  ///< LM dimension
    std::vector<double> probs;  ///< Costa-Farber p_1, p_2, ...
    int max_dim = -1;           ///< stop sampling above this dimension (-1: no cap)
};

const char* model_name(ModelKind k);
ModelKind parse_model_name(const std::string& s);  ///< "clique", "lm", "cf"

/// p_k for k = 0..n-1 (p_0 = 1: every vertex is present).
std::vector<double> level_probabilities(const ModelSpec& spec);

/// Multiparameter random complex on vertices 0..n-1, built level by level: a
/// k-simplex whose whole boundary is present is added with probability p_k.
/// Clique and Linial-Meshulam are the special parameter vectors.
SimplicialComplex sample_complex(const ModelSpec& spec, std::uint64_t seed);

/// (r+1) / ((n-r) prod_{l=1}^{r+1} p_l^C(r+1,l)), a bound on E(m_r)/E(c_r)
/// for the apparent pairs gradient.
double apparent_pairs_bound(const ModelSpec& spec, int r);

/// C(r+2,2) C(n,r+2)/C(n,r+1) prod_{j=1}^{r} p_j^C(r,j), a bound on
/// E(B_r)/E(c_r) for the random face gradient.
double random_face_bound(const ModelSpec& spec, int r);

}  // namespace morsekit
