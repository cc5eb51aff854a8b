#pragma once

#include <gmpxx.h>

#include <vector>

#include "bgg/engine.hpp"
#include "bgg/linalg.hpp"
#include "bgg/weight_module.hpp"

namespace bgg {

// prod_{beta>0} <lambda+rho, beta^vee> / <rho, beta^vee>, exactly.
mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Dominant representatives of the dot-regular orbits meeting wt(E).
std::vector<Weight> candidate_weights(const RootSystem& rs, const WeightModule& E);

// Matrix of the degree-k differential of BGG(E, lambda), rows indexed by the
// length-k source basis and columns by the length-(k+1) target basis.
SparseIntMatrix assemble_differential(const Engine& engine, const WeightModule& E, const BGGComplex& cx, int k);

struct DegreeRun {
    std::vector<long> dims;   // dim BGG^k
    std::vector<long> ranks;  // rank d_k, k = 0..max_degree-1
    std::vector<long> mults;  // dim H^k
};

DegreeRun cohomology(Engine& engine, const WeightModule& E, const Weight& lambda);

struct LambdaMults {
    Weight lambda;
    mpz_class l_dim;  // dim L(lambda)
    std::vector<long> mults;
};

struct CohomologyResult {
    CartanType type;
    std::string module;
    int max_degree = 0;
    std::vector<LambdaMults> per_lambda;  // only weights contributing somewhere
    std::vector<mpz_class> dims_by_degree;
};

CohomologyResult full_cohomology(Engine& engine, const WeightModule& E, int jobs = 1, bool progress = false);

}  // namespace bgg
