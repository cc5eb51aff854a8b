#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgg/pbw.hpp"
#include "bgg/weyl.hpp"

namespace bgg {

// The Verma-map data of the BGG complex at a fixed dominant weight: one
// element F(x,w) of U(n) per covering edge x -> w, homogeneous of weight
// w.lambda - x.lambda, normalized to primitive integer coefficients with a
// positive leading coefficient.
struct BGGComplex {
    Weight lambda;
    std::vector<PBWElement> maps;  // indexed like BruhatGraph::edges()
    std::vector<Weight> xi;        // per edge: (target).lambda - (source).lambda
};

// (-i-1, 0) ... returns (i, m) when xi = -m*alpha_i with m > 0, else (-1, 0).
std::pair<int, int> simple_root_multiple(const Weight& xi);

// f_i^m for a base-case edge; throws when xi is not -m*alpha_i.
PBWElement base_case_map(const PBWAlgebra& alg, const Weight& xi);

struct ScheduleItem {
    int square;
    int edge;  // the single unknown edge of the square at its turn
};

// Greedy schedule: starting from the edges whose weight difference is a
// multiple of a simple root, repeatedly pick a square with exactly one
// unknown edge. Covers every edge or throws.
std::vector<ScheduleItem> solving_order(const BruhatGraph& graph, const WeylGroup& W, const Weight& lambda);

// Unknown factor U with U*K = R (unknown_on_left) or K*U = R, where U is
// homogeneous of weight xi. Throws when the system is inconsistent or the
// solution is not unique.
PBWElement solve_for_factor(const PBWAlgebra& alg, const Weight& xi, const PBWElement& K, const PBWElement& R,
                            bool unknown_on_left);

BGGComplex compute_all_maps(const WeylGroup& W, const BruhatGraph& graph, const PBWAlgebra& alg,
                            const Weight& lambda);
// Same, with an externally supplied schedule (used to check order-independence).
BGGComplex compute_all_maps_with_schedule(const WeylGroup& W, const BruhatGraph& graph, const PBWAlgebra& alg,
                                          const Weight& lambda, const std::vector<ScheduleItem>& schedule);

// Randomized greedy sign assignment: flips any edge whose incident squares
// have positive sign-product sum, kicks a few random edges on stall.
// Every square of the result has sign product -1.
std::vector<int> assign_signs(const BruhatGraph& graph, std::uint64_t seed, long flip_budget = 1000000);

struct D2Report {
    bool ok = true;
    int square = -1;
    std::string message;
};

// Checks the signed square-wise cancellation; reports the first violation.
D2Report verify_d_squared(const BruhatGraph& graph, const PBWAlgebra& alg, const BGGComplex& complex,
                          const std::vector<int>& signs);

// Unsigned commutation F(x,wp)F(w,x) = F(y,wp)F(w,y) for every square.
bool squares_commute(const BruhatGraph& graph, const PBWAlgebra& alg, const BGGComplex& complex);

}  // namespace bgg
