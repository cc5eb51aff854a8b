#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "bgg/bgg_complex.hpp"
#include "bgg/pbw.hpp"
#include "bgg/root_system.hpp"
#include "bgg/weyl.hpp"

namespace bgg {

// Bundles the per-type immutable data (roots, constants, Weyl combinatorics,
// PBW arithmetic, the sign assignment) and caches BGG complexes per lambda.
// complex_for is not thread-safe; populate the cache before fanning out.
class Engine {
  public:
    explicit Engine(CartanType type, std::uint64_t seed = 42, std::size_t budget = 1000000)
        : rs_(type), ch_(rs_), weyl_(rs_, budget), graph_(weyl_), alg_(rs_, ch_), seed_(seed),
          signs_(assign_signs(graph_, seed)) {}

    const RootSystem& roots() const { return rs_; }
    const ChevalleyConstants& chevalley() const { return ch_; }
    const WeylGroup& weyl() const { return weyl_; }
    const BruhatGraph& graph() const { return graph_; }
    const PBWAlgebra& algebra() const { return alg_; }
    const std::vector<int>& signs() const { return signs_; }
    std::uint64_t seed() const { return seed_; }

    const BGGComplex& complex_for(const Weight& lambda) {
        auto it = cache_.find(lambda);
        if (it != cache_.end()) return *it->second;
        auto cx = std::make_unique<BGGComplex>(compute_all_maps(weyl_, graph_, alg_, lambda));
        return *cache_.emplace(lambda, std::move(cx)).first->second;
    }

  private:
    RootSystem rs_;
    ChevalleyConstants ch_;
    WeylGroup weyl_;
    BruhatGraph graph_;
    PBWAlgebra alg_;
    std::uint64_t seed_;
    std::vector<int> signs_;
    std::map<Weight, std::unique_ptr<BGGComplex>, WeightLess> cache_;
};

}  // namespace bgg
