#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bgg/root_system.hpp"
#include "bgg/weight.hpp"

namespace bgg {

// Element of the Weyl group, canonicalized by its matrix action on
// simple-root coordinates (reduced words are not unique).
struct WeylElement {
    std::vector<int> mat;   // rank x rank, row-major; w(v)_i = sum_j mat[i*n+j] v_j
    std::vector<int> inv;   // matrix of the inverse element
    std::vector<int> word;  // lexicographically minimal reduced word, 0-based letters
    int length = 0;
};

class WeylGroup {
  public:
    // Enumerates the full group; throws if more than `budget` elements.
    WeylGroup(const RootSystem& rs, std::size_t budget = 1000000);

    const RootSystem& roots() const { return *rs_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const WeylElement& element(int i) const { return elems_[i]; }
    int identity() const { return 0; }
    int longest() const { return size() - 1; }
    int max_length() const { return elems_.back().length; }
    const std::vector<std::vector<int>>& by_length() const { return by_length_; }

    int index_of(const std::vector<int>& mat) const;  // -1 if absent
    int mult(int a, int b) const;                     // index of product
    Weight apply(int w, const Weight& v) const;
    // Dot action w.lam = w(lam + rho) - rho, computed exactly via 2*rho.
    Weight dot(int w, const Weight& lam) const;
    std::string word_str(int w) const;  // "e", "121", ...

  private:
    const RootSystem* rs_;
    std::vector<WeylElement> elems_;
    std::vector<std::vector<int>> by_length_;
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const { return hash_ints(v); }
    };
    std::unordered_map<std::vector<int>, int, VecHash> index_;
};

// Covering edge x -> w of the Bruhat order: w = s_t x with l(w) = l(x)+1;
// `root` is the positive root of the reflection t.
struct BruhatEdge {
    int x;
    int w;
    int root;
};

// Two length-2 paths w -> x -> wp and w -> y -> wp sharing endpoints.
struct Square {
    int w, x, y, wp;
    int e_wx, e_xwp, e_wy, e_ywp;  // edge indices
};

class BruhatGraph {
  public:
    explicit BruhatGraph(const WeylGroup& W);

    const WeylGroup& group() const { return *W_; }
    const std::vector<BruhatEdge>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Square>& squares() const { return squares_; }
    const std::vector<int>& edges_from(int x) const { return from_[x]; }
    const std::vector<int>& squares_of_edge(int e) const { return edge_squares_[e]; }
    int edge_index(int x, int w) const;  // -1 if absent

  private:
    const WeylGroup* W_;
    std::vector<BruhatEdge> edges_;
    std::vector<Square> squares_;
    std::vector<std::vector<int>> from_;
    std::vector<std::vector<int>> edge_squares_;
    std::unordered_map<long long, int> edge_index_;
};

struct Regularity {
    bool regular = false;
    Weight dominant;        // w.lam, meaningful when regular
    std::vector<int> word;  // reduced word of w (possibly non-canonical)
    int length = 0;
};

// Borel-Weil-Bott classification of lam: singular iff <lam+rho, beta^vee> = 0
// for some positive root, otherwise the unique w making w.lam dominant.
Regularity regularity(const RootSystem& rs, const Weight& lam);

}  // namespace bgg
