#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "bgg/weight.hpp"

namespace bgg {

struct CartanType {
    char letter = 'A';  // 'A'..'G'
    int rank = 1;

    // Accepts "A3", "a3", "B2", ... Throws std::invalid_argument with a
    // diagnostic for anything that is not a valid simple type.
    static CartanType parse(const std::string& s);
    std::string str() const { return std::string(1, letter) + std::to_string(rank); }
    bool operator==(const CartanType& o) const { return letter == o.letter && rank == o.rank; }
};

// Root-system data for a simple Lie algebra, Bourbaki numbering.
// Cartan matrix convention: cartan()[i][j] = <alpha_j, alpha_i^vee>.
class RootSystem {
  public:
    explicit RootSystem(CartanType t);

    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    // Positive roots in a fixed deterministic order: by height, then by
    // coordinate vector with the earlier simple root weighted first
    // (so A2 lists a1, a2, a1+a2 and G2 ends with 3a1+2a2).
    const std::vector<Weight>& positive_roots() const { return positive_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    // Index of a positive root, -1 if the weight is not one.
    int root_index(const Weight& w) const;
    bool is_root(const Weight& w) const;  // positive or negative root

    // Sum of all positive roots (= 2*rho; rho itself is half-integral for
    // some types, so it is never materialized as an integer vector).
    const Weight& two_rho() const { return two_rho_; }

    // <w, alpha_i^vee>
    int simple_pairing(const Weight& w, int i) const;
    // Coroot of positive root beta in the basis of simple coroots.
    const std::vector<int>& coroot(int beta) const { return coroots_[beta]; }
    // <w, beta^vee> for a positive root index beta.
    int coroot_pairing(const Weight& w, int beta) const;
    // <rho, beta^vee> = height of the coroot.
    int rho_pairing(int beta) const { return rho_pairing_[beta]; }
    // Symmetric invariant form (short roots have squared length 2).
    long norm2(int beta) const { return norm2_[beta]; }

    bool dominant(const Weight& w) const;

    // s_i(w) = w - <w, alpha_i^vee> alpha_i
    Weight simple_reflect(int i, const Weight& w) const;

    // Matrix of the reflection along positive root beta, acting on
    // simple-root coordinates; column-convention m[i][j] = (s_beta(e_j))_i.
    std::vector<int> reflection_matrix(int beta) const;

  private:
    CartanType type_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;  // symmetrizer: (alpha_i, alpha_i)/2
    std::vector<Weight> positive_;
    std::vector<std::vector<int>> coroots_;
    std::vector<int> rho_pairing_;
    std::vector<long> norm2_;
    Weight two_rho_;
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const { return hash_ints(v); }
    };
    std::unordered_map<std::vector<int>, int, VecHash> index_;

    long form(const Weight& a, const Weight& b) const;
    friend class ChevalleyConstants;
};

// A basis element of g: f_beta (beta > 0), h_i, or e_beta.
struct GBasisTerm {
    enum Kind : uint8_t { F = 0, H = 1, E = 2 };
    Kind kind;
    int index;  // positive-root index for F/E, simple index for H
    bool operator==(const GBasisTerm& o) const { return kind == o.kind && index == o.index; }
};

// Integer structure constants in a Chevalley basis, signs fixed by the
// extraspecial-pair convention (N > 0 on extraspecial pairs; see Carter,
// "Simple Groups of Lie Type", ch. 4). The table is built so that the
// negative generators satisfy [f_b, f_c] = N(b,c) f_{b+c} with exactly
// these constants; in particular [f_1, f_2] = +f_{12} in type A.
class ChevalleyConstants {
  public:
    explicit ChevalleyConstants(const RootSystem& rs);

    const RootSystem& roots() const { return *rs_; }

    // [f_b, f_c] = f_bracket(b,c) * f_{b+c}; zero when b+c is not a root.
    int f_bracket(int b, int c) const;
    // Index of beta+gamma among positive roots, -1 if not a root.
    int sum_index(int b, int c) const;

    // Full bracket of two basis elements of g, as a list of (term, coeff).
    std::vector<std::pair<GBasisTerm, int>> bracket(GBasisTerm x, GBasisTerm y) const;

  private:
    const RootSystem* rs_;
    int n_ = 0;  // number of positive roots
    // N indexed over all roots: id in [0, 2n); id < n positive, else -positive_[id-n]
    std::vector<int> table_;  // (2n)^2

    int root_id(const Weight& w) const;                     // -1 if not a root
    Weight id_weight(int id) const;
    int& entry(int a, int b) { return table_[a * 2 * n_ + b]; }
    int entry(int a, int b) const { return table_[a * 2 * n_ + b]; }
    void set_pair(int a, int b, int v);  // records N(a,b) plus antisymmetry/negation images
    int string_down(const Weight& gamma, const Weight& beta) const;
};

}  // namespace bgg
