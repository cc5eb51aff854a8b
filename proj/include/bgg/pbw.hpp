#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "bgg/root_system.hpp"
#include "bgg/weight.hpp"

namespace bgg {

// Ordered monomial prod_beta f_beta^{e[beta]} over the positive roots in the
// fixed root order (f_1 leftmost).
struct PBWMonomial {
    std::vector<int> e;

    explicit PBWMonomial(int n_roots = 0) : e(n_roots, 0) {}
    static PBWMonomial one(int n_roots) { return PBWMonomial(n_roots); }
    static PBWMonomial gen(int n_roots, int root, int power = 1);

    int degree() const;
    bool is_one() const { return degree() == 0; }
    bool operator==(const PBWMonomial& o) const { return e == o.e; }
    bool operator<(const PBWMonomial& o) const { return e < o.e; }
};

// Exact linear combination of PBW monomials. Terms are kept in lexicographic
// exponent order so iteration and printing are deterministic.
struct PBWElement {
    std::map<std::vector<int>, mpz_class> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& mono, const mpz_class& c);
    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    PBWElement operator*(const mpz_class& c) const;
    bool operator==(const PBWElement& o) const { return terms == o.terms; }

    static PBWElement monomial(const PBWMonomial& m, mpz_class c = 1);

    // Divide by the coefficient gcd and make the coefficient of the first
    // monomial (lexicographically smallest exponent vector) positive.
    void normalize_primitive();
};

// Arithmetic in U(n) for the negative nilpotent subalgebra, in the PBW basis
// determined by the fixed positive-root order. Products are straightened with
// f_c f_b = f_b f_c + [f_c, f_b]; single-generator right multiplications are
// memoized since the same small products recur across squares.
class PBWAlgebra {
  public:
    PBWAlgebra(const RootSystem& rs, const ChevalleyConstants& ch) : rs_(&rs), ch_(&ch) {}

    const RootSystem& roots() const { return *rs_; }
    int n_roots() const { return rs_->num_positive(); }

    Weight monomial_weight(const PBWMonomial& m) const;
    Weight weight_of(const PBWElement& x) const;  // throws on inhomogeneous input

    PBWElement multiply(const PBWElement& a, const PBWElement& b) const;

    // All PBW monomials of weight xi (coordinates <= 0), in lexicographic
    // exponent order. Empty when xi is not a sum of negated positive roots.
    std::vector<PBWMonomial> weight_basis(const Weight& xi) const;

  private:
    const RootSystem* rs_;
    const ChevalleyConstants* ch_;
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const { return hash_ints(v); }
    };
    mutable std::unordered_map<std::vector<int>, PBWElement, VecHash> memo_;

    const PBWElement& mono_times_gen(const std::vector<int>& mono, int g) const;
    PBWElement elem_times_gen(const PBWElement& x, int g) const;
};

}  // namespace bgg
