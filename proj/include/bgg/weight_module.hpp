#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bgg/pbw.hpp"
#include "bgg/root_system.hpp"

namespace bgg {

enum class BaseKind { G, N, U, B, H, P };
enum class ActionKind { Adjoint, Coadjoint };
enum class PowerKind { Sym, Wedge, Tensor };

// A b-module with weight-labeled basis and integer structure constants for
// the n-action. u (and its parabolic version) is the dual of the nilradical,
// carried by the dual basis with (f.phi)(x) = -phi([f,x]); everything else is
// a subalgebra of g with the bracket action.
struct BaseModule {
    std::string display;
    std::vector<Weight> weights;
    std::vector<std::string> labels;
    // action[root][i] = list of (j, c): f_root . v_i = sum c v_j
    std::vector<std::vector<std::vector<std::pair<int, int>>>> action;

    int dim() const { return static_cast<int>(weights.size()); }
};

// `parabolic` lists 0-based simple-root indices spanning the Levi part.
// Allowed combinations: (g|n|b|h|p, Adjoint) and (u, Coadjoint).
BaseModule build_base(const RootSystem& rs, const ChevalleyConstants& ch, BaseKind kind, ActionKind action,
                      const std::vector<int>& parabolic = {});

struct FactorSpec {
    BaseKind base;
    std::vector<int> parabolic;  // 0-based, sorted
    PowerKind kind;
    int power;
};

struct SummandSpec {
    std::vector<FactorSpec> factors;
};

struct ModuleSpecAst {
    std::vector<SummandSpec> summands;
    std::string canonical() const;
};

struct ModuleParseError : std::runtime_error {
    std::size_t pos;
    ModuleParseError(std::size_t p, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Grammar:  spec := summand ('+' summand)* ; summand := factor ('*' factor)* ;
// factor := ('sym'|'wedge'|'tensor') '(' base ',' uint ')' | base ;
// base := ('g'|'n'|'u'|'b'|'h'|'p'|'np'|'up') ('[' uint (',' uint)* ']')?
// Whitespace-insensitive; indices are 1-based simple roots.
ModuleSpecAst parse_module_spec(const std::string& text);

// One row of the action bookkeeping: a basis element (summand + index tuple),
// the index of the source row it came from, and its integer coefficient.
struct ActionRow {
    int summand;
    std::vector<int> tuple;
    int provenance;
    mpz_class coeff;
};

// Weight-decomposed basis of a direct sum of factor products
// sym^n V x wedge^m V x ..., with the U(n) action computed factor-by-factor.
class WeightModule {
  public:
    WeightModule(const RootSystem& rs, const ChevalleyConstants& ch, const ModuleSpecAst& spec);

    const RootSystem& roots() const { return *rs_; }
    const std::string& describe() const { return canonical_; }
    long dim() const { return dim_; }

    struct Row {
        int summand;
        std::vector<int> tuple;
    };

    long component_dim(const Weight& mu) const;
    const std::vector<Row>* component(const Weight& mu) const;  // nullptr when empty
    std::vector<Weight> weights() const;                        // distinct, sorted
    // Position of a basis row inside its weight component; -1 if absent.
    int row_index(int summand, const std::vector<int>& tuple) const;

    std::vector<ActionRow> identity_rows(const Weight& mu) const;
    std::vector<ActionRow> act_generator(int root, const std::vector<ActionRow>& rows) const;
    std::vector<ActionRow> act_monomial(const PBWMonomial& m, const std::vector<ActionRow>& rows) const;
    std::vector<ActionRow> act_element(const PBWElement& x, const std::vector<ActionRow>& rows) const;

  private:
    struct Factor {
        std::shared_ptr<const BaseModule> base;
        PowerKind kind;
        int power;
        int offset;  // start of this factor's block in the tuple
    };
    struct Summand {
        std::vector<Factor> factors;
        int tuple_len = 0;
    };

    const RootSystem* rs_;
    std::string canonical_;
    std::vector<Summand> summands_;
    long dim_ = 0;
    std::map<Weight, std::vector<Row>, WeightLess> components_;
    std::unordered_map<std::vector<int>, int, IntVecHash> row_pos_;  // [summand|tuple] -> index in component

    Weight row_weight(int summand, const std::vector<int>& tuple) const;
    static std::vector<ActionRow> merge(std::vector<ActionRow> rows);
};

std::string base_kind_name(BaseKind k);

}  // namespace bgg
