#include "bgg/weight_module.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace bgg {

std::string base_kind_name(BaseKind k) {
    switch (k) {
        case BaseKind::G: return "g";
        case BaseKind::N: return "n";
        case BaseKind::U: return "u";
        case BaseKind::B: return "b";
        case BaseKind::H: return "h";
        case BaseKind::P: return "p";
    }
    return "?";
}

namespace {

std::string root_label(const RootSystem& rs, int idx) {
    const Weight& b = rs.positive_roots()[idx];
    if (rs.rank() <= 9) {
        std::string s;
        for (int i = 0; i < rs.rank(); ++i)
            for (int k = 0; k < b.c[i]; ++k) s += std::to_string(i + 1);
        return s;
    }
    return "[" + b.str() + "]";
}

// Positive roots supported inside the parabolic subset.
std::vector<char> levi_mask(const RootSystem& rs, const std::vector<int>& parabolic) {
    std::vector<char> in_levi(rs.rank(), 0);
    for (int i : parabolic) {
        if (i < 0 || i >= rs.rank()) throw std::invalid_argument("parabolic index out of range");
        in_levi[i] = 1;
    }
    std::vector<char> mask(rs.num_positive(), 1);
    for (int b = 0; b < rs.num_positive(); ++b)
        for (int i = 0; i < rs.rank(); ++i)
            if (rs.positive_roots()[b].c[i] > 0 && !in_levi[i]) {
                mask[b] = 0;
                break;
            }
    return mask;  // mask[b] == 1 iff beta_b lies in the Levi part
}

}  // namespace

BaseModule build_base(const RootSystem& rs, const ChevalleyConstants& ch, BaseKind kind, ActionKind action,
                      const std::vector<int>& parabolic) {
    const bool coad = action == ActionKind::Coadjoint;
    if ((kind == BaseKind::U) != coad)
        throw std::invalid_argument("unsupported base/action combination: " + base_kind_name(kind) +
                                    (coad ? "/coadjoint" : "/adjoint"));
    if (!parabolic.empty() && kind != BaseKind::U && kind != BaseKind::N && kind != BaseKind::P)
        throw std::invalid_argument("parabolic subset is only meaningful for u, n and p");
    if (kind == BaseKind::P && parabolic.empty())
        throw std::invalid_argument("p needs a parabolic subset (p with empty subset is b)");

    std::vector<char> levi = levi_mask(rs, parabolic);
    const int N = rs.num_positive();

    BaseModule mod;
    mod.display = base_kind_name(kind);
    if (!parabolic.empty()) {
        mod.display += '[';
        for (std::size_t i = 0; i < parabolic.size(); ++i)
            mod.display += (i ? "," : "") + std::to_string(parabolic[i] + 1);
        mod.display += ']';
    }

    if (kind == BaseKind::U) {
        // Dual basis e_gamma of the complementary nilradical; the n-action is
        // (f.phi)(x) = -phi([f,x]).
        std::vector<int> pos_of(N, -1);
        for (int b = 0; b < N; ++b) {
            if (levi[b]) continue;
            pos_of[b] = mod.dim();
            mod.weights.push_back(rs.positive_roots()[b]);
            mod.labels.push_back("e" + root_label(rs, b));
        }
        mod.action.assign(N, std::vector<std::vector<std::pair<int, int>>>(mod.dim()));
        for (int p = 0; p < N; ++p)
            for (int b = 0; b < N; ++b) {
                if (pos_of[b] < 0) continue;
                int d = rs.root_index(rs.positive_roots()[b] - rs.positive_roots()[p]);
                if (d < 0 || pos_of[d] < 0) continue;
                int c = ch.f_bracket(p, d);
                if (c != 0) mod.action[p][pos_of[b]].push_back({pos_of[d], -c});
            }
        return mod;
    }

    // Subalgebras of g with the bracket action.
    std::vector<GBasisTerm> basis;
    bool with_f = true;
    bool with_h = kind == BaseKind::G || kind == BaseKind::B || kind == BaseKind::H || kind == BaseKind::P;
    bool with_e = kind == BaseKind::G || kind == BaseKind::P;
    if (kind == BaseKind::H) with_f = false;
    for (int b = 0; b < N; ++b)
        if (with_f && !(kind == BaseKind::N && levi[b] && !parabolic.empty()))
            basis.push_back({GBasisTerm::F, b});
    if (with_h)
        for (int i = 0; i < rs.rank(); ++i) basis.push_back({GBasisTerm::H, i});
    if (with_e)
        for (int b = 0; b < N; ++b)
            if (kind == BaseKind::G || levi[b]) basis.push_back({GBasisTerm::E, b});

    auto find = [&](const GBasisTerm& t) -> int {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == t) return static_cast<int>(i);
        return -1;
    };

    for (const GBasisTerm& t : basis) {
        switch (t.kind) {
            case GBasisTerm::F:
                mod.weights.push_back(-rs.positive_roots()[t.index]);
                mod.labels.push_back("f" + root_label(rs, t.index));
                break;
            case GBasisTerm::H:
                mod.weights.push_back(Weight::zero(rs.rank()));
                mod.labels.push_back("h" + std::to_string(t.index + 1));
                break;
            case GBasisTerm::E:
                mod.weights.push_back(rs.positive_roots()[t.index]);
                mod.labels.push_back("e" + root_label(rs, t.index));
                break;
        }
    }
    mod.action.assign(N, std::vector<std::vector<std::pair<int, int>>>(mod.dim()));
    if (kind == BaseKind::H) return mod;  // h = b/n: trivial n-action
    for (int p = 0; p < N; ++p)
        for (int i = 0; i < mod.dim(); ++i) {
            for (const auto& [term, c] : ch.bracket(GBasisTerm{GBasisTerm::F, p}, basis[i])) {
                int j = find(term);
                if (j < 0) throw std::logic_error("base module " + mod.display + " not closed under the n-action");
                mod.action[p][i].push_back({j, c});
            }
        }
    return mod;
}

// --- module-spec mini-language ------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ModuleParseError(pos, msg); }

    int integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::stoi(s.substr(start, pos - start));
    }

    std::string word() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }

    FactorSpec base(const std::string& name) {
        FactorSpec f;
        f.kind = PowerKind::Tensor;
        f.power = 1;
        if (name == "g") f.base = BaseKind::G;
        else if (name == "n" || name == "np") f.base = BaseKind::N;
        else if (name == "u" || name == "up") f.base = BaseKind::U;
        else if (name == "b") f.base = BaseKind::B;
        else if (name == "h") f.base = BaseKind::H;
        else if (name == "p") f.base = BaseKind::P;
        else fail("unknown base module '" + name + "'");
        skip();
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            for (;;) {
                int idx = integer();
                if (idx < 1) fail("parabolic indices are 1-based");
                f.parabolic.push_back(idx - 1);
                skip();
                if (eat(']')) break;
                if (!eat(',')) fail("expected ',' or ']' in parabolic subset");
            }
            std::sort(f.parabolic.begin(), f.parabolic.end());
            f.parabolic.erase(std::unique(f.parabolic.begin(), f.parabolic.end()), f.parabolic.end());
        }
        return f;
    }

    FactorSpec factor() {
        std::string name = word();
        if (name.empty()) fail("expected a factor");
        if (name == "sym" || name == "wedge" || name == "tensor") {
            if (!eat('(')) fail("expected '(' after '" + name + "'");
            std::string inner = word();
            FactorSpec f = base(inner);
            if (!eat(',')) fail("expected ',' in " + name + "(...)");
            f.power = integer();
            if (f.power < 0) fail("power must be non-negative");
            if (!eat(')')) fail("expected ')'");
            f.kind = name == "sym" ? PowerKind::Sym : (name == "wedge" ? PowerKind::Wedge : PowerKind::Tensor);
            return f;
        }
        return base(name);
    }

    ModuleSpecAst spec() {
        ModuleSpecAst ast;
        for (;;) {
            SummandSpec summand;
            summand.factors.push_back(factor());
            while (eat('*')) summand.factors.push_back(factor());
            ast.summands.push_back(std::move(summand));
            if (!eat('+')) break;
        }
        skip();
        if (pos != s.size()) fail("unexpected trailing input");
        return ast;
    }
};

}  // namespace

ModuleSpecAst parse_module_spec(const std::string& text) {
    Parser p{text};
    return p.spec();
}

std::string ModuleSpecAst::canonical() const {
    std::string out;
    for (std::size_t si = 0; si < summands.size(); ++si) {
        if (si) out += " + ";
        const auto& fs = summands[si].factors;
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            if (fi) out += "*";
            const FactorSpec& f = fs[fi];
            std::string base = base_kind_name(f.base);
            if (!f.parabolic.empty()) {
                base += '[';
                for (std::size_t i = 0; i < f.parabolic.size(); ++i)
                    base += (i ? "," : "") + std::to_string(f.parabolic[i] + 1);
                base += ']';
            }
            if (f.kind == PowerKind::Tensor && f.power == 1) {
                out += base;
            } else {
                out += (f.kind == PowerKind::Sym ? "sym(" : f.kind == PowerKind::Wedge ? "wedge(" : "tensor(");
                out += base + "," + std::to_string(f.power) + ")";
            }
        }
    }
    return out;
}

// --- weight module --------------------------------------------------------

WeightModule::WeightModule(const RootSystem& rs, const ChevalleyConstants& ch, const ModuleSpecAst& spec)
    : rs_(&rs), canonical_(spec.canonical()) {
    std::map<std::string, std::shared_ptr<const BaseModule>> base_cache;
    auto get_base = [&](const FactorSpec& f) {
        ActionKind ak = f.base == BaseKind::U ? ActionKind::Coadjoint : ActionKind::Adjoint;
        std::string key = base_kind_name(f.base);
        for (int i : f.parabolic) key += "," + std::to_string(i);
        auto it = base_cache.find(key);
        if (it != base_cache.end()) return it->second;
        auto ptr = std::make_shared<BaseModule>(build_base(rs, ch, f.base, ak, f.parabolic));
        base_cache.emplace(key, ptr);
        return ptr;
    };

    for (const SummandSpec& ss : spec.summands) {
        Summand summand;
        for (const FactorSpec& fs : ss.factors) {
            auto base = get_base(fs);
            // tensor(X,k) is k explicit power-1 factors
            int copies = fs.kind == PowerKind::Tensor ? fs.power : 1;
            int power = fs.kind == PowerKind::Tensor ? 1 : fs.power;
            for (int c = 0; c < copies; ++c) {
                Factor f;
                f.base = base;
                f.kind = fs.kind;
                f.power = power;
                f.offset = summand.tuple_len;
                summand.tuple_len += power;
                summand.factors.push_back(std::move(f));
            }
        }
        summands_.push_back(std::move(summand));
    }

    // Enumerate each summand's basis: per-factor tuples, then their product.
    for (int si = 0; si < static_cast<int>(summands_.size()); ++si) {
        const Summand& summand = summands_[si];
        std::vector<std::vector<std::vector<int>>> factor_tuples;
        bool empty = false;
        for (const Factor& f : summand.factors) {
            std::vector<std::vector<int>> tuples;
            std::vector<int> t(f.power);
            std::function<void(int, int)> rec = [&](int slot, int from) {
                if (slot == f.power) {
                    tuples.push_back(t);
                    return;
                }
                for (int v = from; v < f.base->dim(); ++v) {
                    t[slot] = v;
                    rec(slot + 1, f.kind == PowerKind::Sym ? v : (f.kind == PowerKind::Wedge ? v + 1 : 0));
                }
            };
            rec(0, 0);
            if (tuples.empty()) empty = true;
            factor_tuples.push_back(std::move(tuples));
        }
        if (empty) continue;
        std::vector<int> tuple(summand.tuple_len);
        std::function<void(std::size_t)> emit = [&](std::size_t fi) {
            if (fi == summand.factors.size()) {
                Weight mu = row_weight(si, tuple);
                auto& rows = components_[mu];
                std::vector<int> key;
                key.reserve(tuple.size() + 1);
                key.push_back(si);
                key.insert(key.end(), tuple.begin(), tuple.end());
                row_pos_.emplace(std::move(key), static_cast<int>(rows.size()));
                rows.push_back({si, tuple});
                ++dim_;
                return;
            }
            const Factor& f = summand.factors[fi];
            for (const auto& t : factor_tuples[fi]) {
                std::copy(t.begin(), t.end(), tuple.begin() + f.offset);
                emit(fi + 1);
            }
        };
        emit(0);
    }
}

Weight WeightModule::row_weight(int summand, const std::vector<int>& tuple) const {
    Weight mu = Weight::zero(rs_->rank());
    const Summand& s = summands_[summand];
    for (const Factor& f : s.factors)
        for (int k = 0; k < f.power; ++k) mu += f.base->weights[tuple[f.offset + k]];
    return mu;
}

long WeightModule::component_dim(const Weight& mu) const {
    auto it = components_.find(mu);
    return it == components_.end() ? 0 : static_cast<long>(it->second.size());
}

const std::vector<WeightModule::Row>* WeightModule::component(const Weight& mu) const {
    auto it = components_.find(mu);
    return it == components_.end() ? nullptr : &it->second;
}

std::vector<Weight> WeightModule::weights() const {
    std::vector<Weight> out;
    out.reserve(components_.size());
    for (const auto& [w, rows] : components_) out.push_back(w);
    return out;
}

int WeightModule::row_index(int summand, const std::vector<int>& tuple) const {
    std::vector<int> key;
    key.reserve(tuple.size() + 1);
    key.push_back(summand);
    key.insert(key.end(), tuple.begin(), tuple.end());
    auto it = row_pos_.find(key);
    return it == row_pos_.end() ? -1 : it->second;
}

std::vector<ActionRow> WeightModule::identity_rows(const Weight& mu) const {
    std::vector<ActionRow> rows;
    const auto* comp = component(mu);
    if (!comp) return rows;
    rows.reserve(comp->size());
    for (std::size_t i = 0; i < comp->size(); ++i)
        rows.push_back({(*comp)[i].summand, (*comp)[i].tuple, static_cast<int>(i), 1});
    return rows;
}

std::vector<ActionRow> WeightModule::merge(std::vector<ActionRow> rows) {
    std::map<std::pair<std::vector<int>, int>, mpz_class> acc;  // ([summand|tuple], provenance) -> coeff
    for (ActionRow& r : rows) {
        std::vector<int> key;
        key.reserve(r.tuple.size() + 1);
        key.push_back(r.summand);
        key.insert(key.end(), r.tuple.begin(), r.tuple.end());
        acc[{std::move(key), r.provenance}] += r.coeff;
    }
    std::vector<ActionRow> out;
    for (auto& [key, c] : acc) {
        if (c == 0) continue;
        ActionRow r;
        r.summand = key.first[0];
        r.tuple.assign(key.first.begin() + 1, key.first.end());
        r.provenance = key.second;
        r.coeff = std::move(c);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ActionRow> WeightModule::act_generator(int root, const std::vector<ActionRow>& rows) const {
    std::vector<ActionRow> produced;
    for (const ActionRow& r : rows) {
        const Summand& summand = summands_[r.summand];
        for (const Factor& f : summand.factors) {
            for (int slot = 0; slot < f.power; ++slot) {
                int v = r.tuple[f.offset + slot];
                for (const auto& [j, c] : f.base->action[root][v]) {
                    ActionRow nr;
                    nr.summand = r.summand;
                    nr.tuple = r.tuple;
                    nr.provenance = r.provenance;
                    nr.coeff = r.coeff * c;
                    nr.tuple[f.offset + slot] = j;
                    // canonicalize the factor block
                    if (f.kind == PowerKind::Sym) {
                        std::sort(nr.tuple.begin() + f.offset, nr.tuple.begin() + f.offset + f.power);
                    } else if (f.kind == PowerKind::Wedge) {
                        int sign = 1;
                        bool zero = false;
                        auto* blk = nr.tuple.data() + f.offset;
                        for (int a = 1; a < f.power && !zero; ++a) {
                            int x = blk[a], b = a - 1;
                            while (b >= 0 && blk[b] > x) {
                                blk[b + 1] = blk[b];
                                --b;
                                sign = -sign;
                            }
                            blk[b + 1] = x;
                            if (b >= 0 && blk[b] == x) zero = true;
                        }
                        if (zero) continue;
                        if (sign < 0) nr.coeff = -nr.coeff;
                    }
                    produced.push_back(std::move(nr));
                }
            }
        }
    }
    return merge(std::move(produced));
}

std::vector<ActionRow> WeightModule::act_monomial(const PBWMonomial& m, const std::vector<ActionRow>& rows) const {
    std::vector<ActionRow> cur = rows;
    for (int g = static_cast<int>(m.e.size()) - 1; g >= 0 && !cur.empty(); --g)
        for (int k = 0; k < m.e[g] && !cur.empty(); ++k) cur = act_generator(g, cur);
    return cur;
}

std::vector<ActionRow> WeightModule::act_element(const PBWElement& x, const std::vector<ActionRow>& rows) const {
    std::vector<ActionRow> all;
    for (const auto& [mono, c] : x.terms) {
        PBWMonomial m(static_cast<int>(mono.size()));
        m.e = mono;
        std::vector<ActionRow> part = act_monomial(m, rows);
        for (ActionRow& r : part) {
            r.coeff *= c;
            all.push_back(std::move(r));
        }
    }
    return merge(std::move(all));
}

}  // namespace bgg
