#include "bgg/bgg_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "bgg/linalg.hpp"

namespace bgg {

std::pair<int, int> simple_root_multiple(const Weight& xi) {
    int idx = -1, m = 0;
    for (int i = 0; i < xi.rank(); ++i) {
        if (xi.c[i] == 0) continue;
        if (idx >= 0 || xi.c[i] > 0) return {-1, 0};
        idx = i;
        m = -xi.c[i];
    }
    if (idx < 0) return {-1, 0};
    return {idx, m};
}

PBWElement base_case_map(const PBWAlgebra& alg, const Weight& xi) {
    auto [i, m] = simple_root_multiple(xi);
    if (i < 0) throw std::invalid_argument("not a base-case edge: weight difference " + xi.str());
    Weight a = Weight::zero(xi.rank());
    a.c[i] = 1;
    int root = alg.roots().root_index(a);
    return PBWElement::monomial(PBWMonomial::gen(alg.n_roots(), root, m));
}

namespace {

Weight edge_xi(const WeylGroup& W, const BruhatEdge& e, const Weight& lambda) {
    return W.dot(e.w, lambda) - W.dot(e.x, lambda);
}

}  // namespace

std::vector<ScheduleItem> solving_order(const BruhatGraph& graph, const WeylGroup& W, const Weight& lambda) {
    const int E = graph.num_edges();
    std::vector<char> known(E, 0);
    for (int e = 0; e < E; ++e)
        known[e] = simple_root_multiple(edge_xi(W, graph.edges()[e], lambda)).first >= 0;

    std::vector<ScheduleItem> schedule;
    bool progress = true;
    int remaining = 0;
    for (int e = 0; e < E; ++e) remaining += !known[e];
    while (remaining > 0 && progress) {
        progress = false;
        for (int s = 0; s < static_cast<int>(graph.squares().size()); ++s) {
            const Square& sq = graph.squares()[s];
            int unknown = -1, cnt = 0;
            for (int e : {sq.e_wx, sq.e_xwp, sq.e_wy, sq.e_ywp})
                if (!known[e]) {
                    ++cnt;
                    unknown = e;
                }
            if (cnt == 1) {
                schedule.push_back({s, unknown});
                known[unknown] = 1;
                --remaining;
                progress = true;
            }
        }
    }
    if (remaining > 0) throw std::logic_error("solving_order: no square with a single unknown edge remains");
    return schedule;
}

PBWElement solve_for_factor(const PBWAlgebra& alg, const Weight& xi, const PBWElement& K, const PBWElement& R,
                            bool unknown_on_left) {
    std::vector<PBWMonomial> basis = alg.weight_basis(xi);
    if (basis.empty()) throw std::logic_error("solve_for_factor: empty weight component " + xi.str());

    std::unordered_map<std::vector<int>, int, IntVecHash> col_of;
    std::vector<PBWElement> rows(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        PBWElement u = PBWElement::monomial(basis[i]);
        rows[i] = unknown_on_left ? alg.multiply(u, K) : alg.multiply(K, u);
        for (const auto& [mono, c] : rows[i].terms)
            col_of.emplace(mono, static_cast<int>(col_of.size()));
    }
    SparseIntMatrix A(static_cast<int>(basis.size()), static_cast<int>(col_of.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [mono, c] : rows[i].terms) A.add(static_cast<int>(i), col_of.at(mono), c);

    std::vector<mpz_class> b(col_of.size(), 0);
    for (const auto& [mono, c] : R.terms) {
        auto it = col_of.find(mono);
        if (it == col_of.end()) throw std::logic_error("solve_for_factor: inconsistent system (stray monomial)");
        b[it->second] = c;
    }

    SolveOutcome sol = solve_transposed(A, b);
    if (!sol.consistent) throw std::logic_error("solve_for_factor: inconsistent system");
    if (!sol.unique) throw std::logic_error("solve_for_factor: non-unique solution");

    // The exact solution is kept as-is: rescaling would break the square
    // equations. With coefficient-1 maps on the simple-difference edges it is
    // always integral and primitive (Gauss's lemma in U(n) over Z).
    PBWElement F;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (sol.x[i].get_den() != 1) throw std::logic_error("solve_for_factor: non-integral solution");
        F.add(basis[i].e, sol.x[i].get_num());
    }
    if (F.is_zero()) throw std::logic_error("solve_for_factor: zero map");
    return F;
}

namespace {

PBWElement solve_one_square(const PBWAlgebra& alg, const BruhatGraph& graph, const BGGComplex& cx, int s,
                            int unknown) {
    const Square& sq = graph.squares()[s];
    const auto& maps = cx.maps;
    if (unknown == sq.e_xwp || unknown == sq.e_wx) {
        PBWElement R = alg.multiply(maps[sq.e_ywp], maps[sq.e_wy]);
        return (unknown == sq.e_xwp) ? solve_for_factor(alg, cx.xi[unknown], maps[sq.e_wx], R, true)
                                     : solve_for_factor(alg, cx.xi[unknown], maps[sq.e_xwp], R, false);
    }
    PBWElement R = alg.multiply(maps[sq.e_xwp], maps[sq.e_wx]);
    return (unknown == sq.e_ywp) ? solve_for_factor(alg, cx.xi[unknown], maps[sq.e_wy], R, true)
                                 : solve_for_factor(alg, cx.xi[unknown], maps[sq.e_ywp], R, false);
}

}  // namespace

BGGComplex compute_all_maps_with_schedule(const WeylGroup& W, const BruhatGraph& graph, const PBWAlgebra& alg,
                                          const Weight& lambda, const std::vector<ScheduleItem>& schedule) {
    if (!W.roots().dominant(lambda)) throw std::invalid_argument("lambda must be dominant: " + lambda.str());
    BGGComplex cx;
    cx.lambda = lambda;
    const int E = graph.num_edges();
    cx.maps.resize(E);
    cx.xi.resize(E);
    for (int e = 0; e < E; ++e) {
        cx.xi[e] = edge_xi(W, graph.edges()[e], lambda);
        if (simple_root_multiple(cx.xi[e]).first >= 0) cx.maps[e] = base_case_map(alg, cx.xi[e]);
    }
    for (const ScheduleItem& item : schedule) cx.maps[item.edge] = solve_one_square(alg, graph, cx, item.square, item.edge);
    for (int e = 0; e < E; ++e)
        if (cx.maps[e].is_zero()) throw std::logic_error("compute_all_maps: uncovered edge");
    return cx;
}

BGGComplex compute_all_maps(const WeylGroup& W, const BruhatGraph& graph, const PBWAlgebra& alg,
                            const Weight& lambda) {
    return compute_all_maps_with_schedule(W, graph, alg, lambda, solving_order(graph, W, lambda));
}

namespace {

// Small deterministic PRNG (xorshift*), platform-independent output.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545f4914f6cdd1dull;
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

}  // namespace

std::vector<int> assign_signs(const BruhatGraph& graph, std::uint64_t seed, long flip_budget) {
    const int E = graph.num_edges();
    const auto& squares = graph.squares();
    std::vector<int> sign(E, 1);
    if (squares.empty()) return sign;

    std::vector<int> prod(squares.size(), 1);  // all-plus start: every square bad
    long bad = static_cast<long>(squares.size());
    Rng rng(seed);
    long flips = 0;

    auto flip = [&](int e) {
        sign[e] = -sign[e];
        for (int s : graph.squares_of_edge(e)) {
            prod[s] = -prod[s];
            bad += (prod[s] > 0) ? 1 : -1;
        }
        ++flips;
    };

    std::vector<int> perm(E);
    for (int i = 0; i < E; ++i) perm[i] = i;

    while (bad > 0) {
        if (flips > flip_budget)
            throw std::runtime_error("assign_signs: flip budget exceeded (" + std::to_string(flip_budget) + ")");
        // Fisher-Yates with the local rng, for reproducible scan order.
        for (int i = E - 1; i > 0; --i) std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
        bool improved = false;
        for (int e : perm) {
            if (bad == 0) break;
            long gain = 0;
            for (int s : graph.squares_of_edge(e)) gain += prod[s];
            if (gain > 0) {
                flip(e);
                improved = true;
            }
        }
        if (bad > 0 && !improved) {
            int kick = (E + 19) / 20;  // ceil(5%)
            for (int i = 0; i < kick; ++i) flip(perm[static_cast<int>(rng.below(E))]);
        }
    }
    return sign;
}

D2Report verify_d_squared(const BruhatGraph& graph, const PBWAlgebra& alg, const BGGComplex& complex,
                          const std::vector<int>& signs) {
    for (int s = 0; s < static_cast<int>(graph.squares().size()); ++s) {
        const Square& sq = graph.squares()[s];
        PBWElement t = alg.multiply(complex.maps[sq.e_xwp], complex.maps[sq.e_wx]) *
                       mpz_class(signs[sq.e_xwp] * signs[sq.e_wx]);
        t += alg.multiply(complex.maps[sq.e_ywp], complex.maps[sq.e_wy]) *
             mpz_class(signs[sq.e_ywp] * signs[sq.e_wy]);
        if (!t.is_zero()) {
            D2Report r;
            r.ok = false;
            r.square = s;
            r.message = "d^2 != 0 on the square with corners " + graph.group().word_str(sq.w) + " -> {" +
                        graph.group().word_str(sq.x) + ", " + graph.group().word_str(sq.y) + "} -> " +
                        graph.group().word_str(sq.wp);
            return r;
        }
    }
    return {};
}

bool squares_commute(const BruhatGraph& graph, const PBWAlgebra& alg, const BGGComplex& complex) {
    for (const Square& sq : graph.squares()) {
        PBWElement a = alg.multiply(complex.maps[sq.e_xwp], complex.maps[sq.e_wx]);
        PBWElement b = alg.multiply(complex.maps[sq.e_ywp], complex.maps[sq.e_wy]);
        if (!(a == b)) return false;
    }
    return true;
}

}  // namespace bgg
