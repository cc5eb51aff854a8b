#include "bgg/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace bgg {

mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (!rs.dominant(lambda)) throw std::invalid_argument("weyl_dimension: lambda must be dominant");
    mpz_class num = 1, den = 1;
    for (int b = 0; b < rs.num_positive(); ++b) {
        num *= rs.coroot_pairing(lambda, b) + rs.rho_pairing(b);
        den *= rs.rho_pairing(b);
    }
    mpz_class q;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("weyl_dimension: non-integral result");
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<Weight> candidate_weights(const RootSystem& rs, const WeightModule& E) {
    std::vector<Weight> out;
    for (const Weight& mu : E.weights()) {
        Regularity reg = regularity(rs, mu);
        if (reg.regular) out.push_back(reg.dominant);
    }
    std::sort(out.begin(), out.end(), WeightLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SparseIntMatrix assemble_differential(const Engine& engine, const WeightModule& E, const BGGComplex& cx, int k) {
    const WeylGroup& W = engine.weyl();
    const BruhatGraph& graph = engine.graph();
    const auto& by_len = W.by_length();
    if (k < 0 || k + 1 >= static_cast<int>(by_len.size())) return SparseIntMatrix(0, 0);

    auto offsets = [&](const std::vector<int>& ws, std::vector<long>& off) {
        long total = 0;
        off.assign(ws.size(), 0);
        for (std::size_t i = 0; i < ws.size(); ++i) {
            off[i] = total;
            total += E.component_dim(W.dot(ws[i], cx.lambda));
        }
        return total;
    };
    std::vector<long> src_off, tgt_off;
    long n_src = offsets(by_len[k], src_off);
    long n_tgt = offsets(by_len[k + 1], tgt_off);
    SparseIntMatrix D(static_cast<int>(n_src), static_cast<int>(n_tgt));
    if (n_src == 0 || n_tgt == 0) return D;

    std::vector<int> tgt_pos(W.size(), -1);
    for (std::size_t i = 0; i < by_len[k + 1].size(); ++i) tgt_pos[by_len[k + 1][i]] = static_cast<int>(i);

    for (std::size_t i = 0; i < by_len[k].size(); ++i) {
        int w = by_len[k][i];
        Weight mu = W.dot(w, cx.lambda);
        if (E.component_dim(mu) == 0) continue;
        std::vector<ActionRow> rows = E.identity_rows(mu);
        for (int e : graph.edges_from(w)) {
            int wp = graph.edges()[e].w;
            Weight nu = W.dot(wp, cx.lambda);
            if (E.component_dim(nu) == 0) continue;
            int sigma = engine.signs()[e];
            for (const ActionRow& r : E.act_element(cx.maps[e], rows)) {
                int pos = E.row_index(r.summand, r.tuple);
                if (pos < 0) throw std::logic_error("assemble_differential: image row not in target basis");
                D.add(static_cast<int>(src_off[i] + r.provenance),
                      static_cast<int>(tgt_off[tgt_pos[wp]] + pos), sigma * r.coeff);
            }
        }
    }
    return D;
}

DegreeRun cohomology(Engine& engine, const WeightModule& E, const Weight& lambda) {
    const WeylGroup& W = engine.weyl();
    const int L = W.max_length();
    DegreeRun run;
    run.dims.assign(L + 1, 0);
    run.ranks.assign(L, 0);
    run.mults.assign(L + 1, 0);
    for (int k = 0; k <= L; ++k)
        for (int w : W.by_length()[k]) run.dims[k] += E.component_dim(W.dot(w, lambda));

    bool any = false;
    for (long d : run.dims) any |= d != 0;
    if (!any) return run;

    const BGGComplex& cx = engine.complex_for(lambda);
    for (int k = 0; k < L; ++k)
        if (run.dims[k] && run.dims[k + 1]) run.ranks[k] = rank_of(assemble_differential(engine, E, cx, k));

    for (int k = 0; k <= L; ++k) {
        run.mults[k] = run.dims[k] - (k < L ? run.ranks[k] : 0) - (k > 0 ? run.ranks[k - 1] : 0);
        if (run.mults[k] < 0) throw std::logic_error("cohomology: negative multiplicity (rank bookkeeping broken)");
    }
    return run;
}

CohomologyResult full_cohomology(Engine& engine, const WeightModule& E, int jobs, bool progress) {
    const WeylGroup& W = engine.weyl();
    const int L = W.max_length();
    CohomologyResult res;
    res.type = engine.roots().type();
    res.module = E.describe();
    res.max_degree = L;
    res.dims_by_degree.assign(L + 1, 0);

    std::vector<Weight> cands = candidate_weights(engine.roots(), E);
    // Maps are computed once per lambda up front; rank computations then run
    // in parallel over (lambda, degree).
    for (const Weight& lam : cands) engine.complex_for(lam);

    struct Task {
        int lam;
        int k;
    };
    std::vector<std::vector<long>> dims(cands.size()), ranks(cands.size());
    std::vector<Task> tasks;
    for (std::size_t li = 0; li < cands.size(); ++li) {
        dims[li].assign(L + 1, 0);
        ranks[li].assign(L, 0);
        for (int k = 0; k <= L; ++k)
            for (int w : W.by_length()[k]) dims[li][k] += E.component_dim(W.dot(w, cands[li]));
        for (int k = 0; k < L; ++k)
            if (dims[li][k] && dims[li][k + 1]) tasks.push_back({static_cast<int>(li), k});
    }

    auto run_task = [&](const Task& t) {
        const BGGComplex& cx = engine.complex_for(cands[t.lam]);  // cache hit, read-only
        ranks[t.lam][t.k] = rank_of(assemble_differential(engine, E, cx, t.k));
        if (progress)
            std::fprintf(stderr, "# lambda=%s k=%d dim=%ld rank=%ld\n", cands[t.lam].str().c_str(), t.k,
                         dims[t.lam][t.k], ranks[t.lam][t.k]);
    };

    if (jobs <= 1) {
        for (const Task& t : tasks) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<std::size_t>(jobs, tasks.size() ? tasks.size() : 1);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    run_task(tasks[i]);
                }
            });
        for (auto& th : pool) th.join();
    }

    for (std::size_t li = 0; li < cands.size(); ++li) {
        LambdaMults lm;
        lm.lambda = cands[li];
        lm.mults.assign(L + 1, 0);
        bool nonzero = false;
        long euler_dims = 0, euler_mults = 0;
        for (int k = 0; k <= L; ++k) {
            lm.mults[k] = dims[li][k] - (k < L ? ranks[li][k] : 0) - (k > 0 ? ranks[li][k - 1] : 0);
            if (lm.mults[k] < 0) throw std::logic_error("cohomology: negative multiplicity");
            nonzero |= lm.mults[k] != 0;
            long s = (k % 2 == 0) ? 1 : -1;
            euler_dims += s * dims[li][k];
            euler_mults += s * lm.mults[k];
        }
        if (euler_dims != euler_mults) throw std::logic_error("cohomology: Euler characteristic mismatch");
        if (!nonzero) continue;
        lm.l_dim = weyl_dimension(engine.roots(), cands[li]);
        for (int k = 0; k <= L; ++k) res.dims_by_degree[k] += lm.l_dim * lm.mults[k];
        res.per_lambda.push_back(std::move(lm));
    }
    return res;
}

}  // namespace bgg
