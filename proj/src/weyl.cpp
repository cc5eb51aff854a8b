#include "bgg/weyl.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace bgg {

namespace {

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
    std::vector<int> c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[i * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

Weight mat_apply(const std::vector<int>& m, const Weight& v) {
    int n = v.rank();
    Weight r = Weight::zero(n);
    for (int i = 0; i < n; ++i) {
        long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long>(m[i * n + j]) * v.c[j];
        r.c[i] = static_cast<int>(s);
    }
    return r;
}

int count_inversions(const RootSystem& rs, const std::vector<int>& mat) {
    int cnt = 0;
    for (const Weight& b : rs.positive_roots()) {
        Weight w = mat_apply(mat, b);
        if (rs.root_index(-w) >= 0) ++cnt;
    }
    return cnt;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t budget) : rs_(&rs) {
    const int n = rs.rank();
    std::vector<std::vector<int>> simple(n);
    for (int i = 0; i < n; ++i) {
        Weight a = Weight::zero(n);
        a.c[i] = 1;
        simple[i] = rs.reflection_matrix(rs.root_index(a));
    }

    std::vector<int> id(n * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;

    struct Node {
        std::vector<int> mat, inv;
        int length;
    };
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    std::vector<Node> nodes;
    nodes.push_back({id, id, 0});
    seen.emplace(id, 0);
    std::size_t head = 0;
    while (head < nodes.size()) {
        Node cur = nodes[head];  // copy: vector may reallocate below
        ++head;
        for (int i = 0; i < n; ++i) {
            // right multiplication by s_i; lengthens iff cur(alpha_i) > 0
            std::vector<int> m = mat_mul(cur.mat, simple[i], n);
            if (seen.count(m)) continue;
            if (nodes.size() >= budget)
                throw std::runtime_error("weyl enumeration budget exceeded (" + std::to_string(budget) +
                                         " elements) for type " + rs.type().str());
            std::vector<int> inv = mat_mul(simple[i], cur.inv, n);
            int len = count_inversions(rs, m);
            if (len != cur.length + 1) continue;  // shortened: already seen later via BFS
            seen.emplace(m, static_cast<int>(nodes.size()));
            nodes.push_back({std::move(m), std::move(inv), len});
        }
    }

    // Canonical reduced word: greedy smallest left descent.
    auto lexmin_word = [&](const Node& nd) {
        std::vector<int> word;
        std::vector<int> m = nd.mat;
        int len = nd.length;
        while (len > 0) {
            for (int i = 0; i < n; ++i) {
                // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0; test via the matrix of w^{-1}
                // which we do not carry here, so test by recomputing inversions.
                std::vector<int> m2 = mat_mul(simple[i], m, n);
                int len2 = count_inversions(*rs_, m2);
                if (len2 == len - 1) {
                    word.push_back(i);
                    m = std::move(m2);
                    len = len2;
                    break;
                }
            }
        }
        return word;
    };

    elems_.reserve(nodes.size());
    for (const Node& nd : nodes) {
        WeylElement e;
        e.mat = nd.mat;
        e.inv = nd.inv;
        e.length = nd.length;
        e.word = lexmin_word(nd);
        elems_.push_back(std::move(e));
    }
    std::sort(elems_.begin(), elems_.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    index_.clear();
    for (int i = 0; i < size(); ++i) index_.emplace(elems_[i].mat, i);

    by_length_.assign(elems_.back().length + 1, {});
    for (int i = 0; i < size(); ++i) by_length_[elems_[i].length].push_back(i);
}

int WeylGroup::index_of(const std::vector<int>& mat) const {
    auto it = index_.find(mat);
    return it == index_.end() ? -1 : it->second;
}

int WeylGroup::mult(int a, int b) const {
    int i = index_of(mat_mul(elems_[a].mat, elems_[b].mat, rs_->rank()));
    if (i < 0) throw std::logic_error("weyl product not found");
    return i;
}

Weight WeylGroup::apply(int w, const Weight& v) const { return mat_apply(elems_[w].mat, v); }

Weight WeylGroup::dot(int w, const Weight& lam) const {
    // w(lam) + (w(2 rho) - 2 rho)/2; the parenthesis is always even.
    Weight r = apply(w, lam);
    Weight t = apply(w, rs_->two_rho()) - rs_->two_rho();
    for (int i = 0; i < r.rank(); ++i) {
        if (t.c[i] % 2 != 0) throw std::logic_error("dot action parity violated");
        r.c[i] += t.c[i] / 2;
    }
    return r;
}

std::string WeylGroup::word_str(int w) const {
    const auto& word = elems_[w].word;
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (rs_->rank() > 9 && k) s += '.';
        s += std::to_string(word[k] + 1);
    }
    return s;
}

BruhatGraph::BruhatGraph(const WeylGroup& W) : W_(&W) {
    const RootSystem& rs = W.roots();
    const int n = rs.rank();
    std::vector<std::vector<int>> refl(rs.num_positive());
    for (int b = 0; b < rs.num_positive(); ++b) refl[b] = rs.reflection_matrix(b);

    for (int x = 0; x < W.size(); ++x) {
        for (int b = 0; b < rs.num_positive(); ++b) {
            std::vector<int> m = mat_mul(refl[b], W.element(x).mat, n);
            int w = W.index_of(m);
            if (w >= 0 && W.element(w).length == W.element(x).length + 1) edges_.push_back({x, w, b});
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const BruhatEdge& a, const BruhatEdge& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.w < b.w;
    });
    from_.assign(W.size(), {});
    for (int e = 0; e < num_edges(); ++e) {
        from_[edges_[e].x].push_back(e);
        edge_index_[static_cast<long long>(edges_[e].x) * W.size() + edges_[e].w] = e;
    }

    // Squares: pairs of length-2 paths sharing both endpoints. There must be
    // exactly two paths for each admissible endpoint pair.
    std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> paths;
    for (int e1 = 0; e1 < num_edges(); ++e1)
        for (int e2 : from_[edges_[e1].w])
            paths[{edges_[e1].x, edges_[e2].w}].push_back({edges_[e1].w, e1, e2});
    for (const auto& [key, ps] : paths) {
        if (ps.size() != 2)
            throw std::logic_error("bruhat graph: endpoint pair with " + std::to_string(ps.size()) +
                                   " length-2 paths; expected exactly 2");
        const auto& p0 = ps[0][0] < ps[1][0] ? ps[0] : ps[1];
        const auto& p1 = ps[0][0] < ps[1][0] ? ps[1] : ps[0];
        squares_.push_back({key.first, p0[0], p1[0], key.second, p0[1], p0[2], p1[1], p1[2]});
    }
    edge_squares_.assign(num_edges(), {});
    for (int s = 0; s < static_cast<int>(squares_.size()); ++s)
        for (int e : {squares_[s].e_wx, squares_[s].e_xwp, squares_[s].e_wy, squares_[s].e_ywp})
            edge_squares_[e].push_back(s);
}

int BruhatGraph::edge_index(int x, int w) const {
    auto it = edge_index_.find(static_cast<long long>(x) * W_->size() + w);
    return it == edge_index_.end() ? -1 : it->second;
}

Regularity regularity(const RootSystem& rs, const Weight& lam) {
    Regularity out;
    // Work with mu = 2(lam + rho) to stay integral.
    Weight mu = lam * 2 + rs.two_rho();
    for (int b = 0; b < rs.num_positive(); ++b)
        if (rs.coroot_pairing(mu, b) == 0) return out;  // dot-singular
    out.regular = true;
    for (;;) {
        int i = 0;
        for (; i < rs.rank(); ++i)
            if (rs.simple_pairing(mu, i) < 0) break;
        if (i == rs.rank()) break;
        mu = rs.simple_reflect(i, mu);
        out.word.push_back(i);
    }
    std::reverse(out.word.begin(), out.word.end());  // w = s_{i_k} ... s_{i_1}
    out.length = static_cast<int>(out.word.size());
    Weight dom = mu - rs.two_rho();
    for (int i = 0; i < rs.rank(); ++i) {
        if (dom.c[i] % 2 != 0) throw std::logic_error("regularity parity violated");
        dom.c[i] /= 2;
    }
    out.dominant = dom;
    return out;
}

}  // namespace bgg
