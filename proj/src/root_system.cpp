#include "bgg/root_system.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace bgg {

CartanType CartanType::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("cartan type: expected letter followed by rank, got '" + s + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int rank = 0;
    try {
        std::size_t pos = 0;
        rank = std::stoi(s.substr(1), &pos);
        if (pos + 1 != s.size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("cartan type: bad rank in '" + s + "'");
    }
    auto bad = [&](const char* why) {
        throw std::invalid_argument("cartan type " + std::string(1, letter) + std::to_string(rank) + ": " + why);
    };
    switch (letter) {
        case 'A': if (rank < 1) bad("rank must be >= 1"); break;
        case 'B': if (rank < 2) bad("rank must be >= 2"); break;
        case 'C': if (rank < 2) bad("rank must be >= 2"); break;
        case 'D': if (rank < 4) bad("rank must be >= 4"); break;
        case 'E': if (rank < 6 || rank > 8) bad("rank must be 6, 7 or 8"); break;
        case 'F': if (rank != 4) bad("rank must be 4"); break;
        case 'G': if (rank != 2) bad("rank must be 2"); break;
        default: throw std::invalid_argument("cartan type: letter must be A..G in '" + s + "'");
    }
    return CartanType{letter, rank};
}

namespace {

// cartan[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
void build_cartan(const CartanType& t, std::vector<std::vector<int>>& A, std::vector<int>& d) {
    const int n = t.rank;
    A.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 2;
    auto chain = [&](int i, int j) { A[i][j] = -1; A[j][i] = -1; };
    d.assign(n, 1);
    switch (t.letter) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            A[n - 1][n - 2] = -2;
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            d[n - 1] = 1;
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            A[n - 2][n - 1] = -2;
            for (int i = 0; i + 1 < n; ++i) d[i] = 1;
            d[n - 1] = 2;
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) chain(i, i + 1);
            chain(n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-..., node 2 hangs off node 4.
            chain(0, 2);
            chain(1, 3);
            for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case 'F':
            chain(0, 1);
            chain(1, 2);
            chain(2, 3);
            A[2][1] = -2;
            d = {2, 2, 1, 1};
            break;
        case 'G':
            A[0][1] = -3;
            A[1][0] = -1;
            d = {1, 3};
            break;
    }
}

int expected_positive_count(const CartanType& t) {
    const int n = t.rank;
    switch (t.letter) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

}  // namespace

RootSystem::RootSystem(CartanType t) : type_(t), rank_(t.rank) {
    build_cartan(t, cartan_, d_);

    // Generate positive roots level by level using root strings:
    // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, with p the
    // largest k such that beta - k*alpha_i is still a root.
    std::set<std::vector<int>> known;
    std::vector<Weight> frontier;
    for (int i = 0; i < rank_; ++i) {
        Weight a = Weight::zero(rank_);
        a.c[i] = 1;
        known.insert(a.c);
        frontier.push_back(a);
    }
    std::vector<Weight> all(frontier);
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& beta : frontier) {
            for (int i = 0; i < rank_; ++i) {
                int p = 0;
                Weight down = beta;
                for (;;) {
                    down.c[i] -= 1;
                    if (known.count(down.c)) ++p; else break;
                }
                if (p - simple_pairing(beta, i) > 0) {
                    Weight up = beta;
                    up.c[i] += 1;
                    if (!known.count(up.c)) {
                        known.insert(up.c);
                        next.push_back(up);
                        all.push_back(up);
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    std::sort(all.begin(), all.end(), [](const Weight& a, const Weight& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.c > b.c;  // earlier simple roots come first within a height
    });
    positive_ = std::move(all);

    if (static_cast<int>(positive_.size()) != expected_positive_count(t))
        throw std::logic_error("root generation produced wrong count for " + t.str());

    for (int k = 0; k < num_positive(); ++k) index_[positive_[k].c] = k;

    two_rho_ = Weight::zero(rank_);
    for (const Weight& b : positive_) two_rho_ += b;

    coroots_.resize(positive_.size());
    norm2_.resize(positive_.size());
    rho_pairing_.resize(positive_.size());
    for (int k = 0; k < num_positive(); ++k) {
        const Weight& b = positive_[k];
        long nb = form(b, b);
        norm2_[k] = nb;
        std::vector<int> cv(rank_);
        int ht = 0;
        for (int i = 0; i < rank_; ++i) {
            long num = 2L * b.c[i] * d_[i];
            if (num % nb != 0) throw std::logic_error("non-integral coroot");
            cv[i] = static_cast<int>(num / nb);
            ht += cv[i];
        }
        coroots_[k] = std::move(cv);
        rho_pairing_[k] = ht;
    }
}

long RootSystem::form(const Weight& a, const Weight& b) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += static_cast<long>(a.c[i]) * b.c[j] * d_[i] * cartan_[i][j];
    return s;
}

int RootSystem::root_index(const Weight& w) const {
    auto it = index_.find(w.c);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Weight& w) const {
    return root_index(w) >= 0 || root_index(-w) >= 0;
}

int RootSystem::simple_pairing(const Weight& w, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * w.c[j];
    return s;
}

int RootSystem::coroot_pairing(const Weight& w, int beta) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += coroots_[beta][i] * simple_pairing(w, i);
    return s;
}

bool RootSystem::dominant(const Weight& w) const {
    for (int i = 0; i < rank_; ++i)
        if (simple_pairing(w, i) < 0) return false;
    return true;
}

Weight RootSystem::simple_reflect(int i, const Weight& w) const {
    Weight r = w;
    r.c[i] -= simple_pairing(w, i);
    return r;
}

std::vector<int> RootSystem::reflection_matrix(int beta) const {
    std::vector<int> m(rank_ * rank_, 0);
    const Weight& b = positive_[beta];
    for (int j = 0; j < rank_; ++j) {
        Weight ej = Weight::zero(rank_);
        ej.c[j] = 1;
        int pr = coroot_pairing(ej, beta);
        for (int i = 0; i < rank_; ++i) m[i * rank_ + j] = (i == j ? 1 : 0) - pr * b.c[i];
    }
    return m;
}

// ---------------------------------------------------------------------------
// Chevalley structure constants.
//
// The signs are fixed inductively from the extraspecial pairs, following the
// classical relations (Carter, "Simple Groups of Lie Type", prop. 4.2.2):
//   (ii)  N(-a,-b) = -N(a,b)
//   (iii) a+b+c=0  =>  N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)
//   (iv)  a+b+c+e=0, no two opposite =>
//         N(a,b)N(c,e)/(a+b,a+b) + N(b,c)N(a,e)/(b+c,b+c) + N(c,a)N(b,e)/(c+a,c+a) = 0
// ---------------------------------------------------------------------------

int ChevalleyConstants::root_id(const Weight& w) const {
    int k = rs_->root_index(w);
    if (k >= 0) return k;
    k = rs_->root_index(-w);
    if (k >= 0) return n_ + k;
    return -1;
}

Weight ChevalleyConstants::id_weight(int id) const {
    return id < n_ ? rs_->positive_roots()[id] : -rs_->positive_roots()[id - n_];
}

void ChevalleyConstants::set_pair(int a, int b, int v) {
    auto neg = [&](int id) { return id < n_ ? id + n_ : id - n_; };
    entry(a, b) = v;
    entry(b, a) = -v;
    entry(neg(a), neg(b)) = -v;
    entry(neg(b), neg(a)) = v;
}

int ChevalleyConstants::string_down(const Weight& gamma, const Weight& beta) const {
    int p = 0;
    Weight w = gamma - beta;
    while (rs_->is_root(w)) {
        ++p;
        w -= beta;
    }
    return p;
}

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs) : rs_(&rs), n_(rs.num_positive()) {
    table_.assign(4 * static_cast<std::size_t>(n_) * n_, 0);
    const auto& roots = rs.positive_roots();

    auto norm2_of = [&](const Weight& w) -> long {
        int k = rs.root_index(w);
        if (k < 0) k = rs.root_index(-w);
        return rs.norm2(k);
    };

    // N for the pair (x_mu, x_{-nu}), mu != nu positive indices, derived from
    // relation (iii) and the positive-pair constants known so far.
    auto mixed = [&](int mu, int nu) -> long {
        Weight diff = roots[mu] - roots[nu];
        int k = rs.root_index(diff);
        if (k >= 0) {  // pair (nu, k) sums to mu
            long num = -rs.norm2(k) * static_cast<long>(entry(nu, k));
            if (num % rs.norm2(mu) != 0) throw std::logic_error("chevalley: non-integral mixed constant");
            return num / rs.norm2(mu);
        }
        k = rs.root_index(-diff);
        if (k >= 0) {  // pair (k, mu) sums to nu
            long num = rs.norm2(k) * static_cast<long>(entry(k, mu));
            if (num % rs.norm2(nu) != 0) throw std::logic_error("chevalley: non-integral mixed constant");
            return num / rs.norm2(nu);
        }
        return 0;
    };

    // Positive pairs, by increasing height of the sum.
    for (int sum = 0; sum < n_; ++sum) {
        if (roots[sum].height() == 1) continue;
        std::vector<std::pair<int, int>> special;
        for (int b = 0; b < n_; ++b) {
            int g = rs.root_index(roots[sum] - roots[b]);
            if (g >= 0 && b < g) special.emplace_back(b, g);
        }
        if (special.empty()) throw std::logic_error("non-simple root with no decomposition");
        auto [a, b] = special.front();  // extraspecial pair: minimal first member
        set_pair(a, b, string_down(roots[b], roots[a]) + 1);

        for (std::size_t s = 1; s < special.size(); ++s) {
            auto [g, h] = special[s];
            // Relation (iv) on the quadruple (a, b, -g, -h).
            mpq_class acc = 0;
            if (rs.is_root(roots[b] - roots[g]))
                acc += mpq_class(mixed(b, g) * mixed(a, h), norm2_of(roots[b] - roots[g]));
            if (rs.is_root(roots[a] - roots[g]))
                acc += mpq_class(-mixed(a, g) * mixed(b, h), norm2_of(roots[a] - roots[g]));
            acc *= mpq_class(rs.norm2(sum), entry(a, b));
            acc.canonicalize();
            if (acc.get_den() != 1) throw std::logic_error("chevalley: non-integral special constant");
            set_pair(g, h, static_cast<int>(acc.get_num().get_si()));
        }
    }

    // Remaining mixed entries.
    for (int mu = 0; mu < n_; ++mu)
        for (int nu = 0; nu < n_; ++nu) {
            if (mu == nu || !rs.is_root(roots[mu] - roots[nu])) continue;
            int v = static_cast<int>(mixed(mu, nu));
            entry(mu, n_ + nu) = v;
            entry(n_ + nu, mu) = -v;
        }
}

int ChevalleyConstants::f_bracket(int b, int c) const {
    if (sum_index(b, c) < 0) return 0;
    return entry(b, c);
}

int ChevalleyConstants::sum_index(int b, int c) const {
    return rs_->root_index(rs_->positive_roots()[b] + rs_->positive_roots()[c]);
}

std::vector<std::pair<GBasisTerm, int>> ChevalleyConstants::bracket(GBasisTerm x, GBasisTerm y) const {
    std::vector<std::pair<GBasisTerm, int>> out;
    auto root_term = [&](const Weight& w, int coeff) {
        if (coeff == 0) return;
        int k = rs_->root_index(w);
        if (k >= 0) {
            out.push_back({GBasisTerm{GBasisTerm::F, k}, coeff});
            return;
        }
        k = rs_->root_index(-w);
        if (k >= 0) out.push_back({GBasisTerm{GBasisTerm::E, k}, coeff});
    };
    // The F/E bookkeeping below identifies f_k with the abstract root-space
    // at +roots[k] and e_k with the one at -roots[k]; true g-weights are the
    // negation of that, which only matters to callers via term kinds.
    if (x.kind == GBasisTerm::H && y.kind == GBasisTerm::H) return out;
    if (x.kind == GBasisTerm::H || y.kind == GBasisTerm::H) {
        bool flip = (y.kind == GBasisTerm::H);
        const GBasisTerm& h = flip ? y : x;
        const GBasisTerm& z = flip ? x : y;
        const Weight& beta = rs_->positive_roots()[z.index];
        int pr = rs_->simple_pairing(beta, h.index);
        int c = (z.kind == GBasisTerm::F) ? -pr : pr;  // true weight of f is -beta
        if (flip) c = -c;
        if (c != 0) out.push_back({z, c});
        return out;
    }
    if (x.kind == y.kind) {
        int v = entry(x.kind == GBasisTerm::F ? x.index : n_ + x.index,
                      x.kind == GBasisTerm::F ? y.index : n_ + y.index);
        int k = sum_index(x.index, y.index);
        if (k >= 0 && v != 0) out.push_back({GBasisTerm{x.kind, k}, v});
        return out;
    }
    // One F, one E.
    bool flip = (x.kind == GBasisTerm::E);
    int fb = flip ? y.index : x.index;
    int ec = flip ? x.index : y.index;
    int sgn = flip ? -1 : 1;
    if (fb == ec) {
        // [f_b, e_b] = -h_{beta}^vee in the basis h_i; [e_b, f_b] is its negative.
        const auto& cv = rs_->coroot(fb);
        for (int i = 0; i < rs_->rank(); ++i)
            if (cv[i] != 0) out.push_back({GBasisTerm{GBasisTerm::H, i}, -sgn * cv[i]});
        return out;
    }
    int v = entry(fb, n_ + ec);
    if (v != 0) root_term(rs_->positive_roots()[fb] - rs_->positive_roots()[ec], sgn * v);
    return out;
}

}  // namespace bgg
