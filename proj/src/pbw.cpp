#include "bgg/pbw.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bgg {

PBWMonomial PBWMonomial::gen(int n_roots, int root, int power) {
    PBWMonomial m(n_roots);
    m.e[root] = power;
    return m;
}

int PBWMonomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

void PBWElement::add(const std::vector<int>& mono, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

PBWElement PBWElement::operator*(const mpz_class& c) const {
    PBWElement r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms) r.terms.emplace(m, v * c);
    return r;
}

PBWElement PBWElement::monomial(const PBWMonomial& m, mpz_class c) {
    PBWElement r;
    r.add(m.e, c);
    return r;
}

void PBWElement::normalize_primitive() {
    if (terms.empty()) return;
    mpz_class g = 0;
    for (const auto& [m, c] : terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (terms.begin()->second < 0) g = -g;
    if (g == 1) return;
    for (auto& [m, c] : terms) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = q;
    }
}

Weight PBWAlgebra::monomial_weight(const PBWMonomial& m) const {
    Weight w = Weight::zero(rs_->rank());
    for (int b = 0; b < n_roots(); ++b)
        if (m.e[b]) w -= rs_->positive_roots()[b] * m.e[b];
    return w;
}

Weight PBWAlgebra::weight_of(const PBWElement& x) const {
    if (x.is_zero()) throw std::invalid_argument("weight of zero element");
    Weight w;
    bool first = true;
    for (const auto& [mono, c] : x.terms) {
        PBWMonomial m(n_roots());
        m.e = mono;
        Weight wm = monomial_weight(m);
        if (first) {
            w = wm;
            first = false;
        } else if (!(w == wm)) {
            throw std::invalid_argument("inhomogeneous PBW element");
        }
    }
    return w;
}

// mono * f_g, straightened. Recursion peels one generator off the right:
//   (m1 f_L) f_g = m1 f_g f_L + [f_L, f_g] m1-appended
// which strictly decreases (degree, inversions).
const PBWElement& PBWAlgebra::mono_times_gen(const std::vector<int>& mono, int g) const {
    std::vector<int> key = mono;
    key.push_back(g);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    PBWElement result;
    int last = n_roots() - 1;
    while (last >= 0 && mono[last] == 0) --last;
    if (last <= g) {
        std::vector<int> m = mono;
        m[g] += 1;
        result.add(m, 1);
    } else {
        std::vector<int> m1 = mono;
        m1[last] -= 1;
        // m1 * f_g, then append f_last to each straightened monomial
        const PBWElement& a = mono_times_gen(m1, g);
        for (const auto& [ma, ca] : a.terms) {
            const PBWElement& t = mono_times_gen(ma, last);
            for (const auto& [mt, ct] : t.terms) result.add(mt, ca * ct);
        }
        int c = ch_->f_bracket(last, g);
        if (c != 0) {
            const PBWElement& t = mono_times_gen(m1, ch_->sum_index(last, g));
            for (const auto& [mt, ct] : t.terms) result.add(mt, c * ct);
        }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
}

PBWElement PBWAlgebra::elem_times_gen(const PBWElement& x, int g) const {
    PBWElement r;
    for (const auto& [m, c] : x.terms) {
        const PBWElement& t = mono_times_gen(m, g);
        for (const auto& [mt, ct] : t.terms) r.add(mt, c * ct);
    }
    return r;
}

PBWElement PBWAlgebra::multiply(const PBWElement& a, const PBWElement& b) const {
    PBWElement result;
    for (const auto& [mb, cb] : b.terms) {
        // Right-multiply a by the generators of mb, leftmost first.
        PBWElement acc = a * cb;
        for (int g = 0; g < n_roots() && !acc.is_zero(); ++g)
            for (int k = 0; k < mb[g]; ++k) acc = elem_times_gen(acc, g);
        result += acc;
    }
    return result;
}

std::vector<PBWMonomial> PBWAlgebra::weight_basis(const Weight& xi) const {
    std::vector<PBWMonomial> out;
    if (!xi.nonpos()) return out;
    Weight target = -xi;
    const int n = rs_->rank();
    const int N = n_roots();
    // Assign exponents for non-simple roots (indices n..N-1) from the top;
    // simple-root exponents are then forced.
    PBWMonomial m(N);
    std::vector<int> rem = target.c;
    auto total = [&](const std::vector<int>& v) {
        int s = 0;
        for (int x : v) s += x;
        return s;
    };
    std::function<void(int)> rec = [&](int idx) {
        if (idx < n) {
            for (int i = 0; i < n; ++i) m.e[i] = rem[i];
            out.push_back(m);
            return;
        }
        const Weight& beta = rs_->positive_roots()[idx];
        int maxe = total(rem);
        for (int i = 0; i < n; ++i)
            if (beta.c[i] > 0) maxe = std::min(maxe, rem[i] / beta.c[i]);
        for (int e = 0; e <= maxe; ++e) {
            m.e[idx] = e;
            rec(idx - 1);
            for (int i = 0; i < n; ++i) rem[i] -= beta.c[i];
        }
        for (int i = 0; i < n; ++i) rem[i] += (maxe + 1) * beta.c[i];
        m.e[idx] = 0;
    };
    rec(N - 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bgg
