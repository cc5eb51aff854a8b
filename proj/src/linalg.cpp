#include "bgg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgg {

std::size_t SparseIntMatrix::nnz() const {
    std::size_t s = 0;
    for (const auto& r : data_) s += r.size();
    return s;
}

void SparseIntMatrix::add(int r, int c, const mpz_class& v) {
    if (v == 0) return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, mpz_class>& a, int col) { return a.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
    return t;
}

namespace {

using Row = std::vector<std::pair<int, mpz_class>>;  // sorted by column

// dst = p*dst - q*src, then divide by the content.
void eliminate_into(Row& dst, const Row& src, const mpz_class& p, const mpz_class& q) {
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    mpz_class val;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.emplace_back(dst[i].first, p * dst[i].second);
            ++i;
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, -q * src[j].second);
            ++j;
        } else {
            val = p * dst[i].second - q * src[j].second;
            if (val != 0) out.emplace_back(dst[i].first, val);
            ++i;
            ++j;
        }
    }
    mpz_class g = 0;
    for (const auto& [c, v] : out) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : out) {
            mpz_class t;
            mpz_divexact(t.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            v = t;
        }
    dst = std::move(out);
}

const mpz_class* find_col(const Row& r, int c) {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const std::pair<int, mpz_class>& a, int col) { return a.first < col; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
}

long dense_bareiss_rank(std::vector<Row> rows, int cols) {
    std::vector<std::vector<mpz_class>> m(rows.size(), std::vector<mpz_class>(cols, 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) m[r][c] = v;
    long rank = 0;
    mpz_class prev = 1;
    std::size_t rr = 0;
    for (int c = 0; c < cols && rr < m.size(); ++c) {
        std::size_t piv = rr;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rr], m[piv]);
        for (std::size_t i = rr + 1; i < m.size(); ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = m[rr][c] * m[i][j] - m[i][c] * m[rr][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev = m[rr][c];
        ++rank;
        ++rr;
    }
    return rank;
}

// Elimination loop shared by rank and solve. `aug` is the index of the
// augmented column (pivots never chosen there), or -1.
// Returns (pivot list as (col, row snapshot)) and leaves `rows` reduced.
struct Echelon {
    std::vector<std::pair<int, Row>> pivots;
    bool inconsistent = false;  // only meaningful with aug >= 0
};

Echelon echelonize(std::vector<Row> rows, int aug) {
    Echelon out;
    std::vector<Row> active;
    for (auto& r : rows)
        if (!r.empty()) active.push_back(std::move(r));

    while (!active.empty()) {
        // Markowitz-style pivot: cheapest row, then rarest column within it.
        std::vector<int> colcount;
        int maxcol = 0;
        for (const auto& r : active)
            for (const auto& [c, v] : r) maxcol = std::max(maxcol, c + 1);
        colcount.assign(maxcol, 0);
        for (const auto& r : active)
            for (const auto& [c, v] : r) ++colcount[c];

        std::size_t best_row = active.size();
        int best_col = -1;
        std::size_t best_len = SIZE_MAX;
        long best_cc = 0;
        for (std::size_t i = 0; i < active.size(); ++i) {
            std::size_t len = active[i].size();
            bool pure_aug = (aug >= 0 && len == 1 && active[i][0].first == aug);
            if (pure_aug) {
                out.inconsistent = true;
                continue;
            }
            if (len > best_len) continue;
            for (const auto& [c, v] : active[i]) {
                if (c == aug) continue;
                bool better = best_col < 0 || len < best_len || (len == best_len && colcount[c] < best_cc);
                if (better) {
                    best_row = i;
                    best_col = c;
                    best_len = len;
                    best_cc = colcount[c];
                }
            }
        }
        if (best_col < 0) break;  // nothing but (possibly) pure-augmented rows left

        Row piv = std::move(active[best_row]);
        active.erase(active.begin() + static_cast<long>(best_row));
        const mpz_class p = *find_col(piv, best_col);
        std::vector<Row> next;
        next.reserve(active.size());
        for (auto& r : active) {
            const mpz_class* q = find_col(r, best_col);
            if (q) {
                eliminate_into(r, piv, p, *q);
                if (r.empty()) continue;
                if (aug >= 0 && r.size() == 1 && r[0].first == aug) {
                    out.inconsistent = true;
                    continue;
                }
            }
            next.push_back(std::move(r));
        }
        active = std::move(next);
        out.pivots.emplace_back(best_col, std::move(piv));
    }
    return out;
}

}  // namespace

long rank_of(const SparseIntMatrix& A) {
    std::vector<Row> rows;
    rows.reserve(A.rows());
    for (int r = 0; r < A.rows(); ++r)
        if (!A.row(r).empty()) rows.push_back(A.row(r));
    if (rows.empty()) return 0;
    // Dense fallback for small, well-filled blocks.
    double fill = double(A.nnz()) / (double(rows.size()) * std::max(1, A.cols()));
    if (A.cols() <= 128 && rows.size() <= 128 && fill > 0.25) return dense_bareiss_rank(std::move(rows), A.cols());
    return static_cast<long>(echelonize(std::move(rows), -1).pivots.size());
}

SolveOutcome solve_transposed(const SparseIntMatrix& A, const std::vector<mpz_class>& b) {
    if (static_cast<int>(b.size()) != A.cols())
        throw std::invalid_argument("solve: rhs length must equal number of columns of A");
    const int unknowns = A.rows();
    const int aug = unknowns;

    SparseIntMatrix At = A.transposed();
    std::vector<Row> rows(At.rows());
    for (int r = 0; r < At.rows(); ++r) {
        rows[r] = At.row(r);
        if (b[r] != 0) rows[r].emplace_back(aug, b[r]);
    }

    Echelon ech = echelonize(std::move(rows), aug);
    SolveOutcome out;
    if (ech.inconsistent) return out;
    out.consistent = true;
    out.unique = (static_cast<int>(ech.pivots.size()) == unknowns);
    out.x.assign(unknowns, mpq_class(0));

    // Back-substitution in reverse pivot order; free coordinates stay zero.
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
        const auto& [col, row] = *it;
        mpq_class acc = 0;
        mpq_class diag;
        for (const auto& [c, v] : row) {
            if (c == col) {
                diag = mpq_class(v);
            } else if (c == aug) {
                acc -= mpq_class(v);  // move rhs over with its sign
            } else {
                acc += mpq_class(v) * out.x[c];
            }
        }
        mpq_class val = -acc / diag;
        val.canonicalize();
        out.x[col] = val;
    }
    return out;
}

std::vector<mpz_class> primitive_integer(const std::vector<mpq_class>& v) {
    std::vector<mpz_class> out(v.size());
    if (v.empty()) return out;
    mpz_class lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpq_class t = v[i] * mpq_class(lcm);
        t.canonicalize();
        out[i] = t.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out) {
            mpz_class t;
            mpz_divexact(t.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            x = t;
        }
    return out;
}

}  // namespace bgg
