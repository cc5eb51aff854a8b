#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace bgg {

// Sparse matrix with exact integer entries; zero entries are never stored.
class SparseIntMatrix {
  public:
    SparseIntMatrix(int rows = 0, int cols = 0) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;

    void add(int r, int c, const mpz_class& v);  // accumulates; drops zeros
    const std::vector<std::pair<int, mpz_class>>& row(int r) const { return data_[r]; }

    SparseIntMatrix transposed() const;

  private:
    int rows_, cols_;
    std::vector<std::vector<std::pair<int, mpz_class>>> data_;  // sorted by column
};

// Exact rank over Q. Fraction-free elimination with sparse pivoting and
// per-row content reduction; small dense blocks fall back to Bareiss.
long rank_of(const SparseIntMatrix& A);

struct SolveOutcome {
    bool consistent = false;
    bool unique = false;
    std::vector<mpq_class> x;
};

// Solves A^T v = b exactly (b indexed by the columns of A, v by its rows).
// Returns one solution with free coordinates set to zero when the solution
// space is positive-dimensional, flagged by unique = false.
SolveOutcome solve_transposed(const SparseIntMatrix& A, const std::vector<mpz_class>& b);

// Clears denominators and divides by the content; empty stays empty.
std::vector<mpz_class> primitive_integer(const std::vector<mpq_class>& v);

}  // namespace bgg
