#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bgg {

// Weights live in Z^n, written in the basis of simple roots throughout.
struct Weight {
    std::vector<int> c;

    Weight() = default;
    explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(c.size()); }
    int height() const;
    bool is_zero() const;
    bool nonneg() const;
    bool nonpos() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { a += b; return a; }
    friend Weight operator-(Weight a, const Weight& b) { a -= b; return a; }
    Weight operator-() const;
    Weight operator*(int k) const;

    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return c != o.c; }

    // "2,1" -- the CLI weight syntax
    std::string str() const;
};

// Total order: height first, then lexicographic on coordinates.
struct WeightLess {
    bool operator()(const Weight& a, const Weight& b) const;
};

std::size_t hash_ints(const std::vector<int>& v);

struct WeightHash {
    std::size_t operator()(const Weight& w) const { return hash_ints(w.c); }
};

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const { return hash_ints(v); }
};

}  // namespace bgg
