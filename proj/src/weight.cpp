#include "bgg/weight.hpp"

#include <stdexcept>

namespace bgg {

int Weight::height() const {
    int s = 0;
    for (int x : c) s += x;
    return s;
}

bool Weight::is_zero() const {
    for (int x : c)
        if (x != 0) return false;
    return true;
}

bool Weight::nonneg() const {
    for (int x : c)
        if (x < 0) return false;
    return true;
}

bool Weight::nonpos() const {
    for (int x : c)
        if (x > 0) return false;
    return true;
}

Weight& Weight::operator+=(const Weight& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (int& x : r.c) x = -x;
    return r;
}

Weight Weight::operator*(int k) const {
    Weight r = *this;
    for (int& x : r.c) x *= k;
    return r;
}

std::string Weight::str() const {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

bool WeightLess::operator()(const Weight& a, const Weight& b) const {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.c < b.c;
}

std::size_t hash_ints(const std::vector<int>& v) {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace bgg
