#pragma once
#include <map>
#include <memory>
#include <vector>
#include "polymom/rat.hpp"

namespace polymom {

// Exponent vector (i_1,...,i_d), entries >= 0.
using MultiIndex = std::vector<int>;

inline int mi_total(const MultiIndex& I) {
    int t = 0;
    for (int i : I) t += i;
    return t;
}

// I! = i_1! i_2! ... i_d!
inline Int mi_factorial(const MultiIndex& I) {
    Int r(1);
    for (int i : I) r *= int_factorial(i);
    return r;
}

inline std::string mi_str(const MultiIndex& I, char sep = ',') {
    std::string s;
    for (size_t l = 0; l < I.size(); ++l) {
        if (l) s += sep;
        s += std::to_string(I[l]);
    }
    return s;
}

// Ranked enumeration of all multi-indices in d variables of total degree <= r,
// graded lexicographic: ascending total degree, lexicographic within a degree.
// For d=2, r=2: (0,0),(0,1),(1,0),(0,2),(1,1),(2,0).
struct IndexTable {
    int d, r;
    std::vector<MultiIndex> idx;
    std::map<MultiIndex, int> pos;

    IndexTable(int d_, int r_);
    int size() const { return static_cast<int>(idx.size()); }
    // position of I, or -1 when out of range
    int find(const MultiIndex& I) const {
        auto it = pos.find(I);
        return it == pos.end() ? -1 : it->second;
    }
};

// Shared, immutable tables; cached per (d, r).
std::shared_ptr<const IndexTable> table_for(int d, int r);

// Parse "i1,i2,...,id" (d parts, total <= r); validation error otherwise.
MultiIndex parse_index_key(const std::string& key, int d, int r);

} // namespace polymom
