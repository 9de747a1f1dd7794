#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lycov {

// Vertex/variable subsets of {1..n}, n <= 62, as bit masks. Bit i-1
// stands for vertex x_i. Rendered as strings like "11011" with vertex 1
// leftmost, matching the tuple notation (1,1,0,1,1).
using Mask = std::uint64_t;

constexpr int kMaxVars = 62;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline bool mask_contains(Mask big, Mask small) { return (small & ~big) == 0; }

inline bool has_bit(Mask m, int v) { return (m >> (v - 1)) & 1; }  // v is 1-based

inline Mask bit(int v) { return Mask{1} << (v - 1); }

inline std::string format_mask(Mask m, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline Mask parse_mask(const std::string& s) {
    if (s.empty() || s.size() > kMaxVars)
        throw std::invalid_argument("bad mask literal: " + s);
    Mask m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') m |= Mask{1} << i;
        else if (s[i] != '0') throw std::invalid_argument("bad mask literal: " + s);
    }
    return m;
}

inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        int i = std::countr_zero(m);
        out.push_back(i + 1);
        m &= m - 1;
    }
    return out;
}

}  // namespace lycov
