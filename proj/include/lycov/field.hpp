#pragma once

#include <cstdint>

namespace lycov {

bool is_prime(std::uint32_t n);

// Prime field GF(p). All arithmetic is exact modulo p; elements are
// stored reduced in [0, p).
struct FieldSpec {
    std::uint32_t p;

    explicit FieldSpec(std::uint32_t characteristic = 32003);

    std::uint32_t reduce(long long x) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const FieldSpec& o) const { return p == o.p; }
};

}  // namespace lycov
