#include "lycov/field.hpp"

#include <stdexcept>

namespace lycov {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p(characteristic) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime");
}

std::uint32_t FieldSpec::reduce(long long x) const {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    long long t = 0, nt = 1;
    long long r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace lycov
