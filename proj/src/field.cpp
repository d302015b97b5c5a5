#include "ggb/field.hpp"

#include <stdexcept>
#include <string>

namespace ggb {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void set_prime(std::uint32_t p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be an odd prime below 2^31, got " + std::to_string(p));
    detail::g_prime.store(p, std::memory_order_relaxed);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
    return mod_pow(a, p - 2, p);
}

Fp Fp::inv() const { return raw(mod_inv(v_, prime())); }

}  // namespace ggb
