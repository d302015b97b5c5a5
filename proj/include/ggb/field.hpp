#pragma once

#include <atomic>
#include <cstdint>
#include <ostream>

namespace ggb {

namespace detail {
inline std::atomic<std::uint32_t> g_prime{32003};
}

// Process-wide modulus. Set it once before building any objects; values
// created under one prime are meaningless under another.
void set_prime(std::uint32_t p);
inline std::uint32_t prime() { return detail::g_prime.load(std::memory_order_relaxed); }

bool is_prime(std::uint32_t p);

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

/// Element of F_p for the current process prime.
class Fp {
public:
    Fp() = default;
    Fp(long long x) {
        const long long p = prime();
        long long r = x % p;
        v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
    static Fp raw(std::uint32_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }

    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    // Symmetric representative in (-p/2, p/2], used for printing.
    long long signed_value() const {
        const std::uint32_t p = prime();
        return v_ > p / 2 ? static_cast<long long>(v_) - p : v_;
    }

    Fp operator+(Fp o) const { return raw(mod_add(v_, o.v_, prime())); }
    Fp operator-(Fp o) const { return raw(mod_sub(v_, o.v_, prime())); }
    Fp operator*(Fp o) const { return raw(mod_mul(v_, o.v_, prime())); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : prime() - v_); }
    Fp operator/(Fp o) const { return *this * o.inv(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    bool operator==(const Fp&) const = default;

    Fp inv() const;  // throws std::domain_error on zero
    Fp pow(std::uint64_t e) const { return raw(mod_pow(v_, e, prime())); }

private:
    std::uint32_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.signed_value(); }

}  // namespace ggb
