// Independent brute-force oracles shared by the unit tests and the
// acceptance binary. Nothing here calls the library routine it checks.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ggb/field.hpp"
#include "ggb/linalg.hpp"
#include "ggb/pencil.hpp"

namespace oracle {

/// Points of P^2(F_q), normalized (first nonzero coordinate 1).
inline std::vector<std::array<int, 3>> plane_points(int q) {
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});
    return pts;
}

/// For every form of degree d over F_q (up to scalars not removed), the
/// bitmask of points of P^2(F_q) where it vanishes. Enumerates all forms.
inline std::vector<std::uint64_t> vanishing_masks(int q, int d) {
    auto pts = plane_points(q);
    std::vector<std::array<int, 3>> mons;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) mons.push_back({a, b, d - a - b});
    std::vector<std::vector<int>> val(mons.size(), std::vector<int>(pts.size()));
    for (size_t m = 0; m < mons.size(); ++m)
        for (size_t i = 0; i < pts.size(); ++i) {
            long long v = 1;
            for (int j = 0; j < 3; ++j)
                for (int e = 0; e < mons[m][j]; ++e) v = v * pts[i][j] % q;
            val[m][i] = static_cast<int>(v);
        }
    std::vector<std::uint64_t> masks;
    std::vector<int> coef(mons.size(), 0);
    for (;;) {
        size_t k = 0;
        while (k < coef.size() && coef[k] == q - 1) coef[k++] = 0;
        if (k == coef.size()) break;
        ++coef[k];
        std::uint64_t mask = 0;
        for (size_t i = 0; i < pts.size(); ++i) {
            long long s = 0;
            for (size_t m = 0; m < mons.size(); ++m) s += coef[m] * val[m][i];
            if (s % q == 0) mask |= (std::uint64_t{1} << i);
        }
        masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

/// Cayley-Bacharach by enumeration: no degree-d curve through all points of
/// `set` but one misses that one.
inline bool cb_bruteforce(std::uint64_t set, const std::vector<std::uint64_t>& masks) {
    for (int z = 0; z < 64; ++z) {
        if (!(set >> z & 1)) continue;
        const std::uint64_t rest = set & ~(std::uint64_t{1} << z);
        for (std::uint64_t m : masks)
            if ((m & rest) == rest && !(m >> z & 1)) return false;
    }
    return true;
}

/// Base locus of the degree-d forms through `set`: the intersection of every
/// vanishing mask containing it.
inline std::uint64_t base_locus(std::uint64_t set, const std::vector<std::uint64_t>& masks, std::uint64_t all) {
    std::uint64_t b = all;
    for (std::uint64_t m : masks)
        if ((m & set) == set) b &= m;
    return b;
}

/// Exterior algebra on an n-dim space, elements as maps from sorted index
/// bitmasks to coefficients mod p; products by explicit sign counting.
struct Ext {
    int n = 0;
    std::vector<long long> c;  // indexed by subset mask, size 2^n
};

inline int sort_sign(std::uint32_t a, std::uint32_t b) {
    // sign of concatenating sorted a then sorted b, re-sorted
    int inv = 0;
    for (int i = 0; i < 32; ++i)
        if (a >> i & 1) inv += __builtin_popcount(b & ((1u << i) - 1));
    return inv % 2 ? -1 : 1;
}

inline Ext ext_wedge(const Ext& x, const Ext& y, long long p) {
    Ext r{x.n, std::vector<long long>(x.c.size(), 0)};
    for (std::uint32_t a = 0; a < x.c.size(); ++a) {
        if (!x.c[a]) continue;
        for (std::uint32_t b = 0; b < y.c.size(); ++b) {
            if (!y.c[b] || (a & b)) continue;
            long long v = x.c[a] * y.c[b] % p * sort_sign(a, b);
            r.c[a | b] = ((r.c[a | b] + v) % p + p) % p;
        }
    }
    return r;
}


/// Random GL(2) x GL(4) x GL(4) conjugate of a 2x4 matrix of linear forms:
/// change of coordinates, then row and column operations.
inline ggb::GradedMatrix random_conjugate(const ggb::GradedMatrix& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, ggb::prime() - 1);
    auto rnd = [&](int r, int c) {
        for (;;) {
            ggb::Mat m(r, c);
            for (auto& x : m.a) x = d(rng);
            if (ggb::rank(m) == std::min(r, c)) return m;
        }
    };
    ggb::Mat g = rnd(2, 2), h = rnd(4, 4), s = rnd(4, 4);
    std::vector<ggb::Form> images;
    for (int i = 0; i < 4; ++i) {
        ggb::Form f(4, 1);
        for (int k = 0; k < 4; ++k) f += ggb::Form::variable(4, k) * s.get(k, i);
        images.push_back(f);
    }
    ggb::GradedMatrix sub = a.substitute(images);
    std::vector<std::vector<ggb::Form>> rows(2, std::vector<ggb::Form>(4, ggb::Form(4, 1)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b = 0; b < 4; ++b)
                    if (!sub.at(a2, b).is_zero()) rows[i][j] += sub.at(a2, b) * (g.get(i, a2) * h.get(b, j));
    return ggb::make_2x4(rows);
}
}  // namespace oracle
