#include "ggb/beilinson.hpp"

#include <bit>

namespace ggb {

namespace {

std::uint32_t mask_of(const std::vector<int>& idx) {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    return m;
}

void add_to(std::map<std::uint32_t, Fp>& c, std::uint32_t k, Fp v) {
    Fp s = c[k] + v;
    if (s.is_zero())
        c.erase(k);
    else
        c[k] = s;
}

std::vector<std::uint32_t> subsets(int dim, int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > dim) return out;
    for (std::uint32_t m = 0; m < (1u << dim); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

}  // namespace

int shuffle_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    // each element of a passes over the smaller elements of b
    int inv = 0;
    for (std::uint32_t x = a; x; x &= x - 1) {
        const int i = std::countr_zero(x);
        inv += std::popcount(b & ((1u << i) - 1));
    }
    return inv % 2 ? -1 : 1;
}

ExtElement ExtElement::basis(int dim, const std::vector<int>& idx) {
    ExtElement e;
    e.dim = dim;
    e.grade = static_cast<int>(idx.size());
    // sign of sorting idx
    int inv = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= dim) throw std::invalid_argument("basis index out of range");
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return e;
            if (idx[i] > idx[j]) ++inv;
        }
    }
    e.coef[mask_of(idx)] = Fp(inv % 2 ? -1 : 1);
    return e;
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
    if (dim != o.dim || grade != o.grade) throw std::invalid_argument("adding exterior elements of different shape");
    ExtElement r = *this;
    for (const auto& [k, v] : o.coef) add_to(r.coef, k, v);
    return r;
}

ExtElement ExtElement::operator*(Fp c) const {
    ExtElement r{dim, grade, {}};
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coef) r.coef[k] = v * c;
    return r;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
    if (a.dim != b.dim) throw std::invalid_argument("wedge of elements of different spaces");
    ExtElement r{a.dim, a.grade + b.grade, {}};
    for (const auto& [ka, va] : a.coef)
        for (const auto& [kb, vb] : b.coef) {
            const int s = shuffle_sign(ka, kb);
            if (s) add_to(r.coef, ka | kb, s > 0 ? va * vb : -(va * vb));
        }
    return r;
}

ExtElement contract(const ExtElement& phi, const ExtElement& omega) {
    if (phi.dim != omega.dim) throw std::invalid_argument("contraction of elements of different spaces");
    if (omega.grade > phi.grade) throw std::invalid_argument("contraction grade mismatch");
    ExtElement r{phi.dim, phi.grade - omega.grade, {}};
    // f_J · e_I = sign(I, J \ I) f_{J \ I} when I ⊂ J
    for (const auto& [kj, vj] : phi.coef)
        for (const auto& [ki, vi] : omega.coef) {
            if ((ki & kj) != ki) continue;
            const std::uint32_t rest = kj & ~ki;
            const int s = shuffle_sign(ki, rest);
            add_to(r.coef, rest, s > 0 ? vj * vi : -(vj * vi));
        }
    return r;
}

int skew_rank(const ExtElement& omega) {
    if (omega.grade != 2) throw std::invalid_argument("skew_rank needs a 2-vector");
    Mat m(omega.dim, omega.dim);
    for (const auto& [k, v] : omega.coef) {
        const int i = std::countr_zero(k), j = 31 - std::countl_zero(k);
        m.set(i, j, v);
        m.set(j, i, -v);
    }
    return rank(m);
}

int wedge_map_rank(const ExtElement& omega, int q) {
    auto src = subsets(omega.dim, q), tgt = subsets(omega.dim, q + omega.grade);
    if (src.empty() || tgt.empty()) return 0;
    std::map<std::uint32_t, int> row;
    for (size_t i = 0; i < tgt.size(); ++i) row[tgt[i]] = static_cast<int>(i);
    Mat m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        ExtElement e{omega.dim, q, {{src[j], Fp(1)}}};
        for (const auto& [k, v] : wedge(omega, e).coef) m.set(row[k], static_cast<int>(j), v);
    }
    return rank(m);
}

const std::vector<OmegaTerm>& MonadShape::at(int p) const {
    static const std::vector<OmegaTerm> none;
    if (p < lo || p >= lo + static_cast<int>(terms.size())) return none;
    return terms[p - lo];
}

MonadShape beilinson_terms(const CohTable& t, int shift) {
    const int n = t.n;
    std::vector<std::vector<OmegaTerm>> all;
    for (int p = -n; p <= n; ++p) {
        std::vector<OmegaTerm> terms;
        for (int j = std::max(p, 0); j <= n && j - p <= n; ++j) {
            const int l = p - j + shift;
            if (!t.covers(l)) throw InsufficientTable("table does not cover twist " + std::to_string(l));
            const CohCell& c = t.at(j, l);
            if (!c.exact) throw InsufficientTable("indeterminate cell h^" + std::to_string(j) + " at twist " + std::to_string(l));
            if (c.h > 0) terms.push_back({c.h, j - p});
        }
        all.push_back(terms);
    }
    MonadShape s;
    int first = 0, last = static_cast<int>(all.size()) - 1;
    while (first <= last && all[first].empty()) ++first;
    while (last >= first && all[last].empty()) --last;
    if (first > last) return s;
    s.lo = -n + first;
    s.terms.assign(all.begin() + first, all.begin() + last + 1);
    return s;
}

std::vector<std::pair<int, long long>> omega_restriction(int p, int n, int n_sub) {
    if (p < 0 || p > n || n_sub < 0 || n_sub >= n) throw std::invalid_argument("omega_restriction: bad dimensions");
    const int codim = n - n_sub;
    std::vector<std::pair<int, long long>> out;
    for (int i = std::min(p, n_sub); i >= 0; --i) {
        const int j = p - i;
        if (j > codim) break;
        out.push_back({i, binom(codim, j)});
    }
    return out;
}

}  // namespace ggb
