#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ggb/sheaf.hpp"

namespace ggb {

/// Element of Λ^grade of a `dim`-dimensional space (or of its dual), over the
/// standard basis e_I, I ⊂ {0..dim-1} sorted, stored as bitmasks.
struct ExtElement {
    int dim = 0;
    int grade = 0;
    std::map<std::uint32_t, Fp> coef;  // no zero values

    static ExtElement basis(int dim, const std::vector<int>& idx);  // e_{i1} ∧ .. ∧ e_{ik}, any order
    ExtElement operator+(const ExtElement& o) const;
    ExtElement operator*(Fp c) const;
    bool is_zero() const { return coef.empty(); }
    bool operator==(const ExtElement& o) const { return dim == o.dim && grade == o.grade && coef == o.coef; }
};

/// Sign of merging sorted index sets a then b into sorted order (0 if they meet).
int shuffle_sign(std::uint32_t a, std::uint32_t b);

ExtElement wedge(const ExtElement& a, const ExtElement& b);
/// φ·ω for φ ∈ Λ^{p+q} V^*, ω ∈ Λ^p V: the element of Λ^q V^* with
/// (φ·ω)(ξ) = φ(ω ∧ ξ). Throws std::invalid_argument when p > grade φ.
ExtElement contract(const ExtElement& phi, const ExtElement& omega);

/// Rank of the skew matrix of ω ∈ Λ^2 V.
int skew_rank(const ExtElement& omega);
/// Rank of ω ∧ - : Λ^q V -> Λ^{q + grade ω} V.
int wedge_map_rank(const ExtElement& omega, int q);

/// One Beilinson monad term: multiplicity · Ω^i(i).
struct OmegaTerm {
    int mult = 0;
    int i = 0;
    bool operator==(const OmegaTerm&) const = default;
};
/// Terms C^p for p in [lo, lo + terms.size()); empty positions trimmed at both ends.
struct MonadShape {
    int lo = 0;
    std::vector<std::vector<OmegaTerm>> terms;
    bool empty() const { return terms.empty(); }
    const std::vector<OmegaTerm>& at(int p) const;
};

class InsufficientTable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// C^p = ⊕_{j ≥ p} h^j(F(p-j)) Ω^{j-p}(j-p), with F = (table's sheaf)(shift).
MonadShape beilinson_terms(const CohTable& table, int shift = 0);

/// Ω^p_{P^n}(p) restricted to a linear P^{n'}: pairs (i, multiplicity C(n-n', p-i)).
std::vector<std::pair<int, long long>> omega_restriction(int p, int n, int n_sub);

}  // namespace ggb
