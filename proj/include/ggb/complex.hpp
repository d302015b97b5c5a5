#pragma once

#include <vector>

#include "ggb/gmatrix.hpp"

namespace ggb {

/// Bounded cochain complex of sums of line bundles: terms at positions
/// lo..hi, differential d(p): C^p -> C^{p+1}.
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(int nvars, int lo, std::vector<std::vector<int>> terms, std::vector<GradedMatrix> diffs);

    int nvars() const { return nvars_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    int length() const { return static_cast<int>(terms_.size()); }
    // Empty outside lo..hi.
    const std::vector<int>& term(int p) const;
    int rank_at(int p) const { return static_cast<int>(term(p).size()); }
    // Zero matrix outside the range.
    GradedMatrix d(int p) const;
    const std::vector<GradedMatrix>& diffs() const { return diffs_; }

    bool d_squared_zero() const;

private:
    int nvars_ = 0;
    int lo_ = 0;
    std::vector<std::vector<int>> terms_;
    std::vector<GradedMatrix> diffs_;  // diffs_[k]: position lo+k -> lo+k+1
};

/// Koszul complex on f_1..f_m: C^{-k} = Λ^k(⊕ O(-deg f_i)), positions -m..0.
/// Basis of C^{-k}: k-subsets in lexicographic order;
/// d(e_I) = Σ_t (-1)^t f_{i_t} e_{I \ i_t}.
FreeComplex koszul(const std::vector<Form>& f);

FreeComplex twist(const FreeComplex& c, int l);
// shift(c,k)^p = c^{p+k}, differentials multiplied by (-1)^k.
FreeComplex shift(const FreeComplex& c, int k);
// dual(c)^p = (c^{-p})^∨ with transposed differentials.
FreeComplex dual(const FreeComplex& c);
FreeComplex tensor(const FreeComplex& a, const FreeComplex& b);
FreeComplex truncate(const FreeComplex& c, int lo, int hi);
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

/// Chain map f: src -> tgt of degree 0; maps[p - src.lo()] : src^p -> tgt^p.
struct ChainMap {
    FreeComplex src;
    FreeComplex tgt;
    std::vector<GradedMatrix> maps;
    GradedMatrix at(int p) const;
    bool commutes() const;
};

/// Mapping cone: cone^p = src^{p+1} ⊕ tgt^p, d(s,t) = (-d s, f s + d t).
FreeComplex cone(const ChainMap& f);

/// Cancel summand pairs joined by a nonzero constant entry.
FreeComplex trim(const FreeComplex& c);

struct ExactnessReport {
    int l_lo = 0, l_hi = 0;
    std::vector<int> positions;
    std::vector<std::vector<int>> homology;  // [position][l - l_lo]
    bool exact() const;
    bool exact_at(int position) const;
};

/// Homology dimension of each graded strand H^0(C(l)) for l in [l_lo, l_hi].
ExactnessReport verify_exact(const FreeComplex& c, int l_lo, int l_hi, std::vector<int> positions = {});
int strand_homology(const FreeComplex& c, int p, int l);
std::pair<int, int> default_window(const FreeComplex& c);

/// res: positions -2..0, [L -> F -> O(t)] resolving I_Y(t); a, b vanish on Y.
/// Returns [F^∨ -> L^∨ ⊕ O(deg a) ⊕ O(deg b) -> O(deg a + deg b)] at positions
/// -2..0 (computed from res twisted back by -t), resolving I_{Y'}(deg a + deg b).
/// Throws std::runtime_error("lift-not-found") when the comparison map does not exist.
FreeComplex ferrand_liaison(const FreeComplex& res, const Form& a, const Form& b);

/// Hilbert polynomial value Σ_p (-1)^p χ(O(c^p)(l)) on P^{nvars-1}.
long long euler_char(const FreeComplex& c, int l);
long long chi_line(int n, long long a);

/// Solve M·X = B degreewise for a graded matrix X with X.src = B.src and
/// X.tgt = M.src. Returns false if some column has no solution.
bool graded_lift(const GradedMatrix& m, const GradedMatrix& b, GradedMatrix& x);

}  // namespace ggb
