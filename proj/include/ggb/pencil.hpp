#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggb/gmatrix.hpp"

namespace ggb {

/// Dense univariate polynomial over F_p, coefficients low to high, no
/// trailing zeros (the zero polynomial is empty).
using UPoly = std::vector<Fp>;

int udeg(const UPoly& f);
UPoly utrim(UPoly f);
UPoly umonic(const UPoly& f);
UPoly uderiv(const UPoly& f);
UPoly umul(const UPoly& a, const UPoly& b);
std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b);
UPoly ugcd(UPoly a, UPoly b);
Fp ueval(const UPoly& f, Fp x);
/// Yun's squarefree decomposition: result[i] is the product of the monic
/// factors of multiplicity i+1. Requires deg f < p.
std::vector<UPoly> squarefree_decomposition(const UPoly& f);

/// Binary form (nvars = 2) restricted to the chart T1 = 1.
UPoly dehomogenize(const Form& f);
/// Multiplicity of the root (1:0) of a nonzero binary form.
int multiplicity_at_infinity(const Form& f);
/// True iff the nonzero binary forms among `fs` have a common zero on P^1
/// over the algebraic closure (all-zero input counts as a common zero).
bool binary_common_zero(const std::vector<Form>& fs);

/// 4x4 matrix ψ of binary linear forms: ψ(k, j) = coef(h_0j, X_k) T0 + coef(h_1j, X_k) T1.
GradedMatrix to_pencil(const GradedMatrix& a);
Form pencil_det(const GradedMatrix& psi);

/// A is injective (columns independent in k^2 ⊗ S_1) and ψ has rank ≥ 3
/// at every point of P^1.
bool is_injective_2x4(const GradedMatrix& a);
bool is_stable(const GradedMatrix& a);

enum class PencilTag { NotInjective, NotStable, Case1, Case2, Case3, Case4, Case5, Case6, Case7, Case8 };
const char* to_string(PencilTag t);

struct PencilClass {
    PencilTag tag = PencilTag::NotStable;
    std::vector<int> partition;  // multiplicities of D(ψ) (Cases 1-5)
    int m = 0;                   // Coker ψ ≅ O(m) (Cases 6-8)
    int e = 0;                   // degree of the kernel syzygy, e + m = 4
    Form det;                    // D(ψ) as a binary quartic
    bool roots_split = true;     // roots of det lie in F_p ∪ {∞}
    std::optional<GradedMatrix> canonical;
    std::string degeneracy;
    std::vector<Form> minor_generators;  // 2x2 minors of A
    std::optional<Point> special_point;  // Case 6 fat point
};

/// Parse a 2x4 matrix of linear forms (rows of comma-separated forms in x0..x3).
GradedMatrix parse_2x4(const std::vector<std::string>& rows);
GradedMatrix make_2x4(const std::vector<std::vector<Form>>& rows);

PencilClass classify_pencil(const GradedMatrix& a);

/// The 2x2 minors of A and `gens` span the same forms in every degree ≤ bound.
bool minor_ideal_equals(const GradedMatrix& a, const std::vector<Form>& gens, int bound);

/// Canonical matrix listed for a case (Case 1 with the given a0, a1).
GradedMatrix canonical_2x4(PencilTag tag, Fp a0 = Fp(2), Fp a1 = Fp(3));

}  // namespace ggb
