#pragma once

#include <optional>
#include <vector>

#include "ggb/gmatrix.hpp"

namespace ggb {

struct MinorTest {
    bool ok = false;           // ideal of r-minors contains S_d
    int degree = -1;           // that d
    bool exhausted = false;    // budget ran out before a verdict
    long long work = 0;        // determinant table entries computed
};

/// Decide whether the ideal generated by the r×r minors of m contains all
/// forms of some degree d ≤ max_degree, i.e. whether rank m(x) ≥ r at every
/// point of projective space over the algebraic closure. With `smallest`
/// the reported d is minimal; otherwise the search stops at the first hit.
MinorTest minor_ideal_test(const GradedMatrix& m, int r, int max_degree, bool smallest = true,
                           long long budget = 400000);

/// All nonzero r×r minors (row subsets lexicographic, then column subsets).
std::vector<Form> all_minors(const GradedMatrix& m, int r);

/// Epimorphism certificate: maximal-minor ideal (size = number of rows)
/// contains S_d for the returned smallest d ≤ max_degree.
std::optional<int> epi_certificate(const GradedMatrix& m, int max_degree);

/// Span comparison of two ideals in every degree ≤ bound.
bool ideals_agree_to_degree(const std::vector<Form>& a, const std::vector<Form>& b, int nvars, int bound);

}  // namespace ggb
