#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggb/sheaf.hpp"

namespace ggb {

/// Line through two independent points; X_i <- u0 p_i + u1 q_i.
struct LineParam {
    Point p, q;
    std::vector<Form> substitution() const;  // images of X_i as binary linear forms
};

/// Line cut out by linear forms (n - 1 independent ones on P^n).
LineParam line_from_equations(const std::vector<Form>& eqs);

/// Degree-d Cayley-Bacharach for distinct points of P^2.
bool cayley_bacharach(const std::vector<Point>& pts, int d);

class DegenerateRestriction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Splitting type of a node restricted to a line, nonincreasing.
std::vector<int> splitting_type_on_line(const NodePtr& node, const LineParam& line);

struct GGHints {
    std::vector<Point> points;
    std::vector<LineParam> lines;
};

enum class GGTag { Generated, GeneratedUpToSampling, NotGenerated };
const char* to_string(GGTag t);

struct GGVerdict {
    GGTag tag = GGTag::GeneratedUpToSampling;
    int trials = 0;
    std::uint64_t seed = 0;
    int h0 = 0;
    std::optional<Point> witness_point;
    std::optional<LineParam> witness_line;
    std::vector<int> witness_split;  // splitting type along witness_line
    std::string detail;
};

/// Sampled check of the evaluation map H^0(E) ⊗ O -> E, plus exact witnesses
/// from hint lines. With `try_exact` a minor-ideal certificate upgrades a
/// positive verdict to Generated when it fits the budget.
GGVerdict is_globally_generated(const NodePtr& node, int trials, std::uint64_t seed, const GGHints& hints = {},
                                bool try_exact = false);

/// Re-check a negative verdict's witness.
bool witness_holds(const NodePtr& node, const GGVerdict& v);

/// L meets none of the six lines joining pairs of Z (Z: four non-coplanar
/// points of P^3 off L).
bool edge_avoidance(const LineParam& l, const std::vector<Point>& z);

/// Λ: three bihomogeneous forms of bidegree (1,3) in u0,u1; v0,v1 (written
/// as forms in 4 variables ordered u0,u1,v0,v1). True iff no nonzero element
/// of Λ is divisible by a (1,0)-form, over the algebraic closure.
bool quadric_line_component_test(const std::vector<Form>& lambda);

}  // namespace ggb
