#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggb/sheaf.hpp"

namespace ggb {

/// Rank and Chern classes c_1..c_n of a sheaf on P^n, as integers times
/// powers of the hyperplane class.
struct ChernVector {
    int n = 0;
    long long rank = 0;
    std::vector<long long> c;  // c[i-1] = c_i, size n

    long long ci(int i) const { return i == 0 ? 1 : (i <= static_cast<int>(c.size()) ? c[i - 1] : 0); }
    bool operator==(const ChernVector&) const = default;
    std::string str() const;
};

class ChernError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Total Chern class truncated mod H^{n+1}: coefficients of 1, H, .., H^n.
using TruncPoly = std::vector<long long>;
TruncPoly truncated_mul(const TruncPoly& a, const TruncPoly& b, int n);
TruncPoly truncated_inv(const TruncPoly& a, int n);  // throws ChernError if a[0] != ±1

ChernVector chern_of_line_sum(int n, const std::vector<int>& twists);
ChernVector chern_of_complex(const FreeComplex& c);
ChernVector chern_of_node(const NodePtr& node);
ChernVector chern_twist(const ChernVector& c, int l);
ChernVector chern_dual(const ChernVector& c);
ChernVector chern_sum(const ChernVector& a, const ChernVector& b);

/// Chern classes of P(E) = dual of the kernel of O^h -> E: c(P(E)) = 1/c(E^∨).
/// The rank is h0 - rank(E) when h0 is given, else left as rank(E).
ChernVector p_chern(const ChernVector& c, std::optional<long long> h0 = std::nullopt);

class RRDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// χ(E(l)) from the closed formulas for n = 2, 3, 4 (checks the integrality
/// conditions) and from Hirzebruch-Riemann-Roch for other n.
long long rr_chi(const ChernVector& c, long long l);
/// Hirzebruch-Riemann-Roch with exact rationals; any n ≤ 6.
long long hrr_chi(const ChernVector& c, long long l);

struct SchwarzenbergerResult {
    bool ok = false;
    int residue = 0;  // (2c1+3)(c3-c1c2) + c2^2 + c2 - 2c4 mod 12, in [0, 12)
};
SchwarzenbergerResult schwarzenberger(const ChernVector& c);

struct SurfaceInvariants {
    long long d = 1, pi = 0, q = 0, pg = 0;
};

/// (C+K)^2 of a smooth surface in P^4.
long long double_point(const SurfaceInvariants& s);

struct SurfaceBundleData {
    long long r = 0, c2 = 0, c3 = 0, c4 = 0;
    std::optional<bool> sectional_relation;  // π - d + 3 = h1(O_Y(1)) - q + p_g
};
SurfaceBundleData surface_bundle_data(const SurfaceInvariants& s, std::optional<long long> h1_oy1 = std::nullopt);

/// Necessary conditions on the Chern classes of a globally generated bundle;
/// returns the violated ones (empty when all hold).
std::vector<std::string> gg_constraints(const ChernVector& c);

}  // namespace ggb
