#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggb/complex.hpp"

namespace ggb {

class UncertifiedNode : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotGloballyGenerated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Point random_point(int nvars, std::mt19937_64& rng);

enum class NodeKind { LineSum, KerEpi, KerInto, KerFrom, SubQuot, Twist, DirectSum, Dual, Monad, PTransform };
const char* to_string(NodeKind k);

enum class CertKind { Exact, Sampled, Inherited };

struct Certificate {
    CertKind kind = CertKind::Exact;
    std::vector<int> ranks;         // generic rank of each differential
    std::vector<int> minor_degree;  // certified degree, -1 when sampled or trivial
    int sampled_points = 0;
};

struct CertOptions {
    long long minor_budget = 400000;
    int max_space_dim = 600;  // largest S_d used by the minor test
    int sample_points = 200;  // fallback sampling
    std::uint64_t seed = 20240601;
};

class SheafNode;
using NodePtr = std::shared_ptr<const SheafNode>;

/// A sheaf on P^n given as the only cohomology (at position 0) of a complex
/// of line-bundle sums whose differentials have constant rank everywhere.
class SheafNode : public std::enable_shared_from_this<SheafNode> {
public:
    static NodePtr line_sum(int n, std::vector<int> twists);
    // Kernel of an epimorphism of line-bundle sums.
    static NodePtr ker_epi(const GradedMatrix& m, const CertOptions& opt = {});
    // Kernel of an epimorphism A -> N, m: A -> N^0 with d^0 m = 0.
    static NodePtr ker_into(const GradedMatrix& m, NodePtr target, const CertOptions& opt = {});
    // Kernel of an epimorphism N -> B, m: N^0 -> B with m d^{-1} = 0.
    static NodePtr ker_from(NodePtr source, const GradedMatrix& m, const CertOptions& opt = {});
    // Quotient of N by a subbundle A, m: A -> N^0 with d^0 m = 0.
    static NodePtr sub_quot(const GradedMatrix& m, NodePtr target, const CertOptions& opt = {});
    static NodePtr twist(NodePtr node, int l);
    static NodePtr direct_sum(const std::vector<NodePtr>& nodes);
    static NodePtr dual(NodePtr node);
    // Cohomology of c at position `at`.
    static NodePtr monad(const FreeComplex& c, int at, const CertOptions& opt = {});
    // P(E): dual of the kernel of H^0(E) ⊗ O -> E. Throws NotGloballyGenerated.
    static NodePtr p_transform(NodePtr node, const CertOptions& opt = {});

    NodeKind kind() const { return kind_; }
    int n() const { return n_; }
    int nvars() const { return n_ + 1; }
    int rank() const;
    const FreeComplex& model() const { return model_; }
    const FreeComplex& dual_model() const { return dual_model_; }
    const std::vector<NodePtr>& children() const { return children_; }
    const GradedMatrix& matrix() const { return matrix_; }
    int twist_amount() const { return twist_; }
    const Certificate& certificate() const { return cert_; }
    std::string describe() const;

    // Strand homology of the model at position p, twist l (cached).
    int row0(int p, int l) const;
    // Strand homology of the H^n row at position p, twist l (cached).
    int rown(int p, int l) const;

    SheafNode(NodeKind kind, int n, FreeComplex model);

private:
    NodeKind kind_;
    int n_;
    FreeComplex model_;
    FreeComplex dual_model_;
    std::vector<NodePtr> children_;
    GradedMatrix matrix_;
    int twist_ = 0;
    Certificate cert_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, int> row0_cache_, rown_cache_;
};

/// Verify constant-rank exactness away from position 0. Throws UncertifiedNode.
Certificate certify_model(const FreeComplex& c, const CertOptions& opt = {});

struct CohCell {
    int h = 0;  // value when exact, -1 otherwise
    int lo = 0;
    int hi = 0;
    bool exact = true;
};

struct CohTable {
    int n = 0;
    int l_lo = 0, l_hi = -1;
    std::vector<std::vector<CohCell>> cells;  // [l - l_lo][i]

    bool covers(int l) const { return l >= l_lo && l <= l_hi; }
    const CohCell& at(int i, int l) const;
    CohCell& at(int i, int l);
    int h(int i, int l) const;  // throws if indeterminate or out of window
    bool column_exact(int l) const;
    long long chi(int l) const;  // only for exact columns

    static CohTable zeros(int n, int l_lo, int l_hi);
};

std::pair<int, int> default_coh_window(int n);

CohTable coh_table(const NodePtr& node, int l_lo, int l_hi);
// Same engine on a bare complex (cohomology assumed at position 0), any n.
CohTable coh_table_of_model(const FreeComplex& c, int l_lo, int l_hi);

struct SectionModel {
    int l = 0;
    std::vector<int> ambient;                 // twists of C^0 (before twisting by l)
    std::vector<std::vector<Form>> sections;  // basis of H^0(E(l)) inside ⊕ O(ambient + l)
    int hn_dim = 0;                           // h^n(E(l))
    std::vector<std::vector<Form>> hn_dual;   // basis of H^0(E^∨(-l-n-1)) (Serre dual model)
    int dim() const { return static_cast<int>(sections.size()); }
};

/// Explicit H^0 basis; throws std::runtime_error when H^0 is not carried by
/// the degree-l strand of position 0 alone.
SectionModel h0_basis(const NodePtr& node, int l);

/// The sections as a graded matrix O^h -> ⊕ O(C^0 twists) (for l = 0).
GradedMatrix section_matrix(const NodePtr& node);

}  // namespace ggb
