#pragma once

#include <string>
#include <vector>

#include "ggb/linalg.hpp"
#include "ggb/poly.hpp"

namespace ggb {

using Point = std::vector<Fp>;

/// Map  ⊕_j O(src[j]) -> ⊕_i O(tgt[i])  on P^{nvars-1}. Entry (i,j) is a form
/// of degree tgt[i] - src[j]; it must vanish when that degree is negative.
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(int nvars, std::vector<int> src, std::vector<int> tgt);

    // Rows given as strings; zero entries may be written "0".
    static GradedMatrix parse(int nvars, std::vector<int> src, std::vector<int> tgt,
                              const std::vector<std::vector<std::string>>& rows);
    // Single-row / single-column helpers: (f_1..f_s): ⊕ O(t - deg f_j) -> O(t).
    static GradedMatrix row(const std::vector<Form>& f, int tgt_twist);

    int nvars() const { return nvars_; }
    int rows() const { return static_cast<int>(tgt_.size()); }
    int cols() const { return static_cast<int>(src_.size()); }
    const std::vector<int>& src() const { return src_; }
    const std::vector<int>& tgt() const { return tgt_; }
    int entry_degree(int i, int j) const { return tgt_[i] - src_[j]; }

    const Form& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols() + j]; }
    void set(int i, int j, const Form& f);

    bool is_zero() const;
    bool operator==(const GradedMatrix& o) const;

    GradedMatrix twisted(int l) const;
    // Dual map: negated twists, transposed entries.
    GradedMatrix dual() const;
    GradedMatrix operator*(const GradedMatrix& n) const;  // this ∘ n
    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-() const;
    GradedMatrix substitute(const std::vector<Form>& images) const;

    std::string str() const;

private:
    int nvars_ = 0;
    std::vector<int> src_, tgt_;
    std::vector<Form> e_;
};

GradedMatrix hstack(const GradedMatrix& a, const GradedMatrix& b);  // same tgt
GradedMatrix vstack(const GradedMatrix& a, const GradedMatrix& b);  // same src
GradedMatrix block_diag(const GradedMatrix& a, const GradedMatrix& b);

/// Linear map ⊕_j S_{l+src[j]} -> ⊕_i S_{l+tgt[i]} in monomial_basis coordinates.
Mat graded_piece(const GradedMatrix& m, int l);

/// Offsets of the blocks of ⊕ S_{l+twist[k]}; last entry is the total dimension.
std::vector<int> piece_offsets(int nvars, const std::vector<int>& twists, int l);

Mat evaluate(const GradedMatrix& m, const Point& x);

std::vector<int> negated(const std::vector<int>& v);
std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ggb
