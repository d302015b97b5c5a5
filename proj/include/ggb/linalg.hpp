#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggb/field.hpp"

namespace ggb {

/// Dense row-major matrix over F_p with raw residues.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    static Mat identity(int n);

    std::uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    std::uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    Fp get(int i, int j) const { return Fp::raw(at(i, j)); }
    void set(int i, int j, Fp v) { at(i, j) = v.value(); }
    bool is_zero() const;
    bool operator==(const Mat&) const = default;
};

Mat operator*(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Mat hconcat(const Mat& x, const Mat& y);

int rank(Mat m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);

/// Echelon kernel basis: one vector per free column, with a 1 in that column
/// and zeros in the other free columns. Deterministic.
std::vector<std::vector<Fp>> kernel_basis(const Mat& m);

/// Some x with m x = b, or nullopt.
std::optional<std::vector<Fp>> solve(const Mat& m, const std::vector<Fp>& b);

/// Incrementally maintained row space.
class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {}
    // Returns true if v was independent of the current span (and adds it).
    bool add(const std::vector<std::uint32_t>& v);
    bool contains(const std::vector<std::uint32_t>& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;
    int dim_;
    std::vector<std::vector<std::uint32_t>> rows_;  // pivot normalized to 1
    std::vector<int> piv_;
};

}  // namespace ggb
