#include "ggb/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggb {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    const std::uint32_t p = prime();
    Mat r(x.rows, y.cols);
    std::vector<std::uint64_t> acc(y.cols);
    for (int i = 0; i < x.rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < x.cols; ++k) {
            std::uint64_t v = x.at(i, k);
            if (!v) continue;
            const std::uint32_t* row = &y.a[static_cast<size_t>(k) * y.cols];
            for (int j = 0; j < y.cols; ++j) acc[j] = (acc[j] + v * row[j]) % p;
        }
        for (int j = 0; j < y.cols; ++j) r.at(i, j) = static_cast<std::uint32_t>(acc[j]);
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Mat hconcat(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw std::invalid_argument("hconcat row mismatch");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

namespace {

// Forward elimination to reduced row echelon form. If `reduce_above` is
// false only rows below the pivot are cleared (enough for rank).
std::vector<int> eliminate(Mat& m, bool reduce_above) {
    const std::uint32_t p = prime();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        std::uint32_t inv = mod_inv(m.at(r, c), p);
        std::uint32_t* prow = &m.a[static_cast<size_t>(r) * m.cols];
        for (int j = c; j < m.cols; ++j) prow[j] = mod_mul(prow[j], inv, p);
        for (int i = reduce_above ? 0 : r + 1; i < m.rows; ++i) {
            if (i == r) continue;
            std::uint32_t f = m.at(i, c);
            if (!f) continue;
            std::uint32_t* row = &m.a[static_cast<size_t>(i) * m.cols];
            std::uint32_t nf = p - f;
            for (int j = c; j < m.cols; ++j)
                if (prow[j]) row[j] = static_cast<std::uint32_t>((row[j] + static_cast<std::uint64_t>(nf) * prow[j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Mat m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    // eliminate along the shorter side
    if (m.cols < m.rows) m = transpose(m);
    return static_cast<int>(eliminate(m, false).size());
}

std::vector<int> rref(Mat& m) { return eliminate(m, true); }

std::vector<std::vector<Fp>> kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> piv = rref(r);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<Fp>> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Fp> v(m.cols);
        v[f] = Fp(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -Fp::raw(r.at(static_cast<int>(i), f));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Fp>> solve(const Mat& m, const std::vector<Fp>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve: rhs length mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i].value();
    }
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
    std::vector<Fp> x(m.cols);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = Fp::raw(aug.at(static_cast<int>(i), m.cols));
    return x;
}

std::vector<std::uint32_t> RowSpace::reduce(std::vector<std::uint32_t> v) const {
    const std::uint32_t p = prime();
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = v[piv_[r]];
        if (!f) continue;
        std::uint32_t nf = p - f;
        const auto& row = rows_[r];
        for (int j = piv_[r]; j < dim_; ++j)
            if (row[j]) v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(nf) * row[j]) % p);
    }
    return v;
}

bool RowSpace::contains(const std::vector<std::uint32_t>& v) const {
    auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool RowSpace::add(const std::vector<std::uint32_t>& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowSpace: wrong vector length");
    auto w = reduce(v);
    int c = 0;
    while (c < dim_ && w[c] == 0) ++c;
    if (c == dim_) return false;
    const std::uint32_t p = prime();
    std::uint32_t inv = mod_inv(w[c], p);
    for (int j = c; j < dim_; ++j) w[j] = mod_mul(w[j], inv, p);
    // keep rows ordered by pivot so reduce() works in one pass
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), c) - piv_.begin();
    // clear column c from existing rows to keep them reduced against new row
    for (auto& row : rows_) {
        std::uint32_t f = row[c];
        if (!f) continue;
        std::uint32_t nf = p - f;
        for (int j = c; j < dim_; ++j)
            if (w[j]) row[j] = static_cast<std::uint32_t>((row[j] + static_cast<std::uint64_t>(nf) * w[j]) % p);
    }
    rows_.insert(rows_.begin() + pos, std::move(w));
    piv_.insert(piv_.begin() + pos, c);
    return true;
}

}  // namespace ggb
