#include "ggb/gmatrix.hpp"

#include <stdexcept>

namespace ggb {

GradedMatrix::GradedMatrix(int nvars, std::vector<int> src, std::vector<int> tgt)
    : nvars_(nvars), src_(std::move(src)), tgt_(std::move(tgt)) {
    e_.reserve(src_.size() * tgt_.size());
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) e_.emplace_back(nvars_, std::max(0, tgt_[i] - src_[j]));
}

void GradedMatrix::set(int i, int j, const Form& f) {
    if (f.is_zero()) {
        e_[static_cast<size_t>(i) * cols() + j] = Form(nvars_, std::max(0, entry_degree(i, j)));
        return;
    }
    if (f.nvars() != nvars_) throw std::invalid_argument("matrix entry lives in the wrong ring");
    if (f.degree() != entry_degree(i, j))
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                                    std::to_string(f.degree()) + ", twists require " +
                                    std::to_string(entry_degree(i, j)));
    e_[static_cast<size_t>(i) * cols() + j] = f;
}

GradedMatrix GradedMatrix::parse(int nvars, std::vector<int> src, std::vector<int> tgt,
                                 const std::vector<std::vector<std::string>>& rows) {
    GradedMatrix m(nvars, std::move(src), std::move(tgt));
    if (static_cast<int>(rows.size()) != m.rows()) throw std::invalid_argument("row count does not match target twists");
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw std::invalid_argument("column count does not match source twists");
        for (int j = 0; j < m.cols(); ++j) m.set(i, j, Form::parse(rows[i][j], nvars, std::max(0, m.entry_degree(i, j))));
    }
    return m;
}

GradedMatrix GradedMatrix::row(const std::vector<Form>& f, int tgt_twist) {
    if (f.empty()) throw std::invalid_argument("empty row");
    std::vector<int> src;
    for (const auto& x : f) src.push_back(tgt_twist - x.degree());
    GradedMatrix m(f[0].nvars(), src, {tgt_twist});
    for (size_t j = 0; j < f.size(); ++j) m.set(0, static_cast<int>(j), f[j]);
    return m;
}

bool GradedMatrix::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return nvars_ == o.nvars_ && src_ == o.src_ && tgt_ == o.tgt_ && e_ == o.e_;
}

GradedMatrix GradedMatrix::twisted(int l) const {
    GradedMatrix m = *this;
    for (auto& s : m.src_) s += l;
    for (auto& t : m.tgt_) t += l;
    return m;
}

GradedMatrix GradedMatrix::dual() const {
    GradedMatrix d(nvars_, negated(tgt_), negated(src_));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) d.set(j, i, at(i, j));
    return d;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& n) const {
    if (src_ != n.tgt_) throw std::invalid_argument("composition: twists do not match");
    GradedMatrix r(nvars_, n.src_, tgt_);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < n.cols(); ++j) {
            Form s(nvars_, std::max(0, r.entry_degree(i, j)));
            for (int k = 0; k < cols(); ++k) {
                if (at(i, k).is_zero() || n.at(k, j).is_zero()) continue;
                s += at(i, k) * n.at(k, j);
            }
            r.set(i, j, s);
        }
    return r;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) throw std::invalid_argument("sum: twists do not match");
    GradedMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

GradedMatrix GradedMatrix::operator-() const {
    GradedMatrix r = *this;
    for (auto& f : r.e_) f = -f;
    return r;
}

GradedMatrix GradedMatrix::substitute(const std::vector<Form>& images) const {
    if (images.empty()) throw std::invalid_argument("empty substitution");
    const int idg = images[0].degree();
    std::vector<int> s = src_, t = tgt_;
    if (idg != 1) throw std::invalid_argument("substitution must be linear");
    GradedMatrix r(images[0].nvars(), s, t);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) r.set(i, j, at(i, j).substitute(images));
    return r;
}

std::string GradedMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < rows(); ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < cols(); ++j) s += (j ? ", " : "") + at(i, j).str();
        s += "]";
    }
    return s + "]";
}

GradedMatrix hstack(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.tgt() != b.tgt()) throw std::invalid_argument("hstack: targets differ");
    GradedMatrix r(a.nvars(), concat(a.src(), b.src()), a.tgt());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

GradedMatrix vstack(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.src() != b.src()) throw std::invalid_argument("vstack: sources differ");
    GradedMatrix r(a.nvars(), a.src(), concat(a.tgt(), b.tgt()));
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.set(i, j, a.at(i, j));
        for (int i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b.at(i, j));
    }
    return r;
}

GradedMatrix block_diag(const GradedMatrix& a, const GradedMatrix& b) {
    GradedMatrix r(a.nvars(), concat(a.src(), b.src()), concat(a.tgt(), b.tgt()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return r;
}

std::vector<int> piece_offsets(int nvars, const std::vector<int>& twists, int l) {
    std::vector<int> off{0};
    for (int t : twists) off.push_back(off.back() + mono_index(nvars, l + t).size());
    return off;
}

Mat graded_piece(const GradedMatrix& m, int l) {
    const int nv = m.nvars();
    auto roff = piece_offsets(nv, m.tgt(), l);
    auto coff = piece_offsets(nv, m.src(), l);
    Mat out(roff.back(), coff.back());
    const std::uint32_t p = prime();
    for (int j = 0; j < m.cols(); ++j) {
        const auto& sidx = mono_index(nv, l + m.src()[j]);
        for (int i = 0; i < m.rows(); ++i) {
            const Form& f = m.at(i, j);
            if (f.is_zero()) continue;
            const auto& tidx = mono_index(nv, l + m.tgt()[i]);
            for (int c = 0; c < sidx.size(); ++c) {
                for (const auto& [k, v] : f.terms()) {
                    int r = tidx.index(sidx.keys[c] + k);
                    std::uint32_t& cell = out.at(roff[i] + r, coff[j] + c);
                    cell = mod_add(cell, v.value(), p);
                }
            }
        }
    }
    return out;
}

Mat evaluate(const GradedMatrix& m, const Point& x) {
    Mat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j).eval(x));
    return out;
}

std::vector<int> negated(const std::vector<int>& v) {
    std::vector<int> r;
    for (int x : v) r.push_back(-x);
    return r;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace ggb
