#include "ggb/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ggb {

namespace {
const std::vector<int> kEmpty;

GradedMatrix kron_left(const GradedMatrix& m, const std::vector<int>& b) {
    // m ⊗ id_B, summand order (i, j) with i from m, j from b
    std::vector<int> src, tgt;
    for (int s : m.src())
        for (int t : b) src.push_back(s + t);
    for (int s : m.tgt())
        for (int t : b) tgt.push_back(s + t);
    GradedMatrix r(m.nvars(), src, tgt);
    const int nb = static_cast<int>(b.size());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (int k = 0; k < nb; ++k) r.set(i * nb + k, j * nb + k, m.at(i, j));
    return r;
}

GradedMatrix kron_right(const std::vector<int>& a, const GradedMatrix& m) {
    // id_A ⊗ m
    std::vector<int> src, tgt;
    for (int s : a)
        for (int t : m.src()) src.push_back(s + t);
    for (int s : a)
        for (int t : m.tgt()) tgt.push_back(s + t);
    GradedMatrix r(m.nvars(), src, tgt);
    const int na = static_cast<int>(a.size());
    for (int k = 0; k < na; ++k)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r.set(k * m.rows() + i, k * m.cols() + j, m.at(i, j));
    return r;
}

GradedMatrix zero_map(int nvars, const std::vector<int>& src, const std::vector<int>& tgt) {
    return GradedMatrix(nvars, src, tgt);
}

}  // namespace

FreeComplex::FreeComplex(int nvars, int lo, std::vector<std::vector<int>> terms, std::vector<GradedMatrix> diffs)
    : nvars_(nvars), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    if (terms_.empty()) throw std::invalid_argument("complex needs at least one term");
    if (diffs_.size() + 1 != terms_.size()) throw std::invalid_argument("complex: need one differential per adjacent pair");
    for (size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].src() != terms_[k] || diffs_[k].tgt() != terms_[k + 1])
            throw std::invalid_argument("complex: differential " + std::to_string(lo_ + static_cast<int>(k)) +
                                        " does not match its terms");
        if (diffs_[k].nvars() != nvars_) throw std::invalid_argument("complex: ring mismatch");
    }
}

const std::vector<int>& FreeComplex::term(int p) const {
    if (p < lo_ || p > hi()) return kEmpty;
    return terms_[p - lo_];
}

GradedMatrix FreeComplex::d(int p) const {
    if (p < lo_ || p >= hi()) return zero_map(nvars_, term(p), term(p + 1));
    return diffs_[p - lo_];
}

bool FreeComplex::d_squared_zero() const {
    for (size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!(diffs_[k + 1] * diffs_[k]).is_zero()) return false;
    return true;
}

FreeComplex koszul(const std::vector<Form>& f) {
    if (f.empty()) throw std::invalid_argument("koszul needs at least one form");
    const int m = static_cast<int>(f.size());
    const int nv = f[0].nvars();
    for (const auto& x : f)
        if (x.is_zero()) throw std::invalid_argument("koszul: zero form");
    // subsets by size, lexicographic (as sorted vectors)
    std::vector<std::vector<std::vector<int>>> subsets(m + 1);
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) s.push_back(i);
        subsets[s.size()].push_back(s);
    }
    for (auto& v : subsets) std::sort(v.begin(), v.end());
    auto twist_of = [&](const std::vector<int>& s) {
        int t = 0;
        for (int i : s) t -= f[i].degree();
        return t;
    };
    std::vector<std::vector<int>> terms;
    for (int k = m; k >= 0; --k) {
        std::vector<int> tw;
        for (const auto& s : subsets[k]) tw.push_back(twist_of(s));
        terms.push_back(tw);
    }
    std::vector<GradedMatrix> diffs;
    for (int k = m; k >= 1; --k) {
        const auto& srcs = subsets[k];
        const auto& tgts = subsets[k - 1];
        std::map<std::vector<int>, int> tindex;
        for (size_t r = 0; r < tgts.size(); ++r) tindex[tgts[r]] = static_cast<int>(r);
        GradedMatrix d(nv, terms[m - k], terms[m - k + 1]);
        for (size_t c = 0; c < srcs.size(); ++c) {
            for (int t = 0; t < k; ++t) {
                std::vector<int> rest = srcs[c];
                rest.erase(rest.begin() + t);
                Form e = f[srcs[c][t]];
                if (t % 2) e = -e;
                d.set(tindex[rest], static_cast<int>(c), e);
            }
        }
        diffs.push_back(d);
    }
    return FreeComplex(nv, -m, terms, diffs);
}

FreeComplex twist(const FreeComplex& c, int l) {
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = c.lo(); p <= c.hi(); ++p) {
        auto t = c.term(p);
        for (auto& x : t) x += l;
        terms.push_back(t);
        if (p < c.hi()) diffs.push_back(c.d(p).twisted(l));
    }
    return FreeComplex(c.nvars(), c.lo(), terms, diffs);
}

FreeComplex shift(const FreeComplex& c, int k) {
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = c.lo(); p <= c.hi(); ++p) {
        terms.push_back(c.term(p));
        if (p < c.hi()) diffs.push_back(k % 2 ? -c.d(p) : c.d(p));
    }
    return FreeComplex(c.nvars(), c.lo() - k, terms, diffs);
}

FreeComplex dual(const FreeComplex& c) {
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = c.hi(); p >= c.lo(); --p) {
        terms.push_back(negated(c.term(p)));
        if (p > c.lo()) diffs.push_back(c.d(p - 1).dual());
    }
    return FreeComplex(c.nvars(), -c.hi(), terms, diffs);
}

FreeComplex tensor(const FreeComplex& a, const FreeComplex& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("tensor: ring mismatch");
    const int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
    // summand layout of position k: blocks (p, k-p) for p ascending
    auto blocks = [&](int k) {
        std::vector<std::pair<int, int>> bl;
        for (int p = a.lo(); p <= a.hi(); ++p)
            if (k - p >= b.lo() && k - p <= b.hi()) bl.emplace_back(p, k - p);
        return bl;
    };
    auto term_of = [&](int k) {
        std::vector<int> t;
        for (auto [p, q] : blocks(k))
            for (int x : a.term(p))
                for (int y : b.term(q)) t.push_back(x + y);
        return t;
    };
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int k = lo; k <= hi; ++k) terms.push_back(term_of(k));
    for (int k = lo; k < hi; ++k) {
        GradedMatrix d(a.nvars(), terms[k - lo], terms[k + 1 - lo]);
        auto sb = blocks(k), tb = blocks(k + 1);
        auto offset = [&](const std::vector<std::pair<int, int>>& bl, std::pair<int, int> key) {
            int off = 0;
            for (auto blk : bl) {
                if (blk == key) return off;
                off += a.rank_at(blk.first) * b.rank_at(blk.second);
            }
            return -1;
        };
        for (auto [p, q] : sb) {
            int so = offset(sb, {p, q});
            // d_A ⊗ 1 into (p+1, q)
            int to = offset(tb, {p + 1, q});
            if (to >= 0) {
                GradedMatrix m = kron_left(a.d(p), b.term(q));
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j) d.set(to + i, so + j, m.at(i, j));
            }
            // (-1)^p 1 ⊗ d_B into (p, q+1)
            to = offset(tb, {p, q + 1});
            if (to >= 0) {
                GradedMatrix m = kron_right(a.term(p), b.d(q));
                bool neg = ((p % 2) + 2) % 2 == 1;
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j) d.set(to + i, so + j, neg ? -m.at(i, j) : m.at(i, j));
            }
        }
        diffs.push_back(d);
    }
    return FreeComplex(a.nvars(), lo, terms, diffs);
}

FreeComplex truncate(const FreeComplex& c, int lo, int hi) {
    lo = std::max(lo, c.lo());
    hi = std::min(hi, c.hi());
    if (lo > hi) throw std::invalid_argument("truncate: empty range");
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = lo; p <= hi; ++p) {
        terms.push_back(c.term(p));
        if (p < hi) diffs.push_back(c.d(p));
    }
    return FreeComplex(c.nvars(), lo, terms, diffs);
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = lo; p <= hi; ++p) {
        terms.push_back(concat(a.term(p), b.term(p)));
        if (p < hi) diffs.push_back(block_diag(a.d(p), b.d(p)));
    }
    return FreeComplex(a.nvars(), lo, terms, diffs);
}

GradedMatrix ChainMap::at(int p) const {
    if (p < src.lo() || p > src.hi() || p < tgt.lo() || p > tgt.hi())
        return GradedMatrix(src.nvars(), src.term(p), tgt.term(p));
    return maps.at(p - src.lo());
}

bool ChainMap::commutes() const {
    for (int p = std::min(src.lo(), tgt.lo()) - 1; p <= std::max(src.hi(), tgt.hi()); ++p) {
        GradedMatrix lhs = at(p + 1) * src.d(p);
        GradedMatrix rhs = tgt.d(p) * at(p);
        if (!(lhs + (-rhs)).is_zero()) return false;
    }
    return true;
}

FreeComplex cone(const ChainMap& f) {
    if (!f.commutes()) throw std::invalid_argument("cone: not a chain map");
    const FreeComplex& s = f.src;
    const FreeComplex& t = f.tgt;
    const int lo = std::min(s.lo() - 1, t.lo()), hi = std::max(s.hi() - 1, t.hi());
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = lo; p <= hi; ++p) terms.push_back(concat(s.term(p + 1), t.term(p)));
    for (int p = lo; p < hi; ++p) {
        GradedMatrix top = hstack(-s.d(p + 1), GradedMatrix(s.nvars(), t.term(p), s.term(p + 2)));
        GradedMatrix bottom = hstack(f.at(p + 1), t.d(p));
        diffs.push_back(vstack(top, bottom));
    }
    return FreeComplex(s.nvars(), lo, terms, diffs);
}

FreeComplex trim(const FreeComplex& c0) {
    FreeComplex c = c0;
    for (;;) {
        bool changed = false;
        for (int p = c.lo(); p < c.hi() && !changed; ++p) {
            GradedMatrix d = c.d(p);
            for (int i = 0; i < d.rows() && !changed; ++i)
                for (int j = 0; j < d.cols() && !changed; ++j) {
                    if (d.entry_degree(i, j) != 0 || d.at(i, j).is_zero()) continue;
                    Fp inv = d.at(i, j).terms()[0].second.inv();
                    // new d(p): drop row i, col j, with Schur correction
                    std::vector<int> nsrc, ntgt;
                    for (int k = 0; k < d.cols(); ++k)
                        if (k != j) nsrc.push_back(d.src()[k]);
                    for (int k = 0; k < d.rows(); ++k)
                        if (k != i) ntgt.push_back(d.tgt()[k]);
                    GradedMatrix nd(c.nvars(), nsrc, ntgt);
                    for (int r = 0, rr = 0; r < d.rows(); ++r) {
                        if (r == i) continue;
                        for (int q = 0, qq = 0; q < d.cols(); ++q) {
                            if (q == j) continue;
                            Form v = d.at(r, q);
                            if (!d.at(r, j).is_zero() && !d.at(i, q).is_zero()) v -= d.at(r, j) * d.at(i, q) * inv;
                            nd.set(rr, qq, v);
                            ++qq;
                        }
                        ++rr;
                    }
                    std::vector<std::vector<int>> terms;
                    std::vector<GradedMatrix> diffs;
                    for (int q = c.lo(); q <= c.hi(); ++q) {
                        if (q == p)
                            terms.push_back(nsrc);
                        else if (q == p + 1)
                            terms.push_back(ntgt);
                        else
                            terms.push_back(c.term(q));
                    }
                    for (int q = c.lo(); q < c.hi(); ++q) {
                        if (q == p) {
                            diffs.push_back(nd);
                        } else if (q == p - 1) {
                            GradedMatrix m = c.d(q), r(c.nvars(), m.src(), nsrc);
                            for (int a = 0, aa = 0; a < m.rows(); ++a) {
                                if (a == j) continue;
                                for (int b = 0; b < m.cols(); ++b) r.set(aa, b, m.at(a, b));
                                ++aa;
                            }
                            diffs.push_back(r);
                        } else if (q == p + 1) {
                            GradedMatrix m = c.d(q), r(c.nvars(), ntgt, m.tgt());
                            for (int b = 0, bb = 0; b < m.cols(); ++b) {
                                if (b == i) continue;
                                for (int a = 0; a < m.rows(); ++a) r.set(a, bb, m.at(a, b));
                                ++bb;
                            }
                            diffs.push_back(r);
                        } else {
                            diffs.push_back(c.d(q));
                        }
                    }
                    c = FreeComplex(c.nvars(), c.lo(), terms, diffs);
                    changed = true;
                }
        }
        if (!changed) return c;
    }
}

bool ExactnessReport::exact_at(int position) const {
    for (size_t k = 0; k < positions.size(); ++k)
        if (positions[k] == position)
            return std::all_of(homology[k].begin(), homology[k].end(), [](int h) { return h == 0; });
    return false;
}

bool ExactnessReport::exact() const {
    for (int p : positions)
        if (!exact_at(p)) return false;
    return true;
}

int strand_homology(const FreeComplex& c, int p, int l) {
    const int dim = piece_offsets(c.nvars(), c.term(p), l).back();
    if (dim == 0) return 0;
    int r_out = p < c.hi() ? rank(graded_piece(c.d(p), l)) : 0;
    int r_in = p > c.lo() ? rank(graded_piece(c.d(p - 1), l)) : 0;
    return dim - r_out - r_in;
}

ExactnessReport verify_exact(const FreeComplex& c, int l_lo, int l_hi, std::vector<int> positions) {
    if (positions.empty())
        for (int p = c.lo() + 1; p < c.hi(); ++p) positions.push_back(p);
    ExactnessReport rep;
    rep.l_lo = l_lo;
    rep.l_hi = l_hi;
    rep.positions = positions;
    for (int p : positions) {
        std::vector<int> row;
        for (int l = l_lo; l <= l_hi; ++l) row.push_back(strand_homology(c, p, l));
        rep.homology.push_back(row);
    }
    return rep;
}

std::pair<int, int> default_window(const FreeComplex& c) {
    int maxdeg = 1;
    for (int p = c.lo(); p < c.hi(); ++p) {
        GradedMatrix d = c.d(p);
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) maxdeg = std::max(maxdeg, d.entry_degree(i, j));
    }
    return {-c.nvars() * maxdeg, c.nvars() * maxdeg};
}

long long chi_line(int n, long long a) {
    // C(n+a, n) as a polynomial in a
    long long num = 1;
    for (int k = 1; k <= n; ++k) num *= (a + k);
    long long den = 1;
    for (int k = 2; k <= n; ++k) den *= k;
    return num / den;
}

long long euler_char(const FreeComplex& c, int l) {
    const int n = c.nvars() - 1;
    long long s = 0;
    for (int p = c.lo(); p <= c.hi(); ++p) {
        long long t = 0;
        for (int a : c.term(p)) t += chi_line(n, a + l);
        s += (p % 2 == 0) ? t : -t;
    }
    return s;
}

bool graded_lift(const GradedMatrix& m, const GradedMatrix& b, GradedMatrix& x) {
    if (b.tgt() != m.tgt()) throw std::invalid_argument("graded_lift: target mismatch");
    x = GradedMatrix(m.nvars(), b.src(), m.src());
    for (int j = 0; j < b.cols(); ++j) {
        const int l = -b.src()[j];
        Mat piece = graded_piece(m, l);
        auto roff = piece_offsets(m.nvars(), m.tgt(), l);
        std::vector<Fp> rhs(roff.back());
        for (int i = 0; i < b.rows(); ++i) {
            if (b.at(i, j).is_zero()) continue;
            auto cc = b.at(i, j).coords();
            for (size_t k = 0; k < cc.size(); ++k) rhs[roff[i] + k] = cc[k];
        }
        auto sol = solve(piece, rhs);
        if (!sol) return false;
        auto coff = piece_offsets(m.nvars(), m.src(), l);
        for (int k = 0; k < m.cols(); ++k) {
            int deg = l + m.src()[k];
            if (deg < 0) continue;
            std::vector<Fp> cc(sol->begin() + coff[k], sol->begin() + coff[k + 1]);
            x.set(k, j, Form::from_coords(m.nvars(), deg, cc));
        }
    }
    return true;
}

FreeComplex ferrand_liaison(const FreeComplex& res_in, const Form& a, const Form& b) {
    if (res_in.lo() != -2 || res_in.hi() != 0 || res_in.rank_at(0) != 1)
        throw std::invalid_argument("ferrand_liaison: expected a resolution [L -> F -> O(t)] at positions -2..0");
    const int t = res_in.term(0)[0];
    FreeComplex res = twist(res_in, -t);
    const int nv = res.nvars();
    const int da = a.degree(), db = b.degree();
    const GradedMatrix& D = res.d(-2);  // L -> F
    const GradedMatrix& f = res.d(-1);  // F -> O
    // G: O(-a) ⊕ O(-b) -> F with f G = (a b)
    GradedMatrix ab = GradedMatrix::row({a, b}, 0);
    GradedMatrix G;
    if (!graded_lift(f, ab, G)) throw std::runtime_error("lift-not-found");
    // H: O(-a-b) -> L with D H = G (-b, a)^T
    GradedMatrix kd(nv, {-da - db}, {-da, -db});
    kd.set(0, 0, -b);
    kd.set(1, 0, a);
    GradedMatrix GK = G * kd;
    GradedMatrix H;
    if (!graded_lift(D, GK, H)) throw std::runtime_error("lift-not-found");
    // reduced cone [O(-a-b) -> L ⊕ O(-a) ⊕ O(-b) -> F], then dualize
    GradedMatrix kb(nv, {-da - db}, {-da, -db});
    kb.set(0, 0, b);
    kb.set(1, 0, -a);
    GradedMatrix first = vstack(H, kb);
    GradedMatrix second = hstack(D, G);
    FreeComplex cone_red(nv, -2, {{-da - db}, concat(res.term(-2), {-da, -db}), res.term(-1)}, {first, second});
    if (!cone_red.d_squared_zero()) throw std::logic_error("ferrand_liaison: internal sign error");
    return shift(dual(cone_red), 2);
}

}  // namespace ggb
