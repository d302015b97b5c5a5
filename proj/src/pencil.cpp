#include "ggb/pencil.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ggb/minors.hpp"

namespace ggb {

// ------------------------------------------------------------ univariate

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly utrim(UPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

UPoly umonic(const UPoly& f0) {
    UPoly f = utrim(f0);
    if (f.empty()) return f;
    Fp inv = f.back().inv();
    for (auto& c : f) c *= inv;
    return f;
}

UPoly uderiv(const UPoly& f) {
    UPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Fp(static_cast<long long>(i)));
    return utrim(d);
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return utrim(r);
}

std::pair<UPoly, UPoly> udivmod(const UPoly& a0, const UPoly& b0) {
    UPoly a = utrim(a0), b = utrim(b0);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    UPoly q(a.size() - b.size() + 1);
    Fp inv = b.back().inv();
    for (int i = udeg(a) - udeg(b); i >= 0; --i) {
        Fp c = a[i + udeg(b)] * inv;
        q[i] = c;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    return {utrim(q), utrim(a)};
}

UPoly ugcd(UPoly a, UPoly b) {
    a = utrim(a);
    b = utrim(b);
    while (!b.empty()) {
        UPoly r = udivmod(a, b).second;
        a = b;
        b = r;
    }
    return umonic(a);
}

Fp ueval(const UPoly& f, Fp x) {
    Fp r(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& f0) {
    UPoly f = umonic(f0);
    std::vector<UPoly> out;
    if (udeg(f) <= 0) return out;
    if (udeg(f) >= static_cast<int>(prime())) throw std::domain_error("degree not below the characteristic");
    UPoly a = ugcd(f, uderiv(f));
    UPoly b = udivmod(f, a).first;
    UPoly c = udivmod(uderiv(f), a).first;
    UPoly d = utrim(c);
    {
        UPoly bd = uderiv(b);
        d.resize(std::max(d.size(), bd.size()));
        for (size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
        d = utrim(d);
    }
    while (udeg(b) > 0) {
        UPoly g = ugcd(b, d);
        out.push_back(g);
        b = udivmod(b, g).first;
        c = udivmod(d, g).first;
        UPoly bd = uderiv(b);
        d = c;
        d.resize(std::max(d.size(), bd.size()));
        for (size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
        d = utrim(d);
    }
    while (!out.empty() && udeg(out.back()) == 0) out.pop_back();
    return out;
}

// ------------------------------------------------------------ binary forms

UPoly dehomogenize(const Form& f) {
    const int d = f.degree();
    UPoly u(std::max(d, 0) + 1);
    for (const auto& [k, c] : f.terms()) u[key_exp(k, 0)] = c;
    return utrim(u);
}

int multiplicity_at_infinity(const Form& f) {
    if (f.is_zero()) throw std::domain_error("zero form has no root multiplicities");
    return f.degree() - udeg(dehomogenize(f));
}

bool binary_common_zero(const std::vector<Form>& fs) {
    UPoly g;
    bool any = false, all_at_inf = true;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        any = true;
        if (multiplicity_at_infinity(f) == 0) all_at_inf = false;
        g = ugcd(g, dehomogenize(f));
    }
    if (!any) return true;
    return all_at_inf || udeg(g) > 0;
}

// ------------------------------------------------------------ pencil

namespace {

Fp lin_coef(const Form& h, int k) {
    if (h.is_zero()) return Fp(0);
    Exponents e(h.nvars(), 0);
    e[k] = 1;
    return h.coeff(e);
}

void check_2x4(const GradedMatrix& a) {
    if (a.nvars() != 4 || a.rows() != 2 || a.cols() != 4) throw std::invalid_argument("expected a 2x4 matrix on P^3");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
            if (a.entry_degree(i, j) != 1) throw std::invalid_argument("entries must be linear forms");
}

Form det_rec(const std::vector<std::vector<Form>>& m, std::vector<int>& cols, int row) {
    const int n = static_cast<int>(m.size());
    if (row == n) return Form::constant(m[0][0].nvars(), Fp(1));
    Form acc(m[0][0].nvars(), n - row);
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        const int c = cols[k];
        if (!m[row][c].is_zero()) {
            std::vector<int> rest = cols;
            rest.erase(rest.begin() + static_cast<long>(k));
            Form sub = det_rec(m, rest, row + 1);
            Form t = m[row][c] * sub;
            acc = sign > 0 ? acc + t : acc - t;
        }
        sign = -sign;
    }
    return acc.with_degree(acc.is_zero() ? 0 : acc.degree());
}

std::vector<std::vector<Form>> entries(const GradedMatrix& m) {
    std::vector<std::vector<Form>> e(m.rows(), std::vector<Form>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e[i][j] = m.at(i, j);
    return e;
}

// roots of a nonzero binary form in P^1(F_p), by exhaustive evaluation
std::vector<Point> rational_roots(const Form& f) {
    std::vector<Point> r;
    if (multiplicity_at_infinity(f) > 0) r.push_back({Fp(1), Fp(0)});
    UPoly u = dehomogenize(f);
    if (udeg(u) <= 0) return r;
    for (std::uint32_t t = 0; t < prime(); ++t)
        if (ueval(u, Fp::raw(t)).is_zero()) r.push_back({Fp::raw(t), Fp(1)});
    return r;
}

Fp cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

// f(z) with z1 -> 0, z2 -> 1, z3 -> ∞, homogeneous
Point to_standard(const Point& z, const Point& z1, const Point& z2, const Point& z3) {
    return {cross(z, z1) * cross(z2, z3), cross(z, z3) * cross(z2, z1)};
}

// a0 for the canonical Case 1 form when (z1, z2, z3) go to (-2, -1, 0)
std::optional<Fp> case1_parameter(const Point& z1, const Point& z2, const Point& z3, const Point& z4) {
    Point s = to_standard(z4, z1, z2, z3);
    // the standard map for (-2, -1, 0) is t -> -(t+2)/t
    Fp den = s[0] + s[1];
    if (den.is_zero()) return std::nullopt;
    return Fp(2) * s[1] / den;
}

}  // namespace

GradedMatrix to_pencil(const GradedMatrix& a) {
    check_2x4(a);
    GradedMatrix psi(2, {0, 0, 0, 0}, {1, 1, 1, 1});
    const Form t0 = Form::variable(2, 0), t1 = Form::variable(2, 1);
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) {
            Form f = t0 * lin_coef(a.at(0, j), k) + t1 * lin_coef(a.at(1, j), k);
            if (!f.is_zero()) psi.set(k, j, f);
        }
    return psi;
}

Form pencil_det(const GradedMatrix& psi) {
    auto e = entries(psi);
    for (auto& row : e)
        for (auto& f : row)
            if (f.is_zero()) f = Form(2, 1);
    std::vector<int> cols = {0, 1, 2, 3};
    Form d = det_rec(e, cols, 0);
    return d.is_zero() ? Form(2, 4) : d;
}

bool is_injective_2x4(const GradedMatrix& a) {
    check_2x4(a);
    Mat m(8, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 4; ++k) m.set(4 * i + k, j, lin_coef(a.at(i, j), k));
    return rank(m) == 4;
}

bool is_stable(const GradedMatrix& a) {
    if (!is_injective_2x4(a)) return false;
    return !binary_common_zero(all_minors(to_pencil(a), 3)) && !all_minors(to_pencil(a), 3).empty();
}

const char* to_string(PencilTag t) {
    switch (t) {
        case PencilTag::NotInjective: return "NotInjective";
        case PencilTag::NotStable: return "NotStable";
        case PencilTag::Case1: return "Case1";
        case PencilTag::Case2: return "Case2";
        case PencilTag::Case3: return "Case3";
        case PencilTag::Case4: return "Case4";
        case PencilTag::Case5: return "Case5";
        case PencilTag::Case6: return "Case6";
        case PencilTag::Case7: return "Case7";
        case PencilTag::Case8: return "Case8";
    }
    return "?";
}

GradedMatrix make_2x4(const std::vector<std::vector<Form>>& rows) {
    if (rows.size() != 2 || rows[0].size() != 4 || rows[1].size() != 4)
        throw std::invalid_argument("expected two rows of four linear forms");
    GradedMatrix a(4, {0, 0, 0, 0}, {1, 1});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
            if (!rows[i][j].is_zero()) a.set(i, j, rows[i][j]);
    return a;
}

GradedMatrix parse_2x4(const std::vector<std::string>& rows) {
    if (rows.size() != 2) throw std::invalid_argument("expected two rows");
    std::vector<std::vector<Form>> r(2);
    for (int i = 0; i < 2; ++i) {
        std::string cell;
        std::vector<std::string> cells;
        for (char ch : rows[i] + ",") {
            if (ch == ',') {
                cells.push_back(cell);
                cell.clear();
            } else {
                cell += ch;
            }
        }
        if (cells.size() != 4) throw std::invalid_argument("each row needs four comma-separated linear forms");
        for (const auto& c : cells) r[i].push_back(Form::parse(c, 4, 1));
    }
    return make_2x4(r);
}

GradedMatrix canonical_2x4(PencilTag tag, Fp a0, Fp a1) {
    auto x = [](int i) { return Form::variable(4, i); };
    const Form z(4, 1);
    switch (tag) {
        case PencilTag::Case1: return make_2x4({{x(0), x(1), x(2), x(3)}, {x(0) * a0, x(1) * a1, x(2), z}});
        case PencilTag::Case2: return make_2x4({{x(0), x(1), x(2), x(3)}, {x(0) * a0, x(1), x(3), z}});
        case PencilTag::Case3: return make_2x4({{x(0), x(1), x(2), x(3)}, {x(0) + x(1), x(1), x(3), z}});
        case PencilTag::Case4: return make_2x4({{x(0), x(1), x(2), x(3)}, {x(0), x(2), x(3), z}});
        case PencilTag::Case5: return make_2x4({{x(0), x(1), x(2), x(3)}, {x(1), x(2), x(3), z}});
        case PencilTag::Case6: return make_2x4({{x(0), x(1), x(2), z}, {z, x(0), x(1), x(2)}});
        case PencilTag::Case7: return make_2x4({{x(0), x(1), z, x(2)}, {z, x(0), x(1), x(3)}});
        case PencilTag::Case8: return make_2x4({{x(0), z, x(1), x(2)}, {z, x(0), x(2), x(3)}});
        default: throw std::invalid_argument("no canonical matrix for this tag");
    }
}

PencilClass classify_pencil(const GradedMatrix& a) {
    PencilClass pc;
    if (!is_injective_2x4(a)) {
        pc.tag = PencilTag::NotInjective;
        return pc;
    }
    GradedMatrix psi = to_pencil(a);
    pc.minor_generators = all_minors(a, 2);
    auto m3 = all_minors(psi, 3);
    if (m3.empty() || binary_common_zero(m3)) {
        pc.tag = PencilTag::NotStable;
        return pc;
    }
    pc.det = pencil_det(psi);
    if (!pc.det.is_zero()) {
        const int inf = multiplicity_at_infinity(pc.det);
        auto sq = squarefree_decomposition(dehomogenize(pc.det));
        std::vector<int> part;
        for (size_t i = 0; i < sq.size(); ++i)
            for (int k = 0; k < udeg(sq[i]); ++k) part.push_back(static_cast<int>(i) + 1);
        if (inf > 0) part.push_back(inf);
        std::sort(part.rbegin(), part.rend());
        pc.partition = part;
        const std::vector<std::vector<int>> shapes = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
        const PencilTag tags[] = {PencilTag::Case1, PencilTag::Case2, PencilTag::Case3, PencilTag::Case4,
                                  PencilTag::Case5};
        const char* texts[] = {"four simple points", "two simple points and a double point",
                               "two double points", "a simple point and a triple point on a conic",
                               "a quadruple point on a twisted cubic"};
        for (int k = 0; k < 5; ++k)
            if (part == shapes[k]) {
                pc.tag = tags[k];
                pc.degeneracy = texts[k];
            }
        // canonical matrix; needs the distinct roots in P^1(F_p)
        auto roots = rational_roots(pc.det);
        int distinct = inf > 0 ? 1 : 0;
        for (const auto& f : sq) distinct += udeg(f);
        pc.roots_split = static_cast<int>(roots.size()) == distinct;
        if (pc.tag == PencilTag::Case1 && pc.roots_split) {
            std::array<int, 4> idx = {0, 1, 2, 3};
            std::optional<Fp> best;
            do {
                auto c = case1_parameter(roots[idx[0]], roots[idx[1]], roots[idx[2]], roots[idx[3]]);
                if (c && (!best || c->value() < best->value())) best = c;
            } while (std::next_permutation(idx.begin(), idx.end()));
            if (best) pc.canonical = canonical_2x4(PencilTag::Case1, *best, Fp(2));
        } else if (pc.tag == PencilTag::Case1) {
            pc.canonical.reset();
        } else if (pc.tag == PencilTag::Case2) {
            if (pc.roots_split) pc.canonical = canonical_2x4(PencilTag::Case2, Fp(2));
        } else {
            pc.canonical = canonical_2x4(pc.tag);
        }
        return pc;
    }
    // rank 3 everywhere: the kernel is O(-e), the cokernel O(m) with m = 4 - e
    int e = 0;
    for (;; ++e) {
        if (!kernel_basis(graded_piece(psi, e)).empty()) break;
        if (e > 4) throw std::logic_error("no syzygy of the pencil found");
    }
    pc.e = e;
    pc.m = 4 - e;
    if (pc.m == 1) {
        pc.tag = PencilTag::Case6;
        // linear parts of the minors' derivatives cut out the point
        Mat lin(0, 4);
        std::vector<std::uint32_t> rows;
        int nrows = 0;
        for (const auto& f : pc.minor_generators)
            for (int v = 0; v < 4; ++v) {
                Form d = f.derivative(v);
                if (d.is_zero()) continue;
                for (int k = 0; k < 4; ++k) rows.push_back(lin_coef(d, k).value());
                ++nrows;
            }
        lin.rows = nrows;
        lin.a = rows;
        auto ker = kernel_basis(lin);
        if (ker.size() == 1) pc.special_point = ker[0];
        pc.degeneracy = "fat point defined by the square of the ideal of a point";
    } else if (pc.m == 2) {
        pc.tag = PencilTag::Case7;
        pc.degeneracy = "a line L', cokernel O_L'(2)";
    } else if (pc.m == 3) {
        pc.tag = PencilTag::Case8;
        pc.degeneracy = "a conic C, cokernel O_C(3) via P^1";
    } else {
        throw std::logic_error("unexpected cokernel degree");
    }
    pc.canonical = canonical_2x4(pc.tag);
    return pc;
}

bool minor_ideal_equals(const GradedMatrix& a, const std::vector<Form>& gens, int bound) {
    return ideals_agree_to_degree(all_minors(a, 2), gens, a.nvars(), bound);
}

}  // namespace ggb
