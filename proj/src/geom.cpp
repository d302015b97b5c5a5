#include "ggb/geom.hpp"

#include <algorithm>

#include "ggb/minors.hpp"
#include "ggb/pencil.hpp"

namespace ggb {

std::vector<Form> LineParam::substitution() const {
    std::vector<Form> img;
    const Form u0 = Form::variable(2, 0), u1 = Form::variable(2, 1);
    for (size_t i = 0; i < p.size(); ++i) {
        Form f = u0 * p[i] + u1 * q[i];
        img.push_back(f.is_zero() ? Form(2, 1) : f);
    }
    return img;
}

LineParam line_from_equations(const std::vector<Form>& eqs) {
    if (eqs.empty()) throw std::invalid_argument("a line needs linear equations");
    const int nv = eqs[0].nvars();
    const int ne = static_cast<int>(eqs.size());
    Mat m(ne, nv);
    for (int i = 0; i < ne; ++i) {
        if (eqs[i].degree() != 1) throw std::invalid_argument("line equations must be linear");
        for (int k = 0; k < nv; ++k) {
            Exponents e(nv, 0);
            e[k] = 1;
            m.set(i, k, eqs[i].coeff(e));
        }
    }
    auto ker = kernel_basis(m);
    if (ker.size() != 2) throw std::invalid_argument("equations do not cut out a line");
    return {ker[0], ker[1]};
}

bool cayley_bacharach(const std::vector<Point>& pts, int d) {
    if (d < 0) return true;
    const auto& idx = mono_index(3, d);
    auto eval_rows = [&](int skip) {
        Mat m(0, idx.size());
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            if (i == skip) continue;
            m.rows++;
            for (MonoKey k : idx.keys) {
                Fp v(1);
                for (int j = 0; j < 3; ++j) v *= pts[i][j].pow(key_exp(k, j));
                m.a.push_back(v.value());
            }
        }
        return m;
    };
    const int all = rank(eval_rows(-1));
    for (int z = 0; z < static_cast<int>(pts.size()); ++z)
        if (rank(eval_rows(z)) != all) return false;
    return true;
}

namespace {

FreeComplex restrict_complex(const FreeComplex& c, const LineParam& line) {
    auto img = line.substitution();
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = c.lo(); p <= c.hi(); ++p) terms.push_back(c.term(p));
    for (int p = c.lo(); p < c.hi(); ++p) diffs.push_back(c.d(p).substitute(img));
    return FreeComplex(2, c.lo(), terms, diffs);
}

}  // namespace

std::vector<int> splitting_type_on_line(const NodePtr& node, const LineParam& line) {
    if (static_cast<int>(line.p.size()) != node->nvars() || static_cast<int>(line.q.size()) != node->nvars())
        throw std::invalid_argument("line lives on the wrong space");
    {
        Mat m(2, node->nvars());
        for (int k = 0; k < node->nvars(); ++k) {
            m.set(0, k, line.p[k]);
            m.set(1, k, line.q[k]);
        }
        if (rank(m) != 2) throw std::invalid_argument("line points are dependent");
    }
    FreeComplex r = restrict_complex(node->model(), line);
    try {
        certify_model(r);
    } catch (const UncertifiedNode& e) {
        throw DegenerateRestriction(std::string("restriction to the line is degenerate: ") + e.what());
    }
    int lo = 0, hi = 0;
    for (int p = r.lo(); p <= r.hi(); ++p)
        for (int a : r.term(p)) {
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
    const int span = (hi - lo + 2) * std::max(1, r.length());
    const int l_lo = -hi - span, l_hi = -lo + span;
    CohTable t = coh_table_of_model(r, l_lo - 2, l_hi);
    auto f = [&](int l) { return t.h(0, l); };
    std::vector<int> type;
    for (int l = l_lo; l <= l_hi; ++l) {
        const int cnt = f(l) - 2 * f(l - 1) + f(l - 2);
        for (int k = 0; k < cnt; ++k) type.push_back(-l);
    }
    if (static_cast<int>(type.size()) != node->rank())
        throw std::logic_error("splitting type search window too small");
    std::sort(type.rbegin(), type.rend());
    return type;
}

const char* to_string(GGTag t) {
    switch (t) {
        case GGTag::Generated: return "generated";
        case GGTag::GeneratedUpToSampling: return "generated-up-to-sampling";
        case GGTag::NotGenerated: return "not-generated";
    }
    return "?";
}

namespace {

struct FiberTest {
    GradedMatrix sections;  // O^h -> C^0
    GradedMatrix dm1;       // C^{-1} -> C^0
    int fiber_rank = 0;     // rank C^0 - generic rank of d^0
};

FiberTest fiber_test(const NodePtr& node) {
    FiberTest ft;
    ft.sections = section_matrix(node);
    ft.dm1 = node->model().d(-1);
    const auto& ranks = node->certificate().ranks;
    int r0 = 0;
    if (node->model().hi() > 0) {
        // generic rank of d^0; recompute when the certificate is inherited
        const FreeComplex& c = node->model();
        if (!ranks.empty() && static_cast<int>(ranks.size()) == c.hi() - c.lo()) {
            r0 = ranks[-c.lo()];
        } else {
            std::mt19937_64 rng(99);
            for (int k = 0; k < 4; ++k) r0 = std::max(r0, rank(evaluate(c.d(0), random_point(c.nvars(), rng))));
        }
    }
    ft.fiber_rank = node->model().rank_at(0) - r0;
    return ft;
}

bool spans_at(const FiberTest& ft, const Point& x) {
    Mat s = evaluate(ft.sections, x);
    Mat b = evaluate(ft.dm1, x);
    Mat m = s.cols == 0 ? b : (b.cols == 0 ? s : hconcat(s, b));
    return (m.cols == 0 ? 0 : rank(m)) == ft.fiber_rank;
}

}  // namespace

GGVerdict is_globally_generated(const NodePtr& node, int trials, std::uint64_t seed, const GGHints& hints,
                                bool try_exact) {
    GGVerdict v;
    v.trials = trials;
    v.seed = seed;
    FiberTest ft = fiber_test(node);
    v.h0 = ft.sections.cols();
    for (const auto& line : hints.lines) {
        auto type = splitting_type_on_line(node, line);
        if (!type.empty() && type.back() < 0) {
            v.tag = GGTag::NotGenerated;
            v.witness_line = line;
            v.witness_split = type;
            v.detail = "negative summand on a hint line";
            return v;
        }
    }
    for (const auto& x : hints.points)
        if (!spans_at(ft, x)) {
            v.tag = GGTag::NotGenerated;
            v.witness_point = x;
            v.detail = "sections do not span the fiber at a hint point";
            return v;
        }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Point x = random_point(node->nvars(), rng);
        if (!spans_at(ft, x)) {
            v.tag = GGTag::NotGenerated;
            v.witness_point = x;
            v.detail = "sections do not span the fiber at a sampled point";
            return v;
        }
    }
    v.tag = GGTag::GeneratedUpToSampling;
    if (try_exact && ft.fiber_rank > 0) {
        GradedMatrix m = ft.dm1.cols() == 0 ? ft.sections : hstack(ft.sections, ft.dm1);
        MinorTest mt = minor_ideal_test(m, ft.fiber_rank, 8, false, 200000);
        if (mt.ok) {
            v.tag = GGTag::Generated;
            v.detail = "minor ideal of the evaluation map contains all forms of degree " + std::to_string(mt.degree);
        }
    }
    return v;
}

bool witness_holds(const NodePtr& node, const GGVerdict& v) {
    if (v.tag != GGTag::NotGenerated) return false;
    if (v.witness_line) {
        auto type = splitting_type_on_line(node, *v.witness_line);
        return !type.empty() && type.back() < 0;
    }
    if (v.witness_point) return !spans_at(fiber_test(node), *v.witness_point);
    return false;
}

bool edge_avoidance(const LineParam& l, const std::vector<Point>& z) {
    if (z.size() != 4 || l.p.size() != 4) throw std::invalid_argument("edge_avoidance works in P^3 with four points");
    auto det4 = [](const std::vector<Point>& rows) {
        Mat m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.set(i, j, rows[i][j]);
        return rank(m) == 4;
    };
    if (!det4(z)) throw std::invalid_argument("the four points are coplanar");
    for (const auto& zi : z) {
        Mat m(3, 4);
        for (int j = 0; j < 4; ++j) {
            m.set(0, j, l.p[j]);
            m.set(1, j, l.q[j]);
            m.set(2, j, zi[j]);
        }
        if (rank(m) < 3) throw std::invalid_argument("the line passes through a point of Z");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!det4({l.p, l.q, z[i], z[j]})) return false;
    return true;
}

bool quadric_line_component_test(const std::vector<Form>& lambda) {
    if (lambda.size() != 3) throw std::invalid_argument("Λ must be spanned by three forms");
    // basis of H^0(O(1,3)): u_a v0^{3-b} v1^b
    std::vector<Exponents> basis;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b <= 3; ++b) {
            Exponents e = {a == 0 ? 1 : 0, a == 1 ? 1 : 0, 3 - b, b};
            basis.push_back(e);
        }
    auto pos = [&](const Exponents& e) {
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == e) return static_cast<int>(k);
        return -1;
    };
    Mat lam(8, 3);
    for (int j = 0; j < 3; ++j) {
        const Form& f = lambda[j];
        if (f.nvars() != 4 || f.degree() != 4) throw std::invalid_argument("Λ forms must have bidegree (1,3)");
        for (const auto& [k, c] : f.terms()) {
            int r = pos(unpack(k, 4));
            if (r < 0) throw std::invalid_argument("Λ forms must have bidegree (1,3)");
            lam.set(r, j, c);
        }
    }
    if (rank(lam) != 3) throw std::invalid_argument("Λ must be three-dimensional");
    // columns (s u0 + t u1) v0^{3-b} v1^b with (s:t) in P^1, then Λ
    GradedMatrix m(2, {-1, -1, -1, -1, 0, 0, 0}, std::vector<int>(8, 0));
    const Form s = Form::variable(2, 0), t = Form::variable(2, 1);
    for (int b = 0; b <= 3; ++b) {
        m.set(b, b, s);
        m.set(4 + b, b, t);
    }
    for (int r = 0; r < 8; ++r)
        for (int j = 0; j < 3; ++j)
            if (!lam.get(r, j).is_zero()) m.set(r, 4 + j, Form::constant(2, lam.get(r, j)));
    return !binary_common_zero(all_minors(m, 7));
}

}  // namespace ggb
