// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// (integer or F_p arithmetic, tolerance 0) unless a line says otherwise.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <unordered_map>

#include "ggb/beilinson.hpp"
#include "ggb/catalog.hpp"
#include "ggb/chern.hpp"
#include "ggb/geom.hpp"
#include "ggb/minors.hpp"
#include "ggb/pencil.hpp"
#include "ggb/spectra.hpp"
#include "oracles.hpp"

using namespace ggb;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        pass = false;
        if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + why;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::vector<Form> vars(int nv) {
    std::vector<Form> v;
    for (int i = 0; i < nv; ++i) v.push_back(Form::variable(nv, i));
    return v;
}

NodePtr omega1(int n) { return SheafNode::ker_epi(GradedMatrix::row(vars(n + 1), 1)); }

NodePtr kernel(int nv, std::vector<int> src, std::vector<int> tgt, const std::vector<std::vector<std::string>>& rows) {
    return SheafNode::ker_epi(GradedMatrix::parse(nv, std::move(src), std::move(tgt), rows));
}

NodePtr null_correlation_twist2() {
    auto v = vars(4);
    GradedMatrix s(4, {-1}, {0, 0, 0, 0});
    s.set(0, 0, v[1]);
    s.set(1, 0, -v[0]);
    s.set(2, 0, v[3]);
    s.set(3, 0, -v[2]);
    return SheafNode::twist(SheafNode::sub_quot(s, omega1(3)), 2);
}

NodePtr case_iv() { return kernel(4, {2, 2, 2, 1}, {3}, {{"x0", "x1", "x2", "x3^2"}}); }
NodePtr case_vi() {
    return kernel(4, {2, 2, 2, 2, 2}, {3, 3}, {{"x0", "x1", "x2", "x3", "0"}, {"0", "x0", "x1", "x2", "x3"}});
}
NodePtr case_vii() { return kernel(4, {2, 2, 1, 1, 1}, {3}, {{"x0", "x1", "x2^2", "x2*x3", "x3^2"}}); }
NodePtr case_xi() { return kernel(4, {2, 2, 2, 2}, {4}, {{"x0^2", "x1^2", "x2^2", "x3^2"}}); }

NodePtr case_xvi() {
    // kernel of E' -> O(2), E' = coker of the Koszul map for (x0..x3, x4^2) twisted by 4
    auto v = vars(5);
    FreeComplex k = truncate(twist(koszul({v[0], v[1], v[2], v[3], v[4] * v[4]}), 4), -5, -3);
    auto ep = SheafNode::monad(k, -3);
    GradedMatrix phi = GradedMatrix::parse(5, k.term(-3), {2}, {{"x2", "x3", "x4^2", "x0", "0", "0", "x1", "0", "0", "x4^2"}});
    return SheafNode::ker_from(ep, phi);
}

int cell(const CohTable& t, int i, int l) { return t.h(i, l); }

std::vector<std::pair<CatalogEntry, NodePtr>> catalog_nodes(const Catalog& cat) {
    std::vector<std::pair<CatalogEntry, NodePtr>> out;
    std::function<NodePtr(const std::string&)> refs = [&](const std::string& id) -> NodePtr {
        for (const auto& e : cat.entries)
            if (e.id == id) return build_node(e.node, e.n, refs);
        throw CatalogError("unknown reference " + id);
    };
    for (const auto& e : cat.entries) out.push_back({e, build_node(e.node, e.n, refs)});
    return out;
}

// 1
Outcome catalog_verify(const Catalog& cat) {
    Outcome o;
    o.expect(cat.entries.size() >= 20, "fewer than 20 entries");
    std::set<std::string> ids;
    for (const auto& e : cat.entries) ids.insert(e.id);
    for (const char* id : {"c1_4-i", "c1_4-ii", "c1_4-iii", "c1_4-iv", "c1_4-vi", "c1_4-vii", "c1_4-xi", "c1_4-xv",
                           "c1_4-xvi", "kernel-K", "syzygy-M"})
        o.expect(ids.count(id), std::string("missing ") + id);
    for (const char* prefix : {"c1_le3-", "p2_c1_4-", "p2_c1_5-"})
        o.expect(std::any_of(ids.begin(), ids.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; }),
                 std::string("no ") + prefix + " entries");
    VerifyOptions opt;
    opt.trials = 500;
    auto rep = verify_all(cat, opt);
    int chern_checks = 0;
    for (const auto& e : rep.entries) {
        o.expect(e.ok(), e.id + " fails" + (e.error.empty() ? "" : ": " + e.error));
        for (const auto& c : e.checks)
            if (c.name == "chern") {
                ++chern_checks;
                o.expect(c.ok, e.id + " chern " + c.got + " != " + c.expected);
            }
    }
    o.expect(chern_checks == static_cast<int>(cat.entries.size()), "an entry lacks a Chern expectation");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(rep.entries.size() - rep.failures()) + "/" +
                std::to_string(rep.entries.size()) + " entries, " + std::to_string(chern_checks) + " exact Chern matches";
    return o;
}

// 2
Outcome golden_cohomology() {
    Outcome o;
    auto t = coh_table(SheafNode::twist(omega1(3), 1), 0, 0);
    o.expect(cell(t, 0, 0) == 6, "h0(Omega_P3(2)) != 6");
    auto t6 = coh_table(case_vi(), -3, -3);
    o.expect(cell(t6, 1, -3) == 2, "vi: h1(E(-3)) != 2");
    auto t4 = coh_table(case_iv(), -3, -2);
    o.expect(cell(t4, 1, -3) == 1 && cell(t4, 1, -2) == 1, "iv: h1(E(-3)), h1(E(-2)) != 1, 1");
    auto t16 = coh_table(case_xvi(), -4, -1);
    o.expect(cell(t16, 1, -1) == 1 && cell(t16, 1, -2) == 1, "xvi: h1(E(-1)), h1(E(-2)) != 1, 1");
    o.expect(cell(t16, 2, -3) == 1 && cell(t16, 2, -4) == 1, "xvi: h2(E(-3)), h2(E(-4)) != 1, 1");
    if (o.pass) o.detail = "6 golden values exact";
    return o;
}

// 3
Outcome rr_crosscheck(const std::vector<std::pair<CatalogEntry, NodePtr>>& nodes) {
    Outcome o;
    int cols = 0;
    for (const auto& [e, node] : nodes) {
        const ChernVector c = chern_of_node(node);
        auto [lo, hi] = e.window ? *e.window : default_coh_window(e.n);
        auto t = coh_table(node, lo, hi);
        int here = 0;
        for (int l = lo; l <= hi; ++l) {
            if (!t.column_exact(l)) continue;
            ++here;
            o.expect(t.chi(l) == rr_chi(c, l), e.id + " l=" + std::to_string(l));
        }
        o.expect(here > 0, e.id + " has no exact column");
        cols += here;
    }
    if (o.pass) o.detail = std::to_string(cols) + " exact columns over " + std::to_string(nodes.size()) + " nodes";
    return o;
}

// 4
Outcome schwarzenberger_check(const std::vector<std::pair<CatalogEntry, NodePtr>>& nodes) {
    Outcome o;
    auto s = schwarzenberger({4, 2, {5, 8, 0, 0}});
    o.expect(!s.ok && s.residue == 8, "(2; 5,8,0,0) residue " + std::to_string(s.residue));
    int count = 0;
    for (const auto& [e, node] : nodes) {
        if (e.n != 4) continue;
        ++count;
        auto r = schwarzenberger(chern_of_node(node));
        o.expect(r.ok, e.id + " residue " + std::to_string(r.residue));
    }
    o.expect(count > 0, "no P^4 entries");
    if (o.pass) o.detail = "residue 8 for (5,8,0,0); " + std::to_string(count) + " P^4 entries pass";
    return o;
}

// 5
Outcome double_point_check() {
    Outcome o;
    o.expect(double_point({8, 5, 1, 0}) == 0, "(8,5,1,0) != 0");
    o.expect(double_point({8, 4, 1, 0}) == 1, "(8,4,1,0) != 1");
    auto b = surface_bundle_data({8, 5, 1, 0});
    o.expect(b.r == 5 && b.c3 == 8, "surface data r=" + std::to_string(b.r) + " c3=" + std::to_string(b.c3));
    if (o.pass) o.detail = "0, 1, r = 5, c3 = 8";
    return o;
}

// 6
Outcome spectra_check() {
    Outcome o;
    SpectrumRules r;
    r.c3_nonneg = true;
    o.expect(enumerate_spectra(2, -3, 2, r) == std::vector<Spectrum>{{0, 0}, {0, -1}, {-1, -1}}, "c = 2 list");
    SpectrumRules f;
    f.spectrum2 = true;
    auto fine = enumerate_spectra(4, -4, 2, f);
    o.expect(std::find(fine.begin(), fine.end(), Spectrum{0, -1, -2, -2}) == fine.end(), "(0,-1,-2,-2) not excluded");
    auto coarse = enumerate_spectra(4, -4, 2, SpectrumRules{});
    o.expect(std::find(coarse.begin(), coarse.end(), Spectrum{0, -1, -2, -2}) != coarse.end(),
             "(0,-1,-2,-2) missing without the finer rule");
    struct Q {
        Spectrum s;
        int i, l;
        long long h;
    };
    const Q quoted[] = {{{0, -1, -2}, 2, -1, 1},      {{1, 0, -1, -1}, 1, -2, 1},  {{0, 0, -1, -2}, 2, -1, 1},
                        {{0, -1, -2, -3}, 2, 0, 1},   {{-1, -1, -2, -3}, 2, 0, 1}, {{0, 0, 0, -1}, 1, -1, 3}};
    for (const auto& q : quoted) {
        const long long h = q.i == 1 ? h1_from_spectrum(q.s, q.l) : h2_from_spectrum(q.s, q.l);
        o.expect(h == q.h, "h" + std::to_string(q.i) + " at l=" + std::to_string(q.l) + " is " + std::to_string(h));
    }
    if (o.pass) o.detail = "3 spectra for c = 2, exclusion holds, 6 quoted values exact";
    return o;
}

// 7
Outcome pencil_check() {
    Outcome o;
    auto ideal = [](std::initializer_list<const char*> g) {
        std::vector<Form> out;
        for (auto s : g) out.push_back(Form::parse(s, 4));
        return out;
    };
    const std::pair<PencilTag, std::vector<Form>> cases[] = {
        {PencilTag::Case1, ideal({"x0*x1", "x0*x2", "x0*x3", "x1*x2", "x1*x3", "x2*x3"})},
        {PencilTag::Case5, ideal({"x1*x3", "x2*x3", "x3^2", "x2^2", "x0*x3 - x1*x2", "x0*x2 - x1^2"})},
        {PencilTag::Case6, ideal({"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"})},
        {PencilTag::Case7, ideal({"x0^2", "x0*x1", "x1^2", "x1*x2", "x0*x3", "x0*x2 - x1*x3"})},
        {PencilTag::Case8, ideal({"x0^2", "x0*x2", "x0*x3", "x0*x1", "x1*x3 - x2^2"})},
    };
    std::mt19937_64 rng(2024);
    int mismatches = 0;
    for (const auto& [tag, gens] : cases) {
        GradedMatrix a = canonical_2x4(tag);
        o.expect(classify_pencil(a).tag == tag, std::string(to_string(tag)) + " misclassified");
        o.expect(minor_ideal_equals(a, gens, 4), std::string(to_string(tag)) + " minor ideal differs");
        for (int k = 0; k < 100; ++k)
            if (classify_pencil(oracle::random_conjugate(a, rng)).tag != tag) ++mismatches;
    }
    o.expect(mismatches == 0, std::to_string(mismatches) + " conjugate mismatches");
    if (o.pass) o.detail = "5 cases, ideals equal through degree 4, 500 conjugates, 0 mismatches";
    return o;
}

// 8
Outcome gg_check() {
    Outcome o;
    const std::pair<const char*, NodePtr> positive[] = {
        {"ii", null_correlation_twist2()}, {"iv", case_iv()}, {"vi", case_vi()}, {"vii", case_vii()}, {"xi", case_xi()}};
    for (const auto& [name, node] : positive) {
        auto v = is_globally_generated(node, 500, 7);
        o.expect(v.tag != GGTag::NotGenerated && v.trials == 500, std::string(name) + " not generated");
    }
    auto neg = [&](const char* name, NodePtr node, std::vector<Form> line, std::vector<int> split) {
        GGHints h;
        h.lines.push_back(line_from_equations(line));
        auto v = is_globally_generated(node, 500, 7, h);
        o.expect(v.tag == GGTag::NotGenerated && v.witness_line.has_value() && witness_holds(node, v),
                 std::string(name) + ": no line witness");
        o.expect(v.witness_split == split, std::string(name) + ": witness splitting type differs");
    };
    auto v4 = vars(4);
    neg("K", kernel(4, {2, 2, 1, 1}, {3}, {{"x0", "x1", "x2^2", "x3^2"}}), {v4[0], v4[1]}, {2, 2, -1});
    auto v3 = vars(3);
    neg("M", kernel(3, {0, 0, 0, 0, 0}, {2}, {{"x0^2", "x1^2", "x2^2", "x0*x1", "x0*x2"}}), {v3[0]}, {0, 0, 0, -2});
    if (o.pass) o.detail = "5 positive at 500 samples; K splits (2,2,-1), M splits (0,0,0,-2)";
    return o;
}

bool same_complex(const FreeComplex& a, const FreeComplex& b) {
    if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
    for (int p = a.lo(); p <= a.hi(); ++p)
        if (a.term(p) != b.term(p) || !(a.d(p) == b.d(p))) return false;
    return true;
}

// 9
Outcome property_suites(const std::vector<std::pair<CatalogEntry, NodePtr>>& nodes) {
    Outcome o;
    std::vector<std::string> parts;

    // Koszul exactness at every inner position, default window
    int koszul_fail = 0, koszul_n = 0;
    std::vector<std::vector<Form>> regular;
    for (int nv = 2; nv <= 5; ++nv) regular.push_back(vars(nv));
    {
        auto v = vars(3);
        regular.push_back({v[0], v[1] * v[1], v[2] * v[2] * v[2]});
        auto w = vars(4);
        regular.push_back({w[0] * w[0], w[1] * w[1], w[2] * w[2], w[3] * w[3]});
        regular.push_back({w[0] * w[1] - w[2] * w[3], w[0] * w[0] + w[3] * w[3], w[1]});
    }
    for (const auto& f : regular) {
        FreeComplex k = koszul(f);
        auto [lo, hi] = default_window(k);
        std::vector<int> inner;
        for (int p = k.lo(); p < 0; ++p) inner.push_back(p);
        ++koszul_n;
        if (!verify_exact(k, lo, hi, inner).exact()) ++koszul_fail;
    }
    o.expect(koszul_fail == 0, std::to_string(koszul_fail) + " Koszul failures");
    parts.push_back(std::to_string(koszul_n) + " Koszul complexes exact");

    // dual is an involution on complexes and on nodes
    int dual_n = 0;
    for (const auto& [e, node] : nodes) {
        ++dual_n;
        o.expect(same_complex(dual(dual(node->model())), node->model()), e.id + " dual dual model");
        o.expect(chern_dual(chern_dual(chern_of_node(node))) == chern_of_node(node), e.id + " dual dual chern");
        if (e.n <= 3) {
            auto a = coh_table(node, -1, 1), b = coh_table(SheafNode::dual(SheafNode::dual(node)), -1, 1);
            for (int l = -1; l <= 1; ++l)
                for (int i = 0; i <= e.n; ++i)
                    o.expect(a.at(i, l).h == b.at(i, l).h, e.id + " dual dual cohomology");
        }
    }
    parts.push_back(std::to_string(dual_n) + " dual involutions");

    // p_chern involution on random vectors
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    int p_fail = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + t % 3;
        ChernVector c{n, 2 + t % 4, {}};
        for (int i = 0; i < n; ++i) c.c.push_back(d(rng));
        if (!(p_chern(p_chern(c)) == c)) ++p_fail;
    }
    o.expect(p_fail == 0, std::to_string(p_fail) + " p_chern failures");
    parts.push_back("300 p_chern involutions");

    // contraction: associativity and the sign law against the oracle wedge
    std::mt19937 erng(11);
    auto random_elem = [&](int dim, int grade) {
        ExtElement x{dim, grade, {}};
        for (std::uint32_t m = 0; m < (1u << dim); ++m)
            if (__builtin_popcount(m) == grade && erng() % 2) {
                Fp v(static_cast<long long>(erng() % prime()));
                if (!v.is_zero()) x.coef[m] = v;
            }
        return x;
    };
    auto to_oracle = [](const ExtElement& x) {
        oracle::Ext r{x.dim, std::vector<long long>(1u << x.dim, 0)};
        for (const auto& [k, v] : x.coef) r.c[k] = v.value();
        return r;
    };
    auto from_oracle = [](const oracle::Ext& x, int grade) {
        ExtElement r{x.n, grade, {}};
        for (std::uint32_t k = 0; k < x.c.size(); ++k)
            if (x.c[k]) r.coef[k] = Fp(x.c[k]);
        return r;
    };
    int ext_fail = 0;
    for (int t = 0; t < 1000; ++t) {
        const int dim = 4 + static_cast<int>(erng() % 3);
        const int gp = static_cast<int>(erng() % 3), gq = static_cast<int>(erng() % 3);
        const int r = static_cast<int>(erng() % (dim - gp - gq + 1));
        auto phi = random_elem(dim, gp + gq + r);
        auto w = random_elem(dim, gp);
        auto eta = random_elem(dim, gq);
        auto lhs = contract(contract(phi, w), eta);
        auto w_eta = from_oracle(oracle::ext_wedge(to_oracle(w), to_oracle(eta), prime()), gp + gq);
        auto eta_w = from_oracle(oracle::ext_wedge(to_oracle(eta), to_oracle(w), prime()), gp + gq);
        const Fp sign((gp * gq) % 2 ? -1 : 1);
        if (!(lhs == contract(phi, w_eta)) || !(lhs == contract(phi, eta_w * sign))) ++ext_fail;
    }
    o.expect(ext_fail == 0, std::to_string(ext_fail) + " exterior-algebra failures");
    parts.push_back("1000 contraction triples");

    // Cayley-Bacharach against base loci of all forms, every set of <= 6 points of P^2(F_5)
    {
        const std::uint32_t saved = prime();
        set_prime(5);
        auto pts = oracle::plane_points(5);
        const int np = static_cast<int>(pts.size());
        const std::uint64_t all = (std::uint64_t{1} << np) - 1;
        std::vector<Point> fpts;
        for (const auto& p : pts) fpts.push_back({Fp(p[0]), Fp(p[1]), Fp(p[2])});
        long long configs = 0, cb_fail = 0;
        for (int deg = 1; deg <= 2; ++deg) {
            auto masks = oracle::vanishing_masks(5, deg);
            std::unordered_map<std::uint64_t, std::uint64_t> locus;
            auto base = [&](std::uint64_t s) {
                auto it = locus.find(s);
                if (it != locus.end()) return it->second;
                return locus[s] = oracle::base_locus(s, masks, all);
            };
            std::vector<int> idx;
            std::function<void(int)> rec = [&](int start) {
                if (!idx.empty()) {
                    std::uint64_t set = 0;
                    std::vector<Point> ps;
                    for (int i : idx) {
                        set |= std::uint64_t{1} << i;
                        ps.push_back(fpts[i]);
                    }
                    bool want = true;
                    for (int i : idx) {
                        const std::uint64_t rest = set & ~(std::uint64_t{1} << i);
                        if (!(base(rest) >> i & 1)) want = false;
                    }
                    ++configs;
                    if (cayley_bacharach(ps, deg) != want) ++cb_fail;
                }
                if (idx.size() == 6) return;
                for (int i = start; i < np; ++i) {
                    idx.push_back(i);
                    rec(i + 1);
                    idx.pop_back();
                }
            };
            rec(0);
        }
        set_prime(saved);
        o.expect(cb_fail == 0, std::to_string(cb_fail) + " Cayley-Bacharach disagreements");
        parts.push_back(std::to_string(configs) + " point sets (d = 1, 2)");
    }

    // h1 drops by 2 on globally generated P^2 entries
    int p2 = 0;
    for (const auto& [e, node] : nodes) {
        if (e.n != 2 || !(e.gg == GGExpect::Generated || e.gg == GGExpect::GeneratedForInstance)) continue;
        ++p2;
        auto t = coh_table(node, -2, 4);
        for (int l = -1; l <= 4; ++l) {
            const int h = t.h(1, l);
            if (h != 0) o.expect(h <= t.h(1, l - 1) - 2, e.id + " h1 drop at l=" + std::to_string(l));
        }
    }
    parts.push_back(std::to_string(p2) + " P^2 drop-by-2 checks");

    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
    o.detail = o.pass ? s : o.detail;
    return o;
}

// 10
Outcome beilinson_check() {
    Outcome o;
    auto t3 = CohTable::zeros(3, -5, -2);
    t3.at(1, -3).h = 3;
    t3.at(1, -2).h = 5;
    t3.at(2, -5).h = 1;
    auto s3 = beilinson_terms(t3, -2);
    o.expect(s3.lo == -1 && s3.terms.size() == 3 && s3.at(-1) == std::vector<OmegaTerm>{{1, 3}} &&
                 s3.at(0) == std::vector<OmegaTerm>{{3, 1}} && s3.at(1) == std::vector<OmegaTerm>{{5, 0}},
             "P^3 table shape");
    auto t5 = CohTable::zeros(5, -5, 0);
    t5.at(1, 0).h = 1;
    t5.at(2, -2).h = 1;
    t5.at(3, -4).h = 1;
    auto s5 = beilinson_terms(t5);
    o.expect(s5.lo == -1 && s5.terms.size() == 3 && s5.at(-1) == std::vector<OmegaTerm>{{1, 4}} &&
                 s5.at(0) == std::vector<OmegaTerm>{{1, 2}} && s5.at(1) == std::vector<OmegaTerm>{{1, 0}},
             "P^5 table shape");
    auto w = ExtElement::basis(6, {0, 1}) + ExtElement::basis(6, {2, 3}) + ExtElement::basis(6, {4, 5});
    o.expect(wedge_map_rank(w, 2) == 15, "wedge rank on Lambda^2 is " + std::to_string(wedge_map_rank(w, 2)));
    if (o.pass) o.detail = "O3(3) -> O1(1)^3 -> O^5, O4(4) -> O2(2) -> O, rank 15";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : GGB_CATALOG_PATH;
    Catalog cat;
    std::vector<std::pair<CatalogEntry, NodePtr>> nodes;
    try {
        cat = load_catalog(path);
        nodes = catalog_nodes(cat);
    } catch (const std::exception& e) {
        std::cerr << "cannot load catalog: " << e.what() << "\n";
        return 2;
    }
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"catalog verify, Chern vectors exact (tol 0)", [&] { return catalog_verify(cat); }},
        {"golden cohomology values (tol 0)", golden_cohomology},
        {"Riemann-Roch on every exact column (tol 0)", [&] { return rr_crosscheck(nodes); }},
        {"Schwarzenberger congruence", [&] { return schwarzenberger_check(nodes); }},
        {"double-point formula and surface data (tol 0)", double_point_check},
        {"spectra enumeration and h-values (tol 0)", spectra_check},
        {"2x4 pencil classification", pencil_check},
        {"global generation verdicts (500 samples)", gg_check},
        {"property suites", [&] { return property_suites(nodes); }},
        {"Beilinson shapes and wedge rank", beilinson_check},
    };
    int failed = 0, k = 0;
    for (const auto& [name, run] : criteria) {
        ++k;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  %s [%s] (%.2f s)\n", k, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
        if (!o.pass) ++failed;
    }
    std::printf("%d/10 criteria pass\n", 10 - failed);
    return failed ? 1 : 0;
}
