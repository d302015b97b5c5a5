#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggb/beilinson.hpp"
#include "ggb/catalog.hpp"
#include "ggb/chern.hpp"
#include "ggb/geom.hpp"
#include "ggb/pencil.hpp"
#include "ggb/spectra.hpp"

namespace py = pybind11;
using namespace ggb;

namespace {

NodePtr node_of(int n, const std::string& expr) { return build_node(parse_expr(json::parse(expr), n), n); }

std::vector<Form> equations(const std::vector<std::string>& eqs, int nvars) {
    std::vector<Form> out;
    for (const auto& s : eqs) out.push_back(Form::parse(s, nvars, 1));
    return out;
}

ChernVector chern_vec(int n, long long rank, std::vector<long long> c) {
    if (static_cast<int>(c.size()) > n) throw std::invalid_argument("more Chern classes than n");
    c.resize(n, 0);
    return {n, rank, c};
}

Point point(const std::vector<long long>& x) {
    Point p;
    for (long long c : x) p.push_back(Fp(c));
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "globally generated vector bundles on projective space, over F_p";

    py::register_exception<UncertifiedNode>(m, "UncertifiedNode", PyExc_ValueError);
    py::register_exception<NotGloballyGenerated>(m, "NotGloballyGenerated", PyExc_ValueError);
    py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
    py::register_exception<RRDomainError>(m, "RRDomainError", PyExc_ValueError);
    py::register_exception<InsufficientTable>(m, "InsufficientTable", PyExc_ValueError);

    m.def("set_prime", &set_prime, py::arg("p"));
    m.def("prime", [] { return prime(); });

    m.def("chern", [](int n, const std::string& expr) {
        ChernVector c = chern_of_node(node_of(n, expr));
        return std::make_pair(c.rank, c.c);
    }, py::arg("n"), py::arg("node_json"), "(rank, [c1..cn]) of a node");

    m.def("rr_chi", [](int n, long long rank, std::vector<long long> c, long long l) {
        return rr_chi(chern_vec(n, rank, std::move(c)), l);
    }, py::arg("n"), py::arg("rank"), py::arg("c"), py::arg("l"));

    m.def("schwarzenberger", [](long long rank, std::vector<long long> c) {
        auto r = schwarzenberger(chern_vec(4, rank, std::move(c)));
        return std::make_pair(r.ok, r.residue);
    }, py::arg("rank"), py::arg("c"));

    m.def("double_point", [](long long d, long long pi, long long q, long long pg) {
        return double_point({d, pi, q, pg});
    }, py::arg("d"), py::arg("pi"), py::arg("q"), py::arg("pg"));

    m.def("surface_bundle_data", [](long long d, long long pi, long long q, long long pg) {
        auto s = surface_bundle_data({d, pi, q, pg});
        py::dict out;
        out["r"] = s.r;
        out["c2"] = s.c2;
        out["c3"] = s.c3;
        out["c4"] = s.c4;
        return out;
    }, py::arg("d"), py::arg("pi"), py::arg("q"), py::arg("pg"));

    m.def("enumerate_spectra", [](int c, int kmin, int kmax, bool spectrum2, bool symmetric, bool c3_nonneg,
                                  bool exclude_ge_1, bool connectivity) {
        SpectrumRules r;
        r.spectrum2 = spectrum2;
        r.symmetric = symmetric;
        r.c3_nonneg = c3_nonneg;
        r.exclude_ge_1 = exclude_ge_1;
        r.connectivity = connectivity;
        return enumerate_spectra(c, kmin, kmax, r);
    }, py::arg("c"), py::arg("kmin") = -4, py::arg("kmax") = 3, py::arg("spectrum2") = false,
       py::arg("symmetric") = false, py::arg("c3_nonneg") = false, py::arg("exclude_ge_1") = false,
       py::arg("connectivity") = true);
    m.def("h1_from_spectrum", &h1_from_spectrum, py::arg("spectrum"), py::arg("l"));
    m.def("h2_from_spectrum", &h2_from_spectrum, py::arg("spectrum"), py::arg("l"));

    m.def("classify_pencil", [](const std::vector<std::string>& rows) {
        PencilClass pc = classify_pencil(parse_2x4(rows));
        py::dict out;
        out["case"] = std::string(to_string(pc.tag));
        out["partition"] = pc.partition;
        out["m"] = pc.m;
        out["e"] = pc.e;
        out["det"] = pc.det.str({"t0", "t1"});
        out["roots_split"] = pc.roots_split;
        out["degeneracy"] = pc.degeneracy;
        return out;
    }, py::arg("rows"), "rows: two strings of comma-separated linear forms in x0..x3");

    m.def("coh_table", [](int n, const std::string& expr, int lo, int hi) {
        CohTable t = coh_table(node_of(n, expr), lo, hi);
        // rows indexed by l, entries h^0..h^n; None marks an indeterminate cell
        std::vector<std::vector<std::optional<int>>> out;
        for (int l = lo; l <= hi; ++l) {
            std::vector<std::optional<int>> row;
            for (int i = 0; i <= n; ++i) {
                const CohCell& c = t.at(i, l);
                row.push_back(c.exact ? std::optional<int>(c.h) : std::nullopt);
            }
            out.push_back(row);
        }
        return out;
    }, py::arg("n"), py::arg("node_json"), py::arg("lo"), py::arg("hi"));

    m.def("is_globally_generated", [](int n, const std::string& expr, int trials, std::uint64_t seed,
                                      const std::vector<std::vector<std::string>>& hint_lines) {
        NodePtr node = node_of(n, expr);
        GGHints h;
        for (const auto& l : hint_lines) h.lines.push_back(line_from_equations(equations(l, n + 1)));
        GGVerdict v = is_globally_generated(node, trials, seed, h);
        py::dict out;
        out["verdict"] = std::string(to_string(v.tag));
        out["h0"] = v.h0;
        out["trials"] = v.trials;
        out["witness_split"] = v.witness_split;
        out["witness_holds"] = v.tag == GGTag::NotGenerated && witness_holds(node, v);
        return out;
    }, py::arg("n"), py::arg("node_json"), py::arg("trials") = 500, py::arg("seed") = 1,
       py::arg("hint_lines") = std::vector<std::vector<std::string>>{});

    m.def("splitting_type", [](int n, const std::string& expr, const std::vector<std::string>& line) {
        return splitting_type_on_line(node_of(n, expr), line_from_equations(equations(line, n + 1)));
    }, py::arg("n"), py::arg("node_json"), py::arg("line"));

    m.def("cayley_bacharach", [](const std::vector<std::vector<long long>>& pts, int d) {
        std::vector<Point> ps;
        for (const auto& p : pts) ps.push_back(point(p));
        return cayley_bacharach(ps, d);
    }, py::arg("points"), py::arg("d"));

    m.def("edge_avoidance", [](const std::vector<std::string>& line, const std::vector<std::vector<long long>>& pts) {
        std::vector<Point> ps;
        for (const auto& p : pts) ps.push_back(point(p));
        return edge_avoidance(line_from_equations(equations(line, 4)), ps);
    }, py::arg("line"), py::arg("points"));

    m.def("beilinson_terms", [](int n, const std::vector<std::tuple<int, int, int>>& cells, int shift) {
        CohTable t = CohTable::zeros(n, -n + shift, shift);
        for (auto [i, l, h] : cells) {
            if (i < 0 || i > n || !t.covers(l)) throw std::invalid_argument("cell out of range");
            t.at(i, l).h = h;
        }
        MonadShape s = beilinson_terms(t, shift);
        std::vector<std::pair<int, std::vector<std::pair<int, int>>>> out;
        for (int p = s.lo; p < s.lo + static_cast<int>(s.terms.size()); ++p) {
            std::vector<std::pair<int, int>> terms;
            for (const auto& term : s.at(p)) terms.push_back({term.mult, term.i});
            out.push_back({p, terms});
        }
        return out;
    }, py::arg("n"), py::arg("cells"), py::arg("shift") = 0,
       "cells: (i, l, h) triples of the table of the sheaf before shifting; returns [(p, [(mult, i)])] for Omega^i(i)");

    m.def("wedge_map_rank", [](int dim, const std::vector<std::pair<std::vector<int>, long long>>& terms, int q) {
        if (terms.empty()) throw std::invalid_argument("empty exterior element");
        ExtElement w{dim, static_cast<int>(terms[0].first.size()), {}};
        for (const auto& [idx, c] : terms) w = w + ExtElement::basis(dim, idx) * Fp(c);
        return wedge_map_rank(w, q);
    }, py::arg("dim"), py::arg("terms"), py::arg("q"));

    m.def("verify_catalog", [](const std::string& path, std::uint64_t seed, int trials) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        py::gil_scoped_release release;
        auto rep = verify_all(load_catalog(path), opt);
        return rep.to_json().dump();
    }, py::arg("path"), py::arg("seed") = 1, py::arg("trials") = 500, "JSON report as a string");
}
