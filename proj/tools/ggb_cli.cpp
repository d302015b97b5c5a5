// ggb: command line front end.
// Exit codes: 0 pass, 1 verification failure (or a predicate that does not
// hold), 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "ggb/beilinson.hpp"
#include "ggb/catalog.hpp"
#include "ggb/chern.hpp"
#include "ggb/complex.hpp"
#include "ggb/geom.hpp"
#include "ggb/pencil.hpp"
#include "ggb/spectra.hpp"

using namespace ggb;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 1;
    std::string window;
    bool json_out = false;
    int trials = 500;
};

struct NodeInput {
    int n = 3;
    std::string node_json;
    std::string entry;
    std::string catalog = GGB_DEFAULT_CATALOG;
};

void add_node_options(CLI::App* sub, NodeInput& in) {
    sub->add_option("--n", in.n, "dimension of the ambient P^n");
    sub->add_option("--node", in.node_json, "node expression in catalog JSON form");
    sub->add_option("--entry", in.entry, "take the node of this catalog entry");
    sub->add_option("--catalog", in.catalog, "catalog file");
}

std::pair<NodePtr, int> load_node(const NodeInput& in) {
    if (!in.entry.empty()) {
        Catalog cat = load_catalog(in.catalog);
        for (size_t k = 0; k < cat.entries.size(); ++k) {
            const auto& e = cat.entries[k];
            if (e.id != in.entry) continue;
            if (!e.parse_error.empty()) throw InputError(e.id + ": " + e.parse_error);
            std::function<NodePtr(const std::string&)> refs = [&](const std::string& id) -> NodePtr {
                for (const auto& t : cat.entries)
                    if (t.id == id) return build_node(t.node, t.n, refs);
                throw InputError("unknown reference " + id);
            };
            return {build_node(e.node, e.n, refs), e.n};
        }
        throw InputError("no entry '" + in.entry + "' in " + in.catalog);
    }
    if (in.node_json.empty()) throw InputError("give --node or --entry");
    return {build_node(parse_expr(json::parse(in.node_json), in.n), in.n), in.n};
}

std::pair<int, int> parse_window(const std::string& s, std::pair<int, int> dflt) {
    if (s.empty()) return dflt;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw InputError("window must be LO:HI");
    const int lo = std::stoi(s.substr(0, colon)), hi = std::stoi(s.substr(colon + 1));
    if (lo > hi) throw InputError("window must have LO <= HI");
    return {lo, hi};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string t; std::getline(ss, t, sep);)
        if (!t.empty()) out.push_back(t);
    return out;
}

std::vector<long long> int_list(const std::string& s) {
    std::vector<long long> v;
    for (const auto& t : split(s, ',')) v.push_back(std::stoll(t));
    return v;
}

std::vector<Point> parse_points(const std::string& s) {
    std::vector<Point> pts;
    for (const auto& p : split(s, ';')) {
        Point x;
        for (long long c : int_list(p)) x.push_back(Fp(c));
        pts.push_back(x);
    }
    return pts;
}

std::vector<Form> parse_line(const std::string& s, int nvars) {
    std::vector<Form> eqs;
    for (const auto& t : split(s, ',')) eqs.push_back(Form::parse(t, nvars, 1));
    return eqs;
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

json table_json(const CohTable& t) {
    json cols = json::array();
    for (int l = t.l_lo; l <= t.l_hi; ++l) {
        json hs = json::array();
        for (int i = 0; i <= t.n; ++i) {
            const CohCell& c = t.at(i, l);
            hs.push_back(c.exact ? json(c.h) : json{{"lo", c.lo}, {"hi", c.hi}});
        }
        cols.push_back({{"l", l}, {"h", hs}});
    }
    return {{"n", t.n}, {"columns", cols}};
}

std::string table_text(const CohTable& t) {
    std::ostringstream os;
    os << "   l";
    for (int i = 0; i <= t.n; ++i) os << "      h" << i;
    os << "\n";
    for (int l = t.l_lo; l <= t.l_hi; ++l) {
        os.width(4);
        os << l;
        for (int i = 0; i <= t.n; ++i) {
            const CohCell& c = t.at(i, l);
            std::string s = c.exact ? std::to_string(c.h) : "[" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "]";
            os << std::string(s.size() < 8 ? 8 - s.size() : 1, ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

ChernVector chern_from_flags(int n, long long rank, const std::string& cs) {
    ChernVector c{n, rank, int_list(cs)};
    if (static_cast<int>(c.c.size()) > n) throw InputError("more Chern classes than n");
    c.c.resize(n, 0);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"globally generated bundle toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option_function<std::uint32_t>(
           "--prime", [](std::uint32_t p) { set_prime(p); }, "characteristic of the base field (default 32003)");
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--window", g.window, "twist window LO:HI");
    app.add_flag("--json", g.json_out, "JSON output");
    app.add_option("--trials", g.trials, "random points for sampling tests")->capture_default_str();

    int result = 0;
    auto out = [&](const json& j, const std::string& text) {
        if (g.json_out)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    };

    // chern
    NodeInput chern_in;
    auto* chern = app.add_subcommand("chern", "Chern vector of a node");
    add_node_options(chern, chern_in);
    chern->callback([&] {
        auto [node, n] = load_node(chern_in);
        ChernVector c = chern_of_node(node);
        out({{"n", n}, {"rank", c.rank}, {"c", c.c}}, c.str() + "\n");
    });

    // rr
    int rr_n = 3;
    long long rr_rank = 1;
    std::string rr_c;
    auto* rr = app.add_subcommand("rr", "Euler characteristics from Chern classes");
    rr->add_option("--n", rr_n)->required();
    rr->add_option("--rank", rr_rank)->required();
    rr->add_option("--c", rr_c, "c1,c2,...")->required();
    rr->callback([&] {
        ChernVector c = chern_from_flags(rr_n, rr_rank, rr_c);
        auto [lo, hi] = parse_window(g.window, {-rr_n - 3, 4});
        json j = json::array();
        std::string text;
        bool integral = true;
        for (int l = lo; l <= hi && integral; ++l) {
            try {
                const long long chi = rr_chi(c, l);
                j.push_back({{"l", l}, {"chi", chi}});
                text += "chi(E(" + std::to_string(l) + ")) = " + std::to_string(chi) + "\n";
            } catch (const RRDomainError& e) {
                integral = false;
                text += std::string("no integral Euler characteristic: ") + e.what() + "\n";
            }
        }
        json s;
        if (rr_n == 4) {
            auto sr = schwarzenberger(c);
            s = {{"ok", sr.ok}, {"residue", sr.residue}};
            text += std::string("schwarzenberger: ") + (sr.ok ? "ok" : "fails") + ", residue " + std::to_string(sr.residue) + "\n";
        }
        out({{"chi", j}, {"integral", integral}, {"schwarzenberger", s}}, text);
        if (!integral || (rr_n == 4 && !s["ok"].get<bool>())) result = 1;
    });

    // spectra
    int sp_c = 2, sp_kmin = -4, sp_kmax = 3;
    SpectrumRules sp_rules;
    bool sp_noconn = false;
    auto* spectra = app.add_subcommand("spectra", "admissible spectra with their h1 and h2 values");
    spectra->add_option("--c2", sp_c)->required();
    spectra->add_option("--kmin", sp_kmin)->capture_default_str();
    spectra->add_option("--kmax", sp_kmax)->capture_default_str();
    spectra->add_flag("--spectrum2", sp_rules.spectrum2, "apply the finer rule for stable rank 2 bundles");
    spectra->add_flag("--symmetric", sp_rules.symmetric, "locally free case");
    spectra->add_flag("--c3-nonneg", sp_rules.c3_nonneg);
    spectra->add_flag("--exclude-ge-1", sp_rules.exclude_ge_1);
    spectra->add_flag("--no-connectivity", sp_noconn);
    spectra->callback([&] {
        sp_rules.connectivity = !sp_noconn;
        auto [lo, hi] = parse_window(g.window, {-4, 0});
        json j = json::array();
        std::string text;
        for (const auto& s : enumerate_spectra(sp_c, sp_kmin, sp_kmax, sp_rules)) {
            json h1 = json::object(), h2 = json::object();
            text += vec_str(s) + "  c3=" + std::to_string(c3_from_spectrum(s)) + "  h1:";
            for (int l = lo; l <= std::min(hi, -1); ++l) {
                h1[std::to_string(l)] = h1_from_spectrum(s, l);
                text += " " + std::to_string(h1_from_spectrum(s, l));
            }
            text += "  h2:";
            for (int l = std::max(lo, -3); l <= hi; ++l) {
                h2[std::to_string(l)] = h2_from_spectrum(s, l);
                text += " " + std::to_string(h2_from_spectrum(s, l));
            }
            text += "\n";
            j.push_back({{"spectrum", s}, {"c3", c3_from_spectrum(s)}, {"h1", h1}, {"h2", h2}});
        }
        out(j, text);
    });

    // classify-pencil
    std::vector<std::string> pen_rows;
    auto* pen = app.add_subcommand("classify-pencil", "classify a 2x4 matrix of linear forms on P^3");
    pen->add_option("rows", pen_rows, "two rows of comma-separated forms in x0..x3")->required()->expected(2);
    pen->callback([&] {
        PencilClass pc = classify_pencil(parse_2x4(pen_rows));
        std::string text = std::string("case: ") + to_string(pc.tag) + "\n";
        if (!pc.partition.empty()) text += "root multiplicities: " + vec_str(pc.partition) + "\n";
        if (pc.m) text += "cokernel O(" + std::to_string(pc.m) + "), e = " + std::to_string(pc.e) + "\n";
        text += "det: " + pc.det.str({"t0", "t1"}) + "\n";
        if (!pc.degeneracy.empty()) text += "degeneracy: " + pc.degeneracy + "\n";
        if (pc.canonical) text += "canonical:\n" + pc.canonical->str() + "\n";
        json j = {{"case", to_string(pc.tag)}, {"partition", pc.partition}, {"m", pc.m}, {"e", pc.e},
                  {"det", pc.det.str({"t0", "t1"})}, {"roots_split", pc.roots_split}, {"degeneracy", pc.degeneracy}};
        if (pc.canonical) j["canonical"] = to_json(*pc.canonical);
        out(j, text);
    });

    // coh
    NodeInput coh_in;
    auto* coh = app.add_subcommand("coh", "cohomology table of a node");
    add_node_options(coh, coh_in);
    coh->callback([&] {
        auto [node, n] = load_node(coh_in);
        auto [lo, hi] = parse_window(g.window, default_coh_window(n));
        CohTable t = coh_table(node, lo, hi);
        out(table_json(t), table_text(t));
    });

    // gg
    NodeInput gg_in;
    std::vector<std::string> gg_lines;
    bool gg_exact = false;
    auto* gg = app.add_subcommand("gg", "global generation test");
    add_node_options(gg, gg_in);
    gg->add_option("--hint-line", gg_lines, "comma-separated linear equations of a line to inspect");
    gg->add_flag("--exact", gg_exact, "try the minor-ideal certificate");
    gg->callback([&] {
        auto [node, n] = load_node(gg_in);
        GGHints hints;
        for (const auto& l : gg_lines) hints.lines.push_back(line_from_equations(parse_line(l, n + 1)));
        GGVerdict v = is_globally_generated(node, g.trials, g.seed, hints, gg_exact);
        std::string text = std::string("verdict: ") + to_string(v.tag) + "\nh0: " + std::to_string(v.h0) +
                           "\ntrials: " + std::to_string(v.trials) + ", seed " + std::to_string(v.seed) + "\n";
        if (!v.witness_split.empty()) text += "witness line splitting type: " + vec_str(v.witness_split) + "\n";
        if (!v.detail.empty()) text += v.detail + "\n";
        out({{"verdict", to_string(v.tag)}, {"h0", v.h0}, {"trials", v.trials}, {"seed", v.seed},
             {"witness_split", v.witness_split}, {"detail", v.detail}},
            text);
        if (v.tag == GGTag::NotGenerated) result = 1;
    });

    // cb
    std::string cb_pts;
    int cb_d = 1;
    auto* cb = app.add_subcommand("cb", "Cayley-Bacharach condition for plane points");
    cb->add_option("--points", cb_pts, "x,y,z;x,y,z;...")->required();
    cb->add_option("--d", cb_d)->required();
    cb->callback([&] {
        const bool ok = cayley_bacharach(parse_points(cb_pts), cb_d);
        out({{"cayley_bacharach", ok}}, ok ? "holds\n" : "fails\n");
        if (!ok) result = 1;
    });

    // splits
    NodeInput sp_in;
    std::vector<std::string> sp_lines;
    auto* splits = app.add_subcommand("splits", "splitting type on lines");
    add_node_options(splits, sp_in);
    splits->add_option("--line", sp_lines, "comma-separated linear equations")->required();
    splits->callback([&] {
        auto [node, n] = load_node(sp_in);
        json j = json::array();
        std::string text;
        for (const auto& l : sp_lines) {
            auto ty = splitting_type_on_line(node, line_from_equations(parse_line(l, n + 1)));
            j.push_back({{"line", l}, {"type", ty}});
            text += "{" + l + "}: " + vec_str(ty) + "\n";
        }
        out(j, text);
    });

    // edges
    std::string ed_line, ed_pts;
    auto* edges = app.add_subcommand("edges", "does a line avoid the edges of a tetrahedron in P^3");
    edges->add_option("--line", ed_line, "two linear equations")->required();
    edges->add_option("--points", ed_pts, "four vertices")->required();
    edges->callback([&] {
        const bool ok = edge_avoidance(line_from_equations(parse_line(ed_line, 4)), parse_points(ed_pts));
        out({{"avoids_edges", ok}}, ok ? "line avoids every edge\n" : "line meets an edge\n");
        if (!ok) result = 1;
    });

    // beilinson
    int be_n = 3, be_shift = 0;
    std::string be_cells;
    auto* be = app.add_subcommand("beilinson", "Beilinson monad terms from a cohomology table");
    be->add_option("--n", be_n)->required();
    be->add_option("--cells", be_cells, "nonzero cells i:l:h,... (all others zero)");
    be->add_option("--shift", be_shift, "use the table of F(shift)");
    be->callback([&] {
        CohTable t = CohTable::zeros(be_n, -be_n + be_shift, be_shift);
        for (const auto& c : split(be_cells, ',')) {
            auto parts = split(c, ':');
            if (parts.size() != 3) throw InputError("cells are i:l:h");
            const int i = std::stoi(parts[0]), l = std::stoi(parts[1]);
            if (i < 0 || i > be_n || !t.covers(l)) throw InputError("cell out of range: " + c);
            t.at(i, l).h = std::stoi(parts[2]);
        }
        MonadShape s = beilinson_terms(t, be_shift);
        json j = json::array();
        std::string text;
        for (int p = s.lo; p < s.lo + static_cast<int>(s.terms.size()); ++p) {
            json terms = json::array();
            text += "C^" + std::to_string(p) + ":";
            for (const auto& term : s.at(p)) {
                terms.push_back({{"mult", term.mult}, {"omega", term.i}});
                text += " Omega^" + std::to_string(term.i) + "(" + std::to_string(term.i) + ")^" + std::to_string(term.mult);
            }
            if (s.at(p).empty()) text += " 0";
            text += "\n";
            j.push_back({{"p", p}, {"terms", terms}});
        }
        out(j, text);
    });

    // liaison
    std::string li_res, li_a, li_b;
    bool li_trim = false;
    auto* li = app.add_subcommand("liaison", "resolution of the residual scheme in a complete intersection on P^3");
    li->add_option("--res", li_res, "resolution of I_Y(t) at positions -2..0, catalog complex JSON")->required();
    li->add_option("--a", li_a)->required();
    li->add_option("--b", li_b)->required();
    li->add_flag("--trim", li_trim, "cancel scalar summands");
    li->callback([&] {
        FreeComplex res = parse_complex_json(json::parse(li_res), 4);
        FreeComplex c = ferrand_liaison(res, Form::parse(li_a, 4), Form::parse(li_b, 4));
        if (li_trim) c = trim(c);
        std::string text;
        for (int p = c.lo(); p <= c.hi(); ++p) text += "C^" + std::to_string(p) + ": O" + vec_str(c.term(p)) + "\n";
        auto [lo, hi] = parse_window(g.window, {-2, 4});
        for (int l = lo; l <= hi; ++l) text += "chi(H^0(C)(" + std::to_string(l) + ")) = " + std::to_string(euler_char(c, l)) + "\n";
        out(to_json(c), text);
    });

    // catalog verify
    auto* cat = app.add_subcommand("catalog", "catalog operations");
    cat->require_subcommand(1);
    cat->fallthrough();
    std::string cat_path = GGB_DEFAULT_CATALOG;
    int cat_threads = 0;
    auto* verify = cat->add_subcommand("verify", "verify every entry");
    verify->add_option("path", cat_path, "catalog file")->capture_default_str();
    verify->add_option("--threads", cat_threads);
    verify->callback([&] {
        Catalog c = load_catalog(cat_path);
        VerifyOptions opt{g.seed, g.trials, cat_threads};
        VerifyReport rep = verify_all(c, opt);
        out(rep.to_json(), rep.text());
        if (!rep.ok()) result = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return result;
}
