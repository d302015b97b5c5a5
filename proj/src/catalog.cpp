#include "ggb/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "ggb/chern.hpp"

namespace ggb {

namespace {

const std::map<Expr::Tag, std::string> kTagNames = {
    {Expr::Tag::Sum, "sum"},     {Expr::Tag::Ker, "ker"},     {Expr::Tag::KerInto, "ker_into"},
    {Expr::Tag::KerFrom, "ker_from"}, {Expr::Tag::Quot, "quot"}, {Expr::Tag::Twist, "twist"},
    {Expr::Tag::Oplus, "oplus"}, {Expr::Tag::Dual, "dual"},   {Expr::Tag::Monad, "monad"},
    {Expr::Tag::P, "p"},         {Expr::Tag::Ref, "ref"},
};

const std::map<GGExpect, std::string> kGGNames = {
    {GGExpect::Generated, "generated"},
    {GGExpect::NotGenerated, "not-generated"},
    {GGExpect::GeneratedForInstance, "generated-for-this-instance"},
};

Form parse_form(const json& j, int nvars, int degree_hint = 0) {
    if (!j.is_string()) throw CatalogError("form must be a string: " + j.dump());
    return Form::parse(j.get<std::string>(), nvars, degree_hint);
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw CatalogError(std::string(what) + " must be a list");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw CatalogError(std::string(what) + " must hold integers");
        v.push_back(x.get<int>());
    }
    return v;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw CatalogError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Form> parse_line(const json& j, int nvars) {
    std::vector<Form> eqs;
    for (const auto& f : j) eqs.push_back(parse_form(f, nvars, 1));
    return eqs;
}

json line_json(const std::vector<Form>& eqs) {
    json a = json::array();
    for (const auto& f : eqs) a.push_back(f.str());
    return a;
}

std::uint64_t entry_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : id) h = (h ^ c) * 1099511628211ull;
    return seed ^ h;
}

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

GradedMatrix parse_matrix(const json& j, int nvars) {
    auto src = int_list(field(j, "src"), "src");
    auto tgt = int_list(field(j, "tgt"), "tgt");
    const json& rows = field(j, "rows");
    if (!rows.is_array() || rows.size() != tgt.size()) throw CatalogError("matrix rows do not match tgt");
    GradedMatrix m(nvars, src, tgt);
    for (size_t i = 0; i < tgt.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != src.size()) throw CatalogError("matrix row has wrong length");
        for (size_t k = 0; k < src.size(); ++k) {
            const int deg = tgt[i] - src[k];
            Form f = parse_form(rows[i][k], nvars, std::max(deg, 0));
            if (f.is_zero()) continue;
            if (f.degree() != deg) throw CatalogError("entry degree does not match twists: " + rows[i][k].dump());
            m.set(static_cast<int>(i), static_cast<int>(k), f);
        }
    }
    return m;
}

json to_json(const GradedMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(m.at(i, k).is_zero() ? std::string("0") : m.at(i, k).str());
        rows.push_back(r);
    }
    return {{"src", m.src()}, {"tgt", m.tgt()}, {"rows", rows}};
}

FreeComplex parse_complex_json(const json& j, int nvars) {
    const int lo = field(j, "lo").get<int>();
    std::vector<std::vector<int>> terms;
    for (const auto& t : field(j, "terms")) terms.push_back(int_list(t, "terms"));
    std::vector<GradedMatrix> maps;
    for (const auto& m : field(j, "maps")) maps.push_back(parse_matrix(m, nvars));
    if (terms.empty() || maps.size() + 1 != terms.size()) throw CatalogError("complex needs one map per consecutive pair of terms");
    for (size_t k = 0; k < maps.size(); ++k)
        if (maps[k].src() != terms[k] || maps[k].tgt() != terms[k + 1]) throw CatalogError("complex map does not match terms");
    return FreeComplex(nvars, lo, terms, maps);
}

json to_json(const FreeComplex& c) {
    json terms = json::array(), maps = json::array();
    for (int p = c.lo(); p <= c.hi(); ++p) terms.push_back(c.term(p));
    for (const auto& m : c.diffs()) maps.push_back(to_json(m));
    return {{"lo", c.lo()}, {"terms", terms}, {"maps", maps}};
}

FreeComplex ComplexExpr::build() const {
    if (!koszul) return explicit_complex;
    FreeComplex c = ggb::twist(ggb::koszul(forms), twist);
    if (trunc) c = truncate(c, trunc->first, trunc->second);
    return c;
}

Expr parse_expr(const json& j, int n) {
    const int nv = n + 1;
    if (!j.is_object() || j.size() != 1) throw CatalogError("expression must be an object with one tag: " + j.dump());
    const std::string key = j.begin().key();
    const json& v = j.begin().value();
    Expr e;
    auto kid = [&](const json& x) { return std::make_shared<Expr>(parse_expr(x, n)); };
    if (key == "sum") {
        e.tag = Expr::Tag::Sum;
        e.twists = int_list(v, "sum");
    } else if (key == "ker") {
        e.tag = Expr::Tag::Ker;
        e.matrix = parse_matrix(v, nv);
    } else if (key == "ker_into") {
        e.tag = Expr::Tag::KerInto;
        e.matrix = parse_matrix(field(v, "map"), nv);
        e.kids.push_back(kid(field(v, "target")));
    } else if (key == "ker_from") {
        e.tag = Expr::Tag::KerFrom;
        e.kids.push_back(kid(field(v, "source")));
        e.matrix = parse_matrix(field(v, "map"), nv);
    } else if (key == "quot") {
        e.tag = Expr::Tag::Quot;
        e.matrix = parse_matrix(field(v, "map"), nv);
        e.kids.push_back(kid(field(v, "of")));
    } else if (key == "twist") {
        e.tag = Expr::Tag::Twist;
        e.kids.push_back(kid(field(v, "of")));
        e.amount = field(v, "by").get<int>();
    } else if (key == "oplus") {
        e.tag = Expr::Tag::Oplus;
        if (!v.is_array() || v.empty()) throw CatalogError("oplus needs a nonempty list");
        for (const auto& x : v) e.kids.push_back(kid(x));
    } else if (key == "dual") {
        e.tag = Expr::Tag::Dual;
        e.kids.push_back(kid(v));
    } else if (key == "p") {
        e.tag = Expr::Tag::P;
        e.kids.push_back(kid(v));
    } else if (key == "ref") {
        e.tag = Expr::Tag::Ref;
        e.ref = v.get<std::string>();
    } else if (key == "monad") {
        e.tag = Expr::Tag::Monad;
        e.amount = field(v, "at").get<int>();
        const json& c = field(v, "complex");
        if (c.contains("koszul")) {
            e.complex.koszul = true;
            for (const auto& f : c.at("koszul")) e.complex.forms.push_back(parse_form(f, nv));
            if (c.contains("twist")) e.complex.twist = c.at("twist").get<int>();
            if (c.contains("trunc")) {
                auto t = int_list(c.at("trunc"), "trunc");
                if (t.size() != 2) throw CatalogError("trunc needs [lo, hi]");
                e.complex.trunc = {t[0], t[1]};
            }
        } else {
            e.complex.explicit_complex = parse_complex_json(c, nv);
        }
    } else {
        throw CatalogError("unknown expression tag '" + key + "'");
    }
    return e;
}

json to_json(const Expr& e) {
    const std::string& key = kTagNames.at(e.tag);
    json v;
    switch (e.tag) {
    case Expr::Tag::Sum: v = e.twists; break;
    case Expr::Tag::Ker: v = to_json(e.matrix); break;
    case Expr::Tag::KerInto: v = {{"map", to_json(e.matrix)}, {"target", to_json(*e.kids[0])}}; break;
    case Expr::Tag::KerFrom: v = {{"source", to_json(*e.kids[0])}, {"map", to_json(e.matrix)}}; break;
    case Expr::Tag::Quot: v = {{"map", to_json(e.matrix)}, {"of", to_json(*e.kids[0])}}; break;
    case Expr::Tag::Twist: v = {{"of", to_json(*e.kids[0])}, {"by", e.amount}}; break;
    case Expr::Tag::Oplus:
        v = json::array();
        for (const auto& k : e.kids) v.push_back(to_json(*k));
        break;
    case Expr::Tag::Dual:
    case Expr::Tag::P: v = to_json(*e.kids[0]); break;
    case Expr::Tag::Ref: v = e.ref; break;
    case Expr::Tag::Monad: {
        json c;
        if (e.complex.koszul) {
            c["koszul"] = line_json(e.complex.forms);
            if (e.complex.twist) c["twist"] = e.complex.twist;
            if (e.complex.trunc) c["trunc"] = {e.complex.trunc->first, e.complex.trunc->second};
        } else {
            c = to_json(e.complex.explicit_complex);
        }
        v = {{"complex", c}, {"at", e.amount}};
        break;
    }
    }
    return {{key, v}};
}

NodePtr build_node(const Expr& e, int n, const RefResolver& refs) {
    auto kid = [&](size_t i) { return build_node(*e.kids.at(i), n, refs); };
    switch (e.tag) {
    case Expr::Tag::Sum: return SheafNode::line_sum(n, e.twists);
    case Expr::Tag::Ker: return SheafNode::ker_epi(e.matrix);
    case Expr::Tag::KerInto: return SheafNode::ker_into(e.matrix, kid(0));
    case Expr::Tag::KerFrom: return SheafNode::ker_from(kid(0), e.matrix);
    case Expr::Tag::Quot: return SheafNode::sub_quot(e.matrix, kid(0));
    case Expr::Tag::Twist: return SheafNode::twist(kid(0), e.amount);
    case Expr::Tag::Oplus: {
        std::vector<NodePtr> parts;
        for (size_t i = 0; i < e.kids.size(); ++i) parts.push_back(kid(i));
        return SheafNode::direct_sum(parts);
    }
    case Expr::Tag::Dual: return SheafNode::dual(kid(0));
    case Expr::Tag::Monad: return SheafNode::monad(e.complex.build(), e.amount);
    case Expr::Tag::P: return SheafNode::p_transform(kid(0));
    case Expr::Tag::Ref:
        if (!refs) throw CatalogError("reference '" + e.ref + "' cannot be resolved here");
        return refs(e.ref);
    }
    throw CatalogError("bad expression");
}

namespace {

CatalogEntry parse_entry(const json& j) {
    CatalogEntry e;
    e.raw = j;
    try {
        e.id = field(j, "id").get<std::string>();
        e.n = field(j, "n").get<int>();
        if (e.n < 1 || e.n > 8) throw CatalogError("n out of range");
        const int nv = e.n + 1;
        e.node = parse_expr(field(j, "node"), e.n);
        if (j.contains("notes")) e.notes = j.at("notes").get<std::string>();
        if (j.contains("window")) {
            auto w = int_list(j.at("window"), "window");
            if (w.size() != 2 || w[0] > w[1]) throw CatalogError("window needs [lo, hi]");
            e.window = {w[0], w[1]};
        }
        if (!j.contains("expect")) return e;
        const json& x = j.at("expect");
        if (x.contains("chern")) {
            const json& c = x.at("chern");
            ChernVector cv;
            cv.n = e.n;
            cv.rank = field(c, "rank").get<long long>();
            for (const auto& ci : field(c, "c")) cv.c.push_back(ci.get<long long>());
            if (static_cast<int>(cv.c.size()) != e.n) throw CatalogError("chern vector needs n classes");
            e.chern = cv;
        }
        if (x.contains("cells"))
            for (const auto& c : x.at("cells")) {
                ExpectedCell cell{field(c, "i").get<int>(), field(c, "l").get<int>(), field(c, "h").get<int>(),
                                  field(c, "tag").get<std::string>(), field(c, "anchor").get<std::string>()};
                if (cell.tag != "PAPER" && cell.tag != "DERIVED" && cell.tag != "TRIVIAL")
                    throw CatalogError("unknown provenance tag '" + cell.tag + "'");
                if (cell.anchor.empty()) throw CatalogError("cell without anchor");
                e.cells.push_back(cell);
            }
        if (x.contains("gg")) {
            const std::string g = x.at("gg").get<std::string>();
            auto it = std::find_if(kGGNames.begin(), kGGNames.end(), [&](const auto& kv) { return kv.second == g; });
            if (it == kGGNames.end()) throw CatalogError("unknown gg expectation '" + g + "'");
            e.gg = it->first;
        }
        if (x.contains("gg_hint_lines"))
            for (const auto& l : x.at("gg_hint_lines")) e.gg_hint_lines.push_back(parse_line(l, nv));
        if (x.contains("split"))
            for (const auto& s : x.at("split"))
                e.splits.push_back({parse_line(field(s, "line"), nv), int_list(field(s, "type"), "type")});
        if (x.contains("dual_vanishing")) e.dual_vanishing = x.at("dual_vanishing").get<bool>();
    } catch (const std::exception& ex) {
        e.parse_error = ex.what();
    }
    return e;
}

}  // namespace

json to_json(const CatalogEntry& e) {
    if (!e.parse_error.empty()) return e.raw;
    json j = {{"id", e.id}, {"n", e.n}, {"node", to_json(e.node)}};
    if (e.window) j["window"] = {e.window->first, e.window->second};
    json x = json::object();
    if (e.chern) x["chern"] = {{"rank", e.chern->rank}, {"c", e.chern->c}};
    if (!e.cells.empty()) {
        json cells = json::array();
        for (const auto& c : e.cells)
            cells.push_back({{"i", c.i}, {"l", c.l}, {"h", c.h}, {"tag", c.tag}, {"anchor", c.anchor}});
        x["cells"] = cells;
    }
    if (e.gg != GGExpect::None) x["gg"] = kGGNames.at(e.gg);
    if (!e.gg_hint_lines.empty()) {
        json lines = json::array();
        for (const auto& l : e.gg_hint_lines) lines.push_back(line_json(l));
        x["gg_hint_lines"] = lines;
    }
    if (!e.splits.empty()) {
        json s = json::array();
        for (const auto& sp : e.splits) s.push_back({{"line", line_json(sp.line)}, {"type", sp.type}});
        x["split"] = s;
    }
    if (e.dual_vanishing) x["dual_vanishing"] = true;
    if (!x.empty()) j["expect"] = x;
    if (!e.notes.empty()) j["notes"] = e.notes;
    return j;
}

Catalog parse_catalog(const json& j) {
    Catalog c;
    const json* list = &j;
    if (j.is_object()) list = &field(j, "entries");
    if (!list->is_array()) throw CatalogError("catalog must be a list of entries");
    for (const auto& x : *list) c.entries.push_back(parse_entry(x));
    return c;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw CatalogError(path + ": " + ex.what());
    }
    return parse_catalog(j);
}

json to_json(const Catalog& c) {
    json list = json::array();
    for (const auto& e : c.entries) list.push_back(to_json(e));
    return {{"entries", list}};
}

bool EntryReport::ok() const {
    return error.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

bool VerifyReport::ok() const { return failures() == 0; }

int VerifyReport::failures() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const EntryReport& e) { return !e.ok(); }));
}

json VerifyReport::to_json() const {
    json list = json::array();
    for (const auto& e : entries) {
        json checks = json::array();
        for (const auto& c : e.checks)
            checks.push_back({{"name", c.name}, {"ok", c.ok}, {"expected", c.expected}, {"got", c.got}, {"anchor", c.anchor}});
        json x = {{"id", e.id}, {"ok", e.ok()}, {"seed", e.seed}, {"seconds", e.seconds}, {"checks", checks}};
        if (!e.error.empty()) x["error"] = e.error;
        list.push_back(x);
    }
    return {{"ok", ok()}, {"failures", failures()}, {"seed", seed}, {"entries", list}};
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.ok() ? "PASS " : "FAIL ") << e.id << "  (" << e.checks.size() << " checks, ";
        os.precision(2);
        os << std::fixed << e.seconds << " s)\n";
        if (!e.error.empty()) os << "    error: " << e.error << "\n";
        for (const auto& c : e.checks)
            if (!c.ok) os << "    " << c.name << ": expected " << c.expected << ", got " << c.got << "\n";
    }
    os << entries.size() - failures() << "/" << entries.size() << " entries pass\n";
    return os.str();
}

EntryReport verify_entry(const CatalogEntry& e, const Catalog& cat, const VerifyOptions& opt) {
    EntryReport r;
    r.id = e.id;
    r.seed = entry_seed(opt.seed, e.id);
    const auto t0 = std::chrono::steady_clock::now();
    auto finish = [&] {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };
    if (!e.parse_error.empty()) {
        r.error = "parse: " + e.parse_error;
        return finish();
    }
    auto add = [&](std::string name, bool ok, std::string expected, std::string got, std::string anchor = "") {
        r.checks.push_back({std::move(name), ok, std::move(expected), std::move(got), std::move(anchor)});
    };

    // references resolve to earlier entries only, which rules out cycles
    std::function<NodePtr(const std::string&, size_t)> resolve = [&](const std::string& id, size_t before) -> NodePtr {
        for (size_t k = 0; k < before && k < cat.entries.size(); ++k) {
            const auto& t = cat.entries[k];
            if (t.id != id) continue;
            if (!t.parse_error.empty()) throw CatalogError("referenced entry '" + id + "' did not parse");
            if (t.n != e.n) throw CatalogError("referenced entry '" + id + "' lives on another P^n");
            return build_node(t.node, t.n, [&](const std::string& s) { return resolve(s, k); });
        }
        throw CatalogError("unknown reference '" + id + "'");
    };
    size_t self = cat.entries.size();
    for (size_t k = 0; k < cat.entries.size(); ++k)
        if (&cat.entries[k] == &e) self = k;

    NodePtr node;
    try {
        node = build_node(e.node, e.n, [&](const std::string& s) { return resolve(s, self); });
    } catch (const std::exception& ex) {
        r.error = std::string("construct: ") + ex.what();
        return finish();
    }

    try {
        const ChernVector c = chern_of_node(node);
        if (e.chern) add("chern", c == *e.chern, e.chern->str(), c.str());

        auto [lo, hi] = e.window ? *e.window : default_coh_window(e.n);
        for (const auto& cell : e.cells) {
            lo = std::min(lo, cell.l);
            hi = std::max(hi, cell.l);
        }
        if (e.dual_vanishing) lo = std::min(lo, -e.n - 1);
        const CohTable t = coh_table(node, lo, hi);

        for (const auto& cell : e.cells) {
            const CohCell& got = t.at(cell.i, cell.l);
            const std::string name = "h" + std::to_string(cell.i) + "(E(" + std::to_string(cell.l) + "))";
            add(name, got.exact && got.h == cell.h, std::to_string(cell.h),
                got.exact ? std::to_string(got.h) : "[" + std::to_string(got.lo) + "," + std::to_string(got.hi) + "]",
                cell.tag + ": " + cell.anchor);
        }

        int exact_cols = 0, rr_bad = 0;
        std::string rr_detail;
        for (int l = lo; l <= hi; ++l) {
            if (!t.column_exact(l)) continue;
            ++exact_cols;
            try {
                const long long want = rr_chi(c, l);
                if (want != t.chi(l)) {
                    ++rr_bad;
                    rr_detail += " l=" + std::to_string(l) + ":" + std::to_string(t.chi(l)) + "!=" + std::to_string(want);
                }
            } catch (const RRDomainError& ex) {
                ++rr_bad;
                rr_detail += std::string(" ") + ex.what();
            }
        }
        add("riemann-roch", rr_bad == 0, std::to_string(exact_cols) + " exact columns agree",
            std::to_string(exact_cols - rr_bad) + " agree" + rr_detail);

        if (e.dual_vanishing) {
            const CohCell& a = t.at(e.n, -e.n - 1);
            const CohCell& b = t.at(e.n - 1, -e.n - 1);
            add("h0,h1 of dual", a.exact && b.exact && a.h == 0 && b.h == 0, "0,0",
                (a.exact ? std::to_string(a.h) : "?") + "," + (b.exact ? std::to_string(b.h) : "?"));
        }

        const bool claims_gg = e.gg == GGExpect::Generated || e.gg == GGExpect::GeneratedForInstance;
        if (e.gg != GGExpect::None) {
            GGHints hints;
            for (const auto& l : e.gg_hint_lines) hints.lines.push_back(line_from_equations(l));
            const GGVerdict v = is_globally_generated(node, opt.trials, r.seed, hints);
            bool ok;
            if (claims_gg)
                ok = v.tag != GGTag::NotGenerated;
            else
                ok = v.tag == GGTag::NotGenerated && witness_holds(node, v);
            std::string got = to_string(v.tag);
            if (!v.witness_split.empty()) got += " split " + join(v.witness_split);
            if (!v.detail.empty()) got += " (" + v.detail + ")";
            add("global generation", ok, kGGNames.at(e.gg), got);
        }

        for (const auto& s : e.splits) {
            std::string got;
            bool ok = false;
            try {
                auto ty = splitting_type_on_line(node, line_from_equations(s.line));
                std::sort(ty.rbegin(), ty.rend());
                auto want = s.type;
                std::sort(want.rbegin(), want.rend());
                ok = ty == want;
                got = join(ty);
            } catch (const DegenerateRestriction& ex) {
                got = ex.what();
            }
            std::string line;
            for (const auto& f : s.line) line += (line.empty() ? "" : ",") + f.str();
            add("split on {" + line + "}", ok, join(s.type), got);
        }

        if (e.n == 4) {
            auto sr = schwarzenberger(c);
            add("schwarzenberger", sr.ok, "residue 0", "residue " + std::to_string(sr.residue));
        }
        if (e.n == 3) {
            const long long d = c.ci(1) * c.ci(2) - c.ci(3);
            add("c1c2 - c3 even", d % 2 == 0, "even", std::to_string(d));
        }
        if (claims_gg) {
            auto bad = gg_constraints(c);
            std::string got;
            for (const auto& b : bad) got += (got.empty() ? "" : "; ") + b;
            add("gg chern constraints", bad.empty(), "none violated", got.empty() ? "none violated" : got);
            if (e.n == 2) {
                std::string detail;
                for (int l = std::max(lo + 1, -1); l <= hi; ++l) {
                    const CohCell& a = t.at(1, l);
                    const CohCell& b = t.at(1, l - 1);
                    if (!a.exact || !b.exact || a.h == 0) continue;
                    if (a.h > b.h - 2) detail += " l=" + std::to_string(l);
                }
                add("h1 drops by 2", detail.empty(), "h1(E(l)) <= h1(E(l-1)) - 2", detail.empty() ? "holds" : "fails at" + detail);
            }
        }
    } catch (const std::exception& ex) {
        r.error = ex.what();
    }
    return finish();
}

VerifyReport verify_all(const Catalog& cat, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.seed = opt.seed;
    const size_t nthreads = opt.threads > 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<EntryReport> out(cat.entries.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t t = 0; t < std::min(nthreads, cat.entries.size()); ++t)
        pool.emplace_back([&] {
            for (size_t k; (k = next++) < cat.entries.size();) out[k] = verify_entry(cat.entries[k], cat, opt);
        });
    for (auto& th : pool) th.join();
    std::stable_sort(out.begin(), out.end(), [](const EntryReport& a, const EntryReport& b) { return a.id < b.id; });
    rep.entries = std::move(out);
    return rep;
}

}  // namespace ggb
