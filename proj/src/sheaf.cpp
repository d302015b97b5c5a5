#include "ggb/sheaf.hpp"

#include <algorithm>
#include <sstream>

#include "ggb/minors.hpp"

namespace ggb {

Point random_point(int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, prime() - 1);
    for (;;) {
        Point x(nvars);
        bool nz = false;
        for (auto& c : x) {
            c = Fp::raw(dist(rng));
            nz = nz || !c.is_zero();
        }
        if (nz) return x;
    }
}

const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::LineSum: return "sum";
        case NodeKind::KerEpi: return "ker";
        case NodeKind::KerInto: return "ker-into";
        case NodeKind::KerFrom: return "ker-from";
        case NodeKind::SubQuot: return "quot";
        case NodeKind::Twist: return "twist";
        case NodeKind::DirectSum: return "oplus";
        case NodeKind::Dual: return "dual";
        case NodeKind::Monad: return "complex";
        case NodeKind::PTransform: return "P";
    }
    return "?";
}

// ------------------------------------------------------------ certification

namespace {

int max_minor_degree(const GradedMatrix& m, int r) {
    std::vector<int> t = m.tgt(), s = m.src();
    std::sort(t.rbegin(), t.rend());
    std::sort(s.begin(), s.end());
    int d = 0;
    for (int i = 0; i < r; ++i) d += t[i] - s[i];
    return std::max(d, 0);
}

int degree_cap(int nvars, int max_dim) {
    int d = 0;
    while (mono_index(nvars, d + 1).size() <= max_dim && d < 60) ++d;
    return d;
}

}  // namespace

Certificate certify_model(const FreeComplex& c, const CertOptions& opt) {
    Certificate cert;
    if (!c.d_squared_zero()) throw UncertifiedNode("differentials do not compose to zero");
    if (c.lo() > 0 || c.hi() < 0) throw UncertifiedNode("model has no term at position 0");
    std::mt19937_64 rng(opt.seed);
    const int nv = c.nvars();
    const int n = nv - 1;
    std::vector<int> ranks;
    std::vector<Point> probes;
    for (int k = 0; k < 4; ++k) probes.push_back(random_point(nv, rng));
    for (int p = c.lo(); p < c.hi(); ++p) {
        int r = 0;
        for (const auto& x : probes) r = std::max(r, ggb::rank(evaluate(c.d(p), x)));
        ranks.push_back(r);
    }
    auto rank_of = [&](int p) { return (p < c.lo() || p >= c.hi()) ? 0 : ranks[p - c.lo()]; };
    for (int q = c.lo(); q <= c.hi(); ++q) {
        if (q == 0) continue;
        if (rank_of(q - 1) + rank_of(q) != c.rank_at(q))
            throw UncertifiedNode("complex is not exact at position " + std::to_string(q) + " (ranks " +
                                  std::to_string(rank_of(q - 1)) + " + " + std::to_string(rank_of(q)) +
                                  " vs " + std::to_string(c.rank_at(q)) + ")");
    }
    cert.ranks = ranks;
    const int cap = degree_cap(nv, opt.max_space_dim);
    bool sampled = false;
    for (int p = c.lo(); p < c.hi(); ++p) {
        const int r = rank_of(p);
        const GradedMatrix d = c.d(p);
        if (r == 0) {
            cert.minor_degree.push_back(-1);
            continue;
        }
        const int dmax = std::min(cap, (n + 1) * std::max(0, max_minor_degree(d, r) - 1) + 1);
        MinorTest t = minor_ideal_test(d, r, dmax, false, opt.minor_budget);
        if (t.ok) {
            cert.minor_degree.push_back(t.degree);
            continue;
        }
        if (!t.exhausted && dmax < cap)
            throw UncertifiedNode("rank of differential at position " + std::to_string(p) +
                                  " drops somewhere (minor ideal has zeros)");
        // too expensive or inconclusive within the degree cap: sample
        cert.minor_degree.push_back(-1);
        sampled = true;
        for (int k = 0; k < opt.sample_points; ++k) {
            Point x = random_point(nv, rng);
            if (ggb::rank(evaluate(d, x)) != r)
                throw UncertifiedNode("rank of differential at position " + std::to_string(p) + " drops at a sampled point");
        }
        cert.sampled_points = opt.sample_points;
    }
    cert.kind = sampled ? CertKind::Sampled : CertKind::Exact;
    return cert;
}

// ------------------------------------------------------------ nodes

SheafNode::SheafNode(NodeKind kind, int n, FreeComplex model)
    : kind_(kind), n_(n), model_(std::move(model)), dual_model_(ggb::dual(model_)) {
    if (model_.nvars() != n + 1) throw std::invalid_argument("node model lives on the wrong projective space");
}

int SheafNode::rank() const {
    int r = 0;
    for (int p = model_.lo(); p <= model_.hi(); ++p) r += (p % 2 == 0 ? 1 : -1) * model_.rank_at(p);
    return r;
}

namespace {

std::shared_ptr<SheafNode> make(NodeKind k, int n, FreeComplex model) {
    return std::make_shared<SheafNode>(k, n, std::move(model));
}

// [.. N^{-2} -> N^{-1} ⊕ A -> N^0 -> ..] with the A-component m.
FreeComplex attach_source(const FreeComplex& N, const GradedMatrix& m) {
    if (m.tgt() != N.term(0)) throw std::invalid_argument("map target does not match the node's position-0 term");
    if (!(N.d(0) * m).is_zero()) throw std::invalid_argument("map does not land in the kernel of the node's differential");
    const int lo = std::min(N.lo(), -1), hi = N.hi();
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = lo; p <= hi; ++p) terms.push_back(p == -1 ? concat(N.term(-1), m.src()) : N.term(p));
    for (int p = lo; p < hi; ++p) {
        if (p == -1)
            diffs.push_back(hstack(N.d(-1), m));
        else if (p == -2)
            diffs.push_back(vstack(N.d(-2), GradedMatrix(N.nvars(), N.term(-2), m.src())));
        else
            diffs.push_back(N.d(p));
    }
    return FreeComplex(N.nvars(), lo, terms, diffs);
}

FreeComplex attach_target(const FreeComplex& N, const GradedMatrix& m) {
    if (m.src() != N.term(0)) throw std::invalid_argument("map source does not match the node's position-0 term");
    if (!(m * N.d(-1)).is_zero()) throw std::invalid_argument("map does not vanish on the node's boundaries");
    const int lo = N.lo(), hi = std::max(N.hi(), 1);
    std::vector<std::vector<int>> terms;
    std::vector<GradedMatrix> diffs;
    for (int p = lo; p <= hi; ++p) terms.push_back(p == 1 ? concat(N.term(1), m.tgt()) : N.term(p));
    for (int p = lo; p < hi; ++p) {
        if (p == 0)
            diffs.push_back(vstack(N.d(0), m));
        else if (p == 1)
            diffs.push_back(hstack(N.d(1), GradedMatrix(N.nvars(), m.tgt(), N.term(2))));
        else
            diffs.push_back(N.d(p));
    }
    return FreeComplex(N.nvars(), lo, terms, diffs);
}

}  // namespace

NodePtr SheafNode::line_sum(int n, std::vector<int> twists) {
    auto node = make(NodeKind::LineSum, n, FreeComplex(n + 1, 0, {twists}, {}));
    return node;
}

NodePtr SheafNode::ker_epi(const GradedMatrix& m, const CertOptions& opt) {
    FreeComplex c(m.nvars(), 0, {m.src(), m.tgt()}, {m});
    Certificate cert = certify_model(c, opt);
    auto node = make(NodeKind::KerEpi, m.nvars() - 1, c);
    node->matrix_ = m;
    node->cert_ = cert;
    return node;
}

NodePtr SheafNode::ker_into(const GradedMatrix& m, NodePtr target, const CertOptions& opt) {
    FreeComplex c = shift(attach_source(target->model(), m), -1);
    Certificate cert = certify_model(c, opt);
    auto node = make(NodeKind::KerInto, target->n(), c);
    node->matrix_ = m;
    node->children_ = {target};
    node->cert_ = cert;
    return node;
}

NodePtr SheafNode::sub_quot(const GradedMatrix& m, NodePtr target, const CertOptions& opt) {
    FreeComplex c = attach_source(target->model(), m);
    Certificate cert = certify_model(c, opt);
    auto node = make(NodeKind::SubQuot, target->n(), c);
    node->matrix_ = m;
    node->children_ = {target};
    node->cert_ = cert;
    return node;
}

NodePtr SheafNode::ker_from(NodePtr source, const GradedMatrix& m, const CertOptions& opt) {
    FreeComplex c = attach_target(source->model(), m);
    Certificate cert = certify_model(c, opt);
    auto node = make(NodeKind::KerFrom, source->n(), c);
    node->matrix_ = m;
    node->children_ = {source};
    node->cert_ = cert;
    return node;
}

NodePtr SheafNode::twist(NodePtr inner, int l) {
    auto node = make(NodeKind::Twist, inner->n(), ggb::twist(inner->model(), l));
    node->children_ = {inner};
    node->twist_ = l;
    node->cert_ = inner->certificate();
    node->cert_.kind = inner->certificate().kind == CertKind::Sampled ? CertKind::Sampled : CertKind::Inherited;
    return node;
}

NodePtr SheafNode::direct_sum(const std::vector<NodePtr>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty direct sum");
    FreeComplex c = nodes[0]->model();
    bool sampled = nodes[0]->certificate().kind == CertKind::Sampled;
    for (size_t k = 1; k < nodes.size(); ++k) {
        if (nodes[k]->n() != nodes[0]->n()) throw std::invalid_argument("direct sum over different spaces");
        c = ggb::direct_sum(c, nodes[k]->model());
        sampled = sampled || nodes[k]->certificate().kind == CertKind::Sampled;
    }
    auto node = make(NodeKind::DirectSum, nodes[0]->n(), c);
    node->children_ = nodes;
    node->cert_.kind = sampled ? CertKind::Sampled : CertKind::Inherited;
    return node;
}

NodePtr SheafNode::dual(NodePtr inner) {
    auto node = make(NodeKind::Dual, inner->n(), ggb::dual(inner->model()));
    node->children_ = {inner};
    node->cert_.kind = inner->certificate().kind == CertKind::Sampled ? CertKind::Sampled : CertKind::Inherited;
    return node;
}

NodePtr SheafNode::monad(const FreeComplex& c0, int at, const CertOptions& opt) {
    FreeComplex c = shift(c0, at);
    Certificate cert = certify_model(c, opt);
    auto node = make(NodeKind::Monad, c.nvars() - 1, c);
    node->cert_ = cert;
    return node;
}

NodePtr SheafNode::p_transform(NodePtr inner, const CertOptions& opt) {
    GradedMatrix s = section_matrix(inner);
    FreeComplex k = shift(attach_source(inner->model(), s), -1);
    Certificate cert;
    try {
        cert = certify_model(k, opt);
    } catch (const UncertifiedNode& e) {
        throw NotGloballyGenerated(std::string("evaluation map is not onto: ") + e.what());
    }
    auto node = make(NodeKind::PTransform, inner->n(), ggb::dual(k));
    node->children_ = {inner};
    node->matrix_ = s;
    node->cert_ = cert;
    return node;
}

std::string SheafNode::describe() const {
    std::ostringstream os;
    auto tw = [&](const std::vector<int>& v) {
        std::ostringstream t;
        t << "(";
        for (size_t i = 0; i < v.size(); ++i) t << (i ? "," : "") << v[i];
        t << ")";
        return t.str();
    };
    switch (kind_) {
        case NodeKind::LineSum: os << "sum" << tw(model_.term(0)); break;
        case NodeKind::KerEpi: os << "ker[" << tw(matrix_.src()) << "->" << tw(matrix_.tgt()) << "]"; break;
        case NodeKind::Twist: os << children_[0]->describe() << "(" << twist_ << ")"; break;
        case NodeKind::Dual: os << "dual(" << children_[0]->describe() << ")"; break;
        case NodeKind::PTransform: os << "P(" << children_[0]->describe() << ")"; break;
        case NodeKind::DirectSum:
            for (size_t i = 0; i < children_.size(); ++i) os << (i ? " + " : "") << children_[i]->describe();
            break;
        default: {
            os << to_string(kind_) << "[";
            for (int p = model_.lo(); p <= model_.hi(); ++p) os << (p > model_.lo() ? " -> " : "") << tw(model_.term(p));
            os << "]";
        }
    }
    return os.str();
}

int SheafNode::row0(int p, int l) const {
    if (p < model_.lo() || p > model_.hi()) return 0;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = row0_cache_.find({p, l});
        if (it != row0_cache_.end()) return it->second;
    }
    int v = strand_homology(model_, p, l);
    std::lock_guard<std::mutex> lock(mu_);
    row0_cache_[{p, l}] = v;
    return v;
}

int SheafNode::rown(int p, int l) const {
    if (p < model_.lo() || p > model_.hi()) return 0;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rown_cache_.find({p, l});
        if (it != rown_cache_.end()) return it->second;
    }
    int v = strand_homology(dual_model_, -p, -l - n_ - 1);
    std::lock_guard<std::mutex> lock(mu_);
    rown_cache_[{p, l}] = v;
    return v;
}

// ------------------------------------------------------------ cohomology

const CohCell& CohTable::at(int i, int l) const {
    if (!covers(l) || i < 0 || i > n) throw std::out_of_range("cohomology cell outside table");
    return cells[l - l_lo][i];
}

CohCell& CohTable::at(int i, int l) {
    if (!covers(l) || i < 0 || i > n) throw std::out_of_range("cohomology cell outside table");
    return cells[l - l_lo][i];
}

int CohTable::h(int i, int l) const {
    const CohCell& c = at(i, l);
    if (!c.exact) throw std::runtime_error("cohomology cell is indeterminate");
    return c.h;
}

bool CohTable::column_exact(int l) const {
    for (int i = 0; i <= n; ++i)
        if (!at(i, l).exact) return false;
    return true;
}

long long CohTable::chi(int l) const {
    long long s = 0;
    for (int i = 0; i <= n; ++i) s += (i % 2 ? -1 : 1) * static_cast<long long>(h(i, l));
    return s;
}

CohTable CohTable::zeros(int n, int l_lo, int l_hi) {
    CohTable t;
    t.n = n;
    t.l_lo = l_lo;
    t.l_hi = l_hi;
    t.cells.assign(std::max(0, l_hi - l_lo + 1), std::vector<CohCell>(n + 1));
    return t;
}

std::pair<int, int> default_coh_window(int n) { return {-n - 3, 4}; }

namespace {

template <class A, class B>
std::vector<CohCell> column(int n, int lo, int hi, A a, B b) {
    // rho_k : E^{k-n-1,n} -> E^{k,0}; known or bounded by min(src, tgt)
    struct Rho {
        bool known;
        int value;
        int max;
    };
    auto rho = [&](int k) {
        const int src = b(k - n - 1), tgt = a(k);
        Rho r{false, 0, std::min(src, tgt)};
        if (r.max == 0) r.known = true;
        int forced = -1;
        if (k - 1 < 0 || k - 1 > n) forced = src;
        if (k < 0 || k > n) {
            if (forced >= 0 && forced != tgt) throw std::logic_error("model cohomology outside 0..n does not cancel");
            forced = tgt;
        }
        if (forced >= 0) {
            if (forced > r.max || (r.known && forced != 0))
                throw std::logic_error("model cohomology outside 0..n does not cancel");
            r.known = true;
            r.value = forced;
        }
        return r;
    };
    (void)lo;
    (void)hi;
    std::vector<CohCell> cells(n + 1);
    for (int k = 0; k <= n; ++k) {
        const int base = a(k) + b(k - n);
        Rho r1 = rho(k), r2 = rho(k + 1);
        int known = (r1.known ? r1.value : 0) + (r2.known ? r2.value : 0);
        int slack = (r1.known ? 0 : r1.max) + (r2.known ? 0 : r2.max);
        CohCell c;
        c.hi = base - known;
        c.lo = c.hi - slack;
        c.exact = slack == 0;
        c.h = c.exact ? c.hi : -1;
        cells[k] = c;
    }
    return cells;
}

}  // namespace

CohTable coh_table(const NodePtr& node, int l_lo, int l_hi) {
    const int n = node->n();
    CohTable t = CohTable::zeros(n, l_lo, l_hi);
    const int lo = node->model().lo(), hi = node->model().hi();
    for (int l = l_lo; l <= l_hi; ++l) {
        auto a = [&](int p) { return node->row0(p, l); };
        auto b = [&](int p) { return node->rown(p, l); };
        t.cells[l - l_lo] = column(n, lo, hi, a, b);
    }
    return t;
}

CohTable coh_table_of_model(const FreeComplex& c, int l_lo, int l_hi) {
    const int n = c.nvars() - 1;
    FreeComplex dc = dual(c);
    CohTable t = CohTable::zeros(n, l_lo, l_hi);
    for (int l = l_lo; l <= l_hi; ++l) {
        auto a = [&](int p) { return (p < c.lo() || p > c.hi()) ? 0 : strand_homology(c, p, l); };
        auto b = [&](int p) { return (p < c.lo() || p > c.hi()) ? 0 : strand_homology(dc, -p, -l - n - 1); };
        t.cells[l - l_lo] = column(n, c.lo(), c.hi(), a, b);
    }
    return t;
}

namespace {

std::vector<std::vector<Form>> position0_sections(const FreeComplex& c, int l) {
    const int nv = c.nvars();
    const auto& t0 = c.term(0);
    auto off = piece_offsets(nv, t0, l);
    const int dim = off.back();
    std::vector<std::vector<Fp>> ker;
    if (c.hi() > 0) {
        ker = kernel_basis(graded_piece(c.d(0), l));
    } else {
        for (int i = 0; i < dim; ++i) {
            std::vector<Fp> e(dim);
            e[i] = Fp(1);
            ker.push_back(e);
        }
    }
    RowSpace space(dim);
    if (c.lo() < 0) {
        Mat im = transpose(graded_piece(c.d(-1), l));
        for (int r = 0; r < im.rows; ++r)
            space.add(std::vector<std::uint32_t>(im.a.begin() + static_cast<long>(r) * im.cols,
                                                 im.a.begin() + static_cast<long>(r + 1) * im.cols));
    }
    std::vector<std::vector<Form>> out;
    for (const auto& v : ker) {
        std::vector<std::uint32_t> raw(dim);
        for (int i = 0; i < dim; ++i) raw[i] = v[i].value();
        if (!space.add(raw)) continue;
        std::vector<Form> sec;
        for (size_t s = 0; s < t0.size(); ++s) {
            const int deg = l + t0[s];
            if (deg < 0) {
                sec.emplace_back(nv, 0);
                continue;
            }
            std::vector<Fp> cc(v.begin() + off[s], v.begin() + off[s + 1]);
            sec.push_back(Form::from_coords(nv, deg, cc));
        }
        out.push_back(sec);
    }
    return out;
}

}  // namespace

SectionModel h0_basis(const NodePtr& node, int l) {
    const int n = node->n();
    if (node->rown(-n, l) != 0 || node->rown(-n - 1, l) != 0)
        throw std::runtime_error("H^0 receives contributions from the top cohomology row; no section model");
    SectionModel sm;
    sm.l = l;
    sm.ambient = node->model().term(0);
    sm.sections = position0_sections(node->model(), l);
    CohTable t = coh_table(node, l, l);
    sm.hn_dim = t.at(n, l).exact ? t.at(n, l).h : -1;
    const int dl = -l - n - 1;
    if (node->row0(n, l) == 0 && node->row0(n + 1, l) == 0) sm.hn_dual = position0_sections(node->dual_model(), dl);
    if (static_cast<int>(sm.hn_dual.size()) != sm.hn_dim) sm.hn_dual.clear();
    return sm;
}

GradedMatrix section_matrix(const NodePtr& node) {
    SectionModel sm = h0_basis(node, 0);
    GradedMatrix m(node->nvars(), std::vector<int>(sm.dim(), 0), sm.ambient);
    for (int j = 0; j < sm.dim(); ++j)
        for (size_t i = 0; i < sm.ambient.size(); ++i)
            if (!sm.sections[j][i].is_zero()) m.set(static_cast<int>(i), j, sm.sections[j][i]);
    return m;
}

}  // namespace ggb
