#include "ggb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ggb {

MonoKey pack(const Exponents& e) {
    if (static_cast<int>(e.size()) > kMaxVars) throw std::invalid_argument("too many variables");
    MonoKey k = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range");
        k |= static_cast<MonoKey>(e[i]) << (8 * i);
    }
    return k;
}

Exponents unpack(MonoKey k, int nvars) {
    Exponents e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = key_exp(k, i);
    return e;
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void gen(int nvars, int i, int left, Exponents& cur, std::vector<Exponents>& out) {
    if (i == nvars - 1) {
        cur[i] = left;
        out.push_back(cur);
        return;
    }
    for (int a = left; a >= 0; --a) {
        cur[i] = a;
        gen(nvars, i + 1, left - a, cur, out);
    }
}

// true if a precedes b in descending grevlex
bool grevlex_before(const Exponents& a, const Exponents& b) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

std::vector<Exponents> monomial_basis(int nvars, int d) {
    std::vector<Exponents> out;
    if (d < 0 || nvars <= 0) return out;
    Exponents cur(nvars, 0);
    gen(nvars, 0, d, cur, out);
    std::sort(out.begin(), out.end(), grevlex_before);
    return out;
}

int MonoIndex::index(MonoKey k) const {
    auto it = pos.find(k);
    return it == pos.end() ? -1 : it->second;
}

const MonoIndex& mono_index(int nvars, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<MonoIndex>> cache;
    if (d < 0) d = -1;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{nvars, d}];
    if (!slot) {
        slot = std::make_unique<MonoIndex>();
        slot->nvars = nvars;
        slot->degree = d;
        for (const auto& e : monomial_basis(nvars, d)) {
            slot->pos[pack(e)] = static_cast<int>(slot->keys.size());
            slot->keys.push_back(pack(e));
        }
    }
    return *slot;
}

// ---------------------------------------------------------------- Form

Form Form::from_terms(int nvars, int degree, std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(t.size());
    for (const auto& [k, c] : t) {
        if (!merged.empty() && merged.back().first == k)
            merged.back().second += c;
        else
            merged.emplace_back(k, c);
    }
    Form f(nvars, degree);
    for (const auto& term : merged)
        if (!term.second.is_zero()) f.terms_.push_back(term);
    return f;
}

Form Form::constant(int nvars, Fp c) {
    Form f(nvars, 0);
    if (!c.is_zero()) f.terms_.emplace_back(0, c);
    return f;
}

Form Form::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Form f(nvars, 1);
    f.terms_.emplace_back(MonoKey(1) << (8 * i), Fp(1));
    return f;
}

Form Form::monomial(int nvars, const Exponents& e, Fp c) {
    int d = 0;
    for (int x : e) d += x;
    Form f(nvars, d);
    if (!c.is_zero()) f.terms_.emplace_back(pack(e), c);
    return f;
}

Form Form::from_coords(int nvars, int degree, const std::vector<Fp>& c) {
    const auto& idx = mono_index(nvars, degree);
    if (static_cast<int>(c.size()) != idx.size()) throw std::invalid_argument("coordinate length mismatch");
    std::vector<Term> t;
    for (int i = 0; i < idx.size(); ++i)
        if (!c[i].is_zero()) t.emplace_back(idx.keys[i], c[i]);
    return from_terms(nvars, degree, std::move(t));
}

Fp Form::coeff_key(MonoKey k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& a, MonoKey b) { return a.first < b; });
    return (it != terms_.end() && it->first == k) ? it->second : Fp(0);
}

Fp Form::coeff(const Exponents& e) const { return coeff_key(pack(e)); }

std::vector<Fp> Form::coords() const {
    const auto& idx = mono_index(nvars_, degree_);
    std::vector<Fp> c(idx.size());
    for (const auto& [k, v] : terms_) c[idx.index(k)] = v;
    return c;
}

Form Form::with_degree(int d) const {
    if (!is_zero() && d != degree_) throw std::invalid_argument("cannot change degree of a nonzero form");
    Form f = *this;
    f.degree_ = d;
    return f;
}

Form Form::operator+(const Form& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
        throw std::invalid_argument("adding forms of different degree or ring");
    std::vector<Term> t;
    t.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            t.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            t.push_back(o.terms_[j++]);
        } else {
            Fp c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) t.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    Form f(nvars_, degree_);
    f.terms_ = std::move(t);
    return f;
}

Form Form::operator-() const {
    Form f = *this;
    for (auto& t : f.terms_) t.second = -t.second;
    return f;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator*(Fp c) const {
    if (c.is_zero()) return Form(nvars_, degree_);
    Form f = *this;
    for (auto& t : f.terms_) t.second *= c;
    return f;
}

Form Form::operator*(const Form& o) const {
    const int nv = std::max(nvars_, o.nvars_);
    if (is_zero() || o.is_zero()) return Form(nv, degree_ + o.degree_);
    if (nvars_ != o.nvars_) throw std::invalid_argument("multiplying forms from different rings");
    if (terms_.size() == 1 && terms_[0].first == 0) return o * terms_[0].second;
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) t.emplace_back(ka + kb, ca * cb);
    return from_terms(nvars_, degree_ + o.degree_, std::move(t));
}

Form Form::pow(int e) const {
    Form r = constant(nvars_, Fp(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Fp Form::eval(std::span<const Fp> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point has wrong length");
    Fp s(0);
    for (const auto& [k, c] : terms_) {
        Fp m = c;
        for (int i = 0; i < nvars_; ++i) {
            int e = key_exp(k, i);
            if (e) m *= x[i].pow(e);
        }
        s += m;
    }
    return s;
}

Form Form::substitute(const std::vector<Form>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    const int nv = images.empty() ? 0 : images[0].nvars();
    const int idg = images.empty() ? 0 : images[0].degree();
    Form out(nv, degree_ * idg);
    // cache powers
    std::vector<std::vector<Form>> pw(nvars_);
    for (const auto& [k, c] : terms_) {
        Form m = constant(nv, c);
        for (int i = 0; i < nvars_; ++i) {
            int e = key_exp(k, i);
            if (!e) continue;
            auto& p = pw[i];
            if (p.empty()) p.push_back(constant(nv, Fp(1)));
            while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[i]);
            m = m * p[e];
        }
        out += m.with_degree(m.is_zero() ? out.degree() : m.degree());
    }
    return out.with_degree(out.is_zero() ? degree_ * idg : out.degree());
}

Form Form::derivative(int var) const {
    std::vector<Term> t;
    for (const auto& [k, c] : terms_) {
        int e = key_exp(k, var);
        if (e == 0) continue;
        t.emplace_back(k - (MonoKey(1) << (8 * var)), c * Fp(e));
    }
    return from_terms(nvars_, std::max(0, degree_ - 1), std::move(t));
}

std::string Form::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    // descending grevlex for display
    std::vector<Term> t = terms_;
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return grevlex_before(unpack(a.first, nvars_), unpack(b.first, nvars_));
    });
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t) {
        long long v = c.signed_value();
        if (v < 0) {
            s += first ? "-" : " - ";
            v = -v;
        } else if (!first) {
            s += " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            int e = key_exp(k, i);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += names.empty() ? "x" + std::to_string(i) : names[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            s += std::to_string(v);
        else if (v == 1)
            s += mono;
        else
            s += std::to_string(v) + "*" + mono;
    }
    return s;
}

// ---------------------------------------------------------------- parser

namespace {

using TermVec = std::vector<Form::Term>;

TermVec normalize(TermVec t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    TermVec out;
    for (const auto& x : t) {
        if (!out.empty() && out.back().first == x.first)
            out.back().second += x.second;
        else
            out.push_back(x);
    }
    std::erase_if(out, [](const auto& x) { return x.second.is_zero(); });
    return out;
}

TermVec tmul(const TermVec& a, const TermVec& b) {
    TermVec t;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) t.emplace_back(ka + kb, ca * cb);
    return normalize(std::move(t));
}

class Parser {
public:
    Parser(const std::string& s, int nvars, const std::vector<std::string>& names)
        : s_(s), nvars_(nvars), names_(names) {}

    TermVec parse() {
        TermVec r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("cannot parse form '" + s_ + "': " + why + " at offset " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    long long integer() {
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
        long long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_] - '0');
            if (v > (1LL << 50)) fail("integer too large");
            ++i_;
        }
        return v;
    }
    TermVec expr() {
        TermVec acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        for (;;) {
            TermVec t = term();
            if (neg)
                for (auto& x : t) x.second = -x.second;
            acc.insert(acc.end(), t.begin(), t.end());
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        return normalize(std::move(acc));
    }
    TermVec term() {
        TermVec r = factor();
        while (eat('*')) r = tmul(r, factor());
        return r;
    }
    TermVec factor() {
        TermVec base;
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            base = expr();
            if (!eat(')')) fail("missing ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = {{0, Fp(integer())}};
        } else {
            int v = variable();
            base = {{MonoKey(1) << (8 * v), Fp(1)}};
        }
        if (eat('^')) {
            long long e = integer();
            TermVec r = {{0, Fp(1)}};
            for (long long k = 0; k < e; ++k) r = tmul(r, base);
            return r;
        }
        return base;
    }
    int variable() {
        if (!names_.empty()) {
            for (int v = 0; v < static_cast<int>(names_.size()); ++v) {
                const auto& n = names_[v];
                if (s_.compare(i_, n.size(), n) == 0) {
                    i_ += n.size();
                    return v;
                }
            }
            fail("unknown variable");
        }
        char c = s_[i_];
        if (c != 'x' && c != 'X') fail("expected variable x<i>");
        ++i_;
        long long v = integer();
        if (v >= nvars_) fail("variable index exceeds ring");
        return static_cast<int>(v);
    }

    const std::string& s_;
    size_t i_ = 0;
    int nvars_;
    const std::vector<std::string>& names_;
};

}  // namespace

Form Form::parse(const std::string& s, int nvars, int degree_hint, const std::vector<std::string>& names) {
    TermVec t = Parser(s, nvars, names).parse();
    if (t.empty()) return Form(nvars, degree_hint);
    int d = -1;
    for (const auto& [k, c] : t) {
        int dk = 0;
        for (int i = 0; i < nvars; ++i) dk += key_exp(k, i);
        if (d >= 0 && dk != d) throw std::invalid_argument("form '" + s + "' is not homogeneous");
        d = dk;
    }
    return from_terms(nvars, d, std::move(t));
}

}  // namespace ggb
