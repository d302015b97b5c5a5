#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ggb/field.hpp"

namespace ggb {

constexpr int kMaxVars = 6;

using Exponents = std::vector<int>;
// Exponent vectors packed 8 bits per variable; variable i sits at bits 8i..8i+7.
using MonoKey = std::uint64_t;

MonoKey pack(const Exponents& e);
Exponents unpack(MonoKey k, int nvars);
inline int key_exp(MonoKey k, int i) { return static_cast<int>((k >> (8 * i)) & 0xff); }

long long binom(long long n, long long k);

/// All exponent vectors of total degree d in nvars variables, graded reverse
/// lexicographic order, largest first (x0^d leads).
std::vector<Exponents> monomial_basis(int nvars, int d);

struct MonoIndex {
    int nvars = 0;
    int degree = 0;
    std::vector<MonoKey> keys;
    std::unordered_map<MonoKey, int> pos;
    int size() const { return static_cast<int>(keys.size()); }
    int index(MonoKey k) const;  // -1 if absent
};

/// Cached basis + reverse lookup; empty for d < 0. Thread safe.
const MonoIndex& mono_index(int nvars, int d);

class Form {
public:
    using Term = std::pair<MonoKey, Fp>;

    Form() = default;
    Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

    static Form constant(int nvars, Fp c);
    static Form variable(int nvars, int i);
    static Form monomial(int nvars, const Exponents& e, Fp c = Fp(1));
    static Form from_coords(int nvars, int degree, const std::vector<Fp>& c);

    // Variables are x0.. (or X0..) unless `names` lists the tokens to use.
    // `degree_hint` is the degree given to the zero form. Throws
    // std::invalid_argument on syntax errors or inhomogeneous input.
    static Form parse(const std::string& s, int nvars, int degree_hint = 0,
                      const std::vector<std::string>& names = {});

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    Fp coeff(const Exponents& e) const;
    Fp coeff_key(MonoKey k) const;
    std::vector<Fp> coords() const;
    Form with_degree(int d) const;  // only meaningful for the zero form

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form operator*(const Form& o) const;
    Form operator*(Fp c) const;
    Form& operator+=(const Form& o) { return *this = *this + o; }
    Form& operator-=(const Form& o) { return *this = *this - o; }
    bool operator==(const Form& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Fp eval(std::span<const Fp> x) const;
    // Substitute x_i <- images[i]; all images must share one degree and ring.
    Form substitute(const std::vector<Form>& images) const;
    Form derivative(int var) const;
    Form pow(int e) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    static Form from_terms(int nvars, int degree, std::vector<Term> t);
    int nvars_ = 0;
    int degree_ = 0;
    std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

}  // namespace ggb
