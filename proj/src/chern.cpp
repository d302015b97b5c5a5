#include "ggb/chern.hpp"

#include <boost/rational.hpp>
#include <sstream>

namespace ggb {

std::string ChernVector::str() const {
    std::ostringstream os;
    os << "(rank " << rank << ";";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? ", " : " ") << c[i];
    os << ")";
    return os.str();
}

TruncPoly truncated_mul(const TruncPoly& a, const TruncPoly& b, int n) {
    TruncPoly r(n + 1, 0);
    for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
    return r;
}

TruncPoly truncated_inv(const TruncPoly& a, int n) {
    if (a.empty() || (a[0] != 1 && a[0] != -1)) throw ChernError("total Chern class has non-unit constant term");
    TruncPoly r(n + 1, 0);
    r[0] = a[0];
    for (int k = 1; k <= n; ++k) {
        long long s = 0;
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) s += a[i] * r[k - i];
        r[k] = -s * a[0];
    }
    return r;
}

namespace {

TruncPoly total(const ChernVector& c) {
    TruncPoly t(c.n + 1, 0);
    t[0] = 1;
    for (int i = 1; i <= c.n; ++i) t[i] = c.ci(i);
    return t;
}

ChernVector from_total(int n, long long rank, const TruncPoly& t) {
    ChernVector c;
    c.n = n;
    c.rank = rank;
    c.c.assign(t.begin() + 1, t.begin() + n + 1);
    return c;
}

TruncPoly line_total(int n, const std::vector<int>& twists) {
    TruncPoly t(n + 1, 0);
    t[0] = 1;
    for (int a : twists) t = truncated_mul(t, {1, a}, n);
    return t;
}

// generalized binomial C(x, k) for integer x, k >= 0
long long gbinom(long long x, int k) {
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (x - i);
        den *= (i + 1);
    }
    return num / den;
}

}  // namespace

ChernVector chern_of_line_sum(int n, const std::vector<int>& twists) {
    return from_total(n, static_cast<long long>(twists.size()), line_total(n, twists));
}

ChernVector chern_of_complex(const FreeComplex& c) {
    const int n = c.nvars() - 1;
    TruncPoly num(n + 1, 0), den(n + 1, 0);
    num[0] = den[0] = 1;
    long long rank = 0;
    for (int p = c.lo(); p <= c.hi(); ++p) {
        const bool even = (p % 2 == 0);
        TruncPoly t = line_total(n, c.term(p));
        if (even) {
            num = truncated_mul(num, t, n);
            rank += c.rank_at(p);
        } else {
            den = truncated_mul(den, t, n);
            rank -= c.rank_at(p);
        }
    }
    return from_total(n, rank, truncated_mul(num, truncated_inv(den, n), n));
}

ChernVector chern_of_node(const NodePtr& node) { return chern_of_complex(node->model()); }

ChernVector chern_twist(const ChernVector& c, int l) {
    ChernVector r = c;
    for (int k = 1; k <= c.n; ++k) {
        long long s = 0;
        for (int i = 0; i <= k; ++i) {
            long long pw = 1;
            for (int e = 0; e < k - i; ++e) pw *= l;
            s += gbinom(c.rank - i, k - i) * c.ci(i) * pw;
        }
        r.c[k - 1] = s;
    }
    return r;
}

ChernVector chern_dual(const ChernVector& c) {
    ChernVector r = c;
    for (int i = 1; i <= c.n; ++i) r.c[i - 1] = (i % 2 ? -1 : 1) * c.ci(i);
    return r;
}

ChernVector chern_sum(const ChernVector& a, const ChernVector& b) {
    if (a.n != b.n) throw ChernError("Chern vectors on different spaces");
    return from_total(a.n, a.rank + b.rank, truncated_mul(total(a), total(b), a.n));
}

ChernVector p_chern(const ChernVector& c, std::optional<long long> h0) {
    ChernVector r = from_total(c.n, c.rank, truncated_inv(total(chern_dual(c)), c.n));
    if (h0) r.rank = *h0 - c.rank;
    return r;
}

long long hrr_chi(const ChernVector& cv, long long l) {
    using Q = boost::rational<long long>;
    const int n = cv.n;
    if (n < 1 || n > 6) throw RRDomainError("hrr_chi supports 1 <= n <= 6");
    // power sums of the Chern roots by Newton's identities
    std::vector<Q> p(n + 1);
    p[0] = Q(cv.rank);
    for (int k = 1; k <= n; ++k) {
        Q s = 0;
        for (int i = 1; i < k; ++i) s += Q((i % 2 ? 1 : -1) * cv.ci(i)) * p[k - i];
        s += Q((k % 2 ? 1 : -1) * k * cv.ci(k));
        p[k] = s;
    }
    // ∫ H^k td(P^n) = k! [a^k] C(n+a, n)
    std::vector<Q> poly(n + 1, Q(0));  // C(n+a, n) in powers of a
    poly[0] = 1;
    for (int j = 1; j <= n; ++j) {
        std::vector<Q> next(n + 1, Q(0));
        for (int k = 0; k <= n; ++k) {
            next[k] += poly[k];
            if (k + 1 <= n) next[k + 1] += poly[k] * Q(1, j);
        }
        poly = next;  // times (a + j)/j
    }
    std::vector<Q> integ(n + 1);
    Q fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k) fact *= k;
        integ[k] = poly[k] * fact;
    }
    Q chi = 0, fk = 1;
    for (int k = 0; k <= n; ++k) {
        if (k) fk *= k;
        Q fj = 1, lj = 1;
        for (int j = 0; k + j <= n; ++j) {
            if (j) {
                fj *= j;
                lj *= Q(l);
            }
            chi += p[k] / fk * lj / fj * integ[k + j];
        }
    }
    if (chi.denominator() != 1) throw RRDomainError("Chern classes fail the integrality conditions");
    return chi.numerator();
}

long long rr_chi(const ChernVector& c, long long l) {
    const long long r = c.rank, c1 = c.ci(1), c2 = c.ci(2), c3 = c.ci(3), c4 = c.ci(4);
    switch (c.n) {
        case 2:
            return (r - 1) * chi_line(2, l) + chi_line(2, c1 + l) - c2;
        case 3: {
            const long long t = c3 - c1 * c2;
            if (t % 2 != 0) throw RRDomainError("c3 and c1*c2 have different parity");
            return (r - 1) * chi_line(3, l) + chi_line(3, c1 + l) - (l + 2) * c2 + t / 2;
        }
        case 4: {
            const long long t = c3 - c1 * c2;
            const long long q = (2 * c1 + 3) * t + c2 * c2 + c2 - 2 * c4;
            if (q % 12 != 0) throw RRDomainError("Schwarzenberger congruence fails");
            const long long x = -6 * (l + 2) * (l + 3) * c2 + 6 * (l + 2) * t + q;
            if (x % 12 != 0) throw RRDomainError("Chern classes fail the integrality conditions");
            return (r - 1) * chi_line(4, l) + chi_line(4, c1 + l) + x / 12;
        }
        default:
            return hrr_chi(c, l);
    }
}

SchwarzenbergerResult schwarzenberger(const ChernVector& c) {
    const long long c1 = c.ci(1), c2 = c.ci(2), c3 = c.ci(3), c4 = c.ci(4);
    const long long q = (2 * c1 + 3) * (c3 - c1 * c2) + c2 * c2 + c2 - 2 * c4;
    const int res = static_cast<int>(((q % 12) + 12) % 12);
    return {res == 0, res};
}

long long double_point(const SurfaceInvariants& s) {
    return (s.d - 3) * (s.d - 4) / 2 + 1 - s.pi - 6 * s.q + 6 * s.pg;
}

SurfaceBundleData surface_bundle_data(const SurfaceInvariants& s, std::optional<long long> h1_oy1) {
    SurfaceBundleData b;
    b.r = 1 + s.pi - s.q + s.pg;
    b.c2 = s.d;
    b.c3 = 2 * s.pi - 2;
    b.c4 = double_point(s);
    if (h1_oy1) b.sectional_relation = (s.pi - s.d + 3 == *h1_oy1 - s.q + s.pg);
    return b;
}

std::vector<std::string> gg_constraints(const ChernVector& c) {
    std::vector<std::string> out;
    for (int i = 1; i <= c.n; ++i)
        if (c.ci(i) < 0) out.push_back("c" + std::to_string(i) + " >= 0");
    const long long c1 = c.ci(1), c2 = c.ci(2), c3 = c.ci(3);
    if (c.n >= 2 && c2 > c1 * c1) out.push_back("c2 <= c1^2");
    if (c.n == 3 && c.rank == 2 && c3 == 0 && 2 * c2 > c1 * c1) out.push_back("c2 <= c1^2/2 (rank 2 on P^3)");
    if (c.n == 4 && c1 == 4 && c2 >= 5 && c2 <= 8 && c3 < 2 * c2 - 8) out.push_back("c3 >= 2c2 - 8 (P^4, c1 = 4)");
    if (c.n >= 2 && c1 >= 2 && c2 > 0 && c2 < c1 - 1) out.push_back("c2 >= c1 - 1 when c2 > 0");
    return out;
}

}  // namespace ggb
