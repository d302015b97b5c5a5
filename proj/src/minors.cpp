#include "ggb/minors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace ggb {

namespace {

// Calls emit(form) for every r×r minor with rows fixed to `rowset`; returns
// the number of table entries built.
long long minors_for_rows(const GradedMatrix& m, const std::vector<int>& rowset,
                          const std::function<void(const Form&)>& emit) {
    const int r = static_cast<int>(rowset.size());
    const int nc = m.cols();
    std::unordered_map<std::uint32_t, Form> prev, cur;
    prev[0] = Form::constant(m.nvars(), Fp(1));
    long long work = 0;
    for (int k = 1; k <= r; ++k) {
        cur.clear();
        const int row = rowset[k - 1];
        for (const auto& [mask, det] : prev) {
            if (det.is_zero()) continue;
            for (int c = 0; c < nc; ++c) {
                if (mask >> c & 1) continue;
                const Form& e = m.at(row, c);
                if (e.is_zero()) continue;
                std::uint32_t nm = mask | (1u << c);
                // sign: position of c among the columns of nm, counted from the end
                int above = __builtin_popcount(mask >> c);
                Form term = det * e;
                if (above % 2) term = -term;
                auto it = cur.find(nm);
                if (it == cur.end())
                    cur.emplace(nm, term);
                else
                    it->second += term;
            }
        }
        work += static_cast<long long>(cur.size());
        std::swap(prev, cur);
    }
    std::vector<std::pair<std::uint32_t, Form>> out(prev.begin(), prev.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [mask, det] : out)
        if (!det.is_zero()) emit(det);
    return work;
}

bool next_subset(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void add_multiples(RowSpace& space, const Form& f, int nvars, int d) {
    const int e = d - f.degree();
    if (e < 0) return;
    const auto& target = mono_index(nvars, d);
    for (MonoKey mk : mono_index(nvars, e).keys) {
        if (space.rank() == space.dim()) return;
        std::vector<std::uint32_t> v(target.size(), 0);
        for (const auto& [k, c] : f.terms()) v[target.index(k + mk)] = c.value();
        space.add(v);
    }
}

}  // namespace

// Laplace expansion along successive rows: minor(S) with rows r_1..r_k is
// Σ_{c∈S} (-1)^{#(S∖c above c)} m(r_k, c) · minor(S∖c) with rows r_1..r_{k-1}.
// (The sign is the cofactor sign of moving column c to the last slot.)

std::vector<Form> all_minors(const GradedMatrix& m, int r) {
    std::vector<Form> out;
    if (r <= 0) return {Form::constant(m.nvars(), Fp(1))};
    if (r > m.rows() || r > m.cols()) return out;
    if (m.cols() > 31) throw std::invalid_argument("all_minors: too many columns");
    std::vector<int> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = i;
    do {
        minors_for_rows(m, rows, [&](const Form& f) { out.push_back(f); });
    } while (next_subset(rows, m.rows()));
    return out;
}

MinorTest minor_ideal_test(const GradedMatrix& m, int r, int max_degree, bool smallest, long long budget) {
    MinorTest res;
    const int nv = m.nvars();
    if (r <= 0) {
        res.ok = true;
        res.degree = 0;
        return res;
    }
    if (r > m.rows() || r > m.cols()) return res;
    if (m.cols() > 31) {
        res.exhausted = true;
        return res;
    }
    std::vector<RowSpace> spaces;
    for (int d = 0; d <= max_degree; ++d) spaces.emplace_back(mono_index(nv, d).size());
    auto full_degree = [&]() {
        for (int d = 0; d <= max_degree; ++d)
            if (spaces[d].rank() == spaces[d].dim()) return d;
        return -1;
    };
    std::vector<int> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = i;
    do {
        res.work += minors_for_rows(m, rows, [&](const Form& f) {
            for (int d = f.degree(); d <= max_degree; ++d)
                if (spaces[d].rank() < spaces[d].dim()) add_multiples(spaces[d], f, nv, d);
        });
        int fd = full_degree();
        if (fd >= 0 && (!smallest || fd == 0)) {
            res.ok = true;
            res.degree = fd;
            return res;
        }
        if (res.work > budget) {
            res.exhausted = true;
            return res;
        }
    } while (next_subset(rows, m.rows()));
    int fd = full_degree();
    if (fd >= 0) {
        res.ok = true;
        res.degree = fd;
    }
    return res;
}

std::optional<int> epi_certificate(const GradedMatrix& m, int max_degree) {
    if (m.rows() == 0) return 0;
    MinorTest t = minor_ideal_test(m, m.rows(), max_degree, true, 1LL << 40);
    if (t.ok) return t.degree;
    return std::nullopt;
}

bool ideals_agree_to_degree(const std::vector<Form>& a, const std::vector<Form>& b, int nvars, int bound) {
    for (int d = 0; d <= bound; ++d) {
        const int dim = mono_index(nvars, d).size();
        RowSpace sa(dim), sb(dim), sab(dim);
        for (const auto& f : a)
            if (!f.is_zero()) {
                add_multiples(sa, f, nvars, d);
                add_multiples(sab, f, nvars, d);
            }
        for (const auto& f : b)
            if (!f.is_zero()) {
                add_multiples(sb, f, nvars, d);
                add_multiples(sab, f, nvars, d);
            }
        if (sa.rank() != sab.rank() || sb.rank() != sab.rank()) return false;
    }
    return true;
}

}  // namespace ggb
