#include "ggb/spectra.hpp"

#include <algorithm>
#include <numeric>

namespace ggb {

namespace {

bool occurs(const Spectrum& s, int k) { return std::find(s.begin(), s.end(), k) != s.end(); }

}  // namespace

bool spectrum_admissible(const Spectrum& s, const SpectrumRules& rules) {
    if (s.empty() || !std::is_sorted(s.rbegin(), s.rend())) return false;
    const int c = static_cast<int>(s.size());
    if (rules.connectivity) {
        for (int k : s) {
            for (int j = 0; j < k; ++j)
                if (!occurs(s, j)) return false;
            for (int j = -1; j > k; --j)
                if (!occurs(s, j)) return false;
        }
        if (!occurs(s, 0) && std::count(s.begin(), s.end(), -1) < 2) return false;
    }
    if (rules.spectrum2) {
        // 1-based i in 2..c-1 is s[i-2], s[i-1], s[i]
        for (int i = 1; i + 1 < c; ++i) {
            if (0 >= s[i - 1] && s[i - 1] > s[i] && s[i] > s[i + 1]) {
                for (int j = i + 1; j + 1 < c; ++j)
                    if (!(s[j] > s[j + 1])) return false;
            }
        }
    }
    if (rules.symmetric) {
        Spectrum neg(s.rbegin(), s.rend());
        for (int& k : neg) k = -k;
        if (neg != s) return false;
    }
    if (rules.c3_nonneg && c3_from_spectrum(s) < 0) return false;
    if (rules.exclude_ge_1 && s.front() >= 1) return false;
    return true;
}

std::vector<Spectrum> enumerate_spectra(int c, int kmin, int kmax, const SpectrumRules& rules) {
    std::vector<Spectrum> out;
    if (c < 1 || kmin > kmax) return out;
    Spectrum s(c, kmax);
    // nonincreasing sequences, lexicographically decreasing
    for (;;) {
        if (spectrum_admissible(s, rules)) out.push_back(s);
        int i = c - 1;
        while (i >= 0 && s[i] == kmin) --i;
        if (i < 0) break;
        --s[i];
        for (int j = i + 1; j < c; ++j) s[j] = s[i];
    }
    return out;
}

long long h1_from_spectrum(const Spectrum& s, int l) {
    if (l > -1) throw std::domain_error("h1_from_spectrum needs l <= -1");
    long long h = 0;
    for (int k : s) h += std::max(0, k + l + 2);
    return h;
}

long long h2_from_spectrum(const Spectrum& s, int l) {
    if (l < -3) throw std::domain_error("h2_from_spectrum needs l >= -3");
    long long h = 0;
    for (int k : s) h += std::max(0, -(k + l + 2));
    return h;
}

long long c3_from_spectrum(const Spectrum& s) { return -2LL * std::accumulate(s.begin(), s.end(), 0LL); }

long long genus_from_c3(long long c3) {
    if (c3 % 2 != 0) throw std::domain_error("odd c3");
    return c3 / 2 + 1;
}

}  // namespace ggb
