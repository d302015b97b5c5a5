#pragma once

#include <stdexcept>
#include <vector>

namespace ggb {

/// Nonincreasing spectrum (k_1 >= .. >= k_c) of a stable rank-2 reflexive
/// sheaf on P^3 with c_1 = 0, c_2 = c.
using Spectrum = std::vector<int>;

struct SpectrumRules {
    bool connectivity = true;   // rules (iv)-(vi)
    bool spectrum2 = false;     // strict decrease after a strict double drop below 0
    bool symmetric = false;     // locally free: (-k_i) = (k_i)
    bool c3_nonneg = false;     // -2 Σ k_i >= 0
    bool exclude_ge_1 = false;  // no k_i >= 1, i.e. h^1(F(-2)) = 0
};

bool spectrum_admissible(const Spectrum& s, const SpectrumRules& rules);

/// All admissible spectra of length c with entries in [kmin, kmax], in
/// lexicographically decreasing order.
std::vector<Spectrum> enumerate_spectra(int c, int kmin, int kmax, const SpectrumRules& rules);

/// h^1(F(l)) for l <= -1; throws std::domain_error otherwise.
long long h1_from_spectrum(const Spectrum& s, int l);
/// h^2(F(l)) for l >= -3; throws std::domain_error otherwise.
long long h2_from_spectrum(const Spectrum& s, int l);
long long c3_from_spectrum(const Spectrum& s);
/// Arithmetic genus of the curve of the associated section: c_3/2 + 1.
long long genus_from_c3(long long c3);

}  // namespace ggb
