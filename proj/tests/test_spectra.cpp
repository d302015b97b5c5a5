#include <doctest.h>

#include <algorithm>

#include "ggb/spectra.hpp"

using namespace ggb;

TEST_CASE("spectra with c2 = 2") {
    SpectrumRules r;
    r.c3_nonneg = true;
    auto s = enumerate_spectra(2, -2, 1, r);
    CHECK(s == std::vector<Spectrum>{{0, 0}, {0, -1}, {-1, -1}});
    CHECK(enumerate_spectra(1, -3, 3, SpectrumRules{}) == std::vector<Spectrum>{{0}});
}

TEST_CASE("finer rule removes (0,-1,-2,-2)") {
    SpectrumRules r;
    auto base = enumerate_spectra(4, -3, 1, r);
    CHECK(std::find(base.begin(), base.end(), Spectrum{0, -1, -2, -2}) != base.end());
    r.spectrum2 = true;
    auto fine = enumerate_spectra(4, -3, 1, r);
    CHECK(std::find(fine.begin(), fine.end(), Spectrum{0, -1, -2, -2}) == fine.end());
    CHECK(std::find(fine.begin(), fine.end(), Spectrum{0, -1, -2, -3}) != fine.end());
}

TEST_CASE("enumerator output is closed under the rules") {
    for (int c = 1; c <= 6; ++c) {
        SpectrumRules r;
        for (const auto& s : enumerate_spectra(c, -4, 3, r)) {
            CHECK(spectrum_admissible(s, r));
            // an isolated entry far from the rest breaks connectivity
            Spectrum t = s;
            t.front() = s.front() + 2;
            CHECK(!spectrum_admissible(t, r));
        }
        r.symmetric = true;
        for (const auto& s : enumerate_spectra(c, -4, 4, r)) {
            Spectrum neg = s;
            for (int& k : neg) k = -k;
            std::sort(neg.rbegin(), neg.rend());
            CHECK(neg == s);
        }
    }
}

TEST_CASE("h1 and h2 from spectra") {
    CHECK(h1_from_spectrum({0, 0, -1}, -1) == 2);
    CHECK(h1_from_spectrum({0, -1, -1, -1}, -1) == 1);
    CHECK(h1_from_spectrum({0, 0, 0, -1}, -1) == 3);
    CHECK(h1_from_spectrum({1, 0, -1, -1}, -2) == 1);
    CHECK(h1_from_spectrum({1, 1, 0}, -5) == 0);
    CHECK(h2_from_spectrum({0, -1, -2}, -1) == 1);
    CHECK(h2_from_spectrum({0, 0, -1, -2}, -1) == 1);
    CHECK(h2_from_spectrum({0, -1, -2, -3}, 0) == 1);
    CHECK(h2_from_spectrum({-1, -1, -2, -3}, 0) == 1);
    CHECK(h2_from_spectrum({0, 0, 0, 0}, -2) == 0);
    CHECK_THROWS_AS(h1_from_spectrum({0}, 0), std::domain_error);
    CHECK_THROWS_AS(h2_from_spectrum({0}, -4), std::domain_error);
    CHECK(c3_from_spectrum({-1, -1, -2, -2}) == 12);
    CHECK(c3_from_spectrum({0, 0, -1}) == 2);
    CHECK(genus_from_c3(2) == 2);
    CHECK(genus_from_c3(0) == 1);
    // h1(F(-2)) = 0 exactly when no k_i >= 1
    for (const auto& s : enumerate_spectra(5, -4, 3, SpectrumRules{}))
        CHECK((h1_from_spectrum(s, -2) == 0) == (s.front() < 1));
}
