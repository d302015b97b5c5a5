#include <doctest.h>

#include <random>

#include "ggb/minors.hpp"
#include "ggb/pencil.hpp"
#include "oracles.hpp"

using namespace ggb;

namespace {
Form X(int i) { return Form::variable(4, i); }
std::vector<Form> ideal(std::initializer_list<const char*> g) {
    std::vector<Form> out;
    for (auto s : g) out.push_back(Form::parse(s, 4));
    return out;
}
// oracle: multiplicities of the rational roots of a binary quartic by
// repeated differentiation
std::vector<int> root_multiplicities(const Form& f) {
    std::vector<int> out;
    for (std::uint32_t t = 0; t < prime(); ++t) {
        Point x = {Fp::raw(t), Fp(1)};
        Form g = f;
        int k = 0;
        while (!g.is_zero() && g.eval(x).is_zero()) {
            g = g.derivative(0);
            ++k;
        }
        if (k) out.push_back(k);
    }
    Point inf = {Fp(1), Fp(0)};
    Form g = f;
    int k = 0;
    while (!g.is_zero() && g.eval(inf).is_zero()) {
        g = g.derivative(1);
        ++k;
    }
    if (k) out.push_back(k);
    std::sort(out.rbegin(), out.rend());
    return out;
}
}  // namespace

TEST_CASE("univariate helpers") {
    UPoly f = {Fp(-1), Fp(0), Fp(1)};  // t^2 - 1
    UPoly g = {Fp(1), Fp(1)};         // t + 1
    CHECK(ugcd(f, g) == g);
    auto sq = squarefree_decomposition(umul(umul(f, g), g));  // (t-1)(t+1)^3
    REQUIRE(sq.size() == 3);
    CHECK(udeg(sq[0]) == 1);
    CHECK(udeg(sq[1]) == 0);
    CHECK(udeg(sq[2]) == 1);
}

TEST_CASE("stability") {
    CHECK(is_stable(canonical_2x4(PencilTag::Case6)));
    CHECK(!is_stable(make_2x4({{X(0), X(1), X(2), X(3)}, {X(0) + X(1), Form(4, 1), Form(4, 1), Form(4, 1)}})));
    CHECK(!is_stable(make_2x4({{X(0), X(1), X(2), X(3)}, {X(0), X(1), Form(4, 1), Form(4, 1)}})));
    GradedMatrix zero(4, {0, 0, 0, 0}, {1, 1});
    CHECK(!is_stable(zero));
}

TEST_CASE("determinant of the pencil") {
    Form d1 = pencil_det(to_pencil(canonical_2x4(PencilTag::Case1, Fp(2), Fp(3))));
    CHECK(root_multiplicities(d1) == std::vector<int>{1, 1, 1, 1});
    Form d5 = pencil_det(to_pencil(canonical_2x4(PencilTag::Case5)));
    CHECK(d5.terms().size() == 1);
    CHECK(d5.coeff({4, 0}) != Fp(0));
    CHECK(pencil_det(to_pencil(canonical_2x4(PencilTag::Case6))).is_zero());
}

TEST_CASE("canonical matrices classify to their cases") {
    const PencilTag tags[] = {PencilTag::Case1, PencilTag::Case2, PencilTag::Case3, PencilTag::Case4,
                              PencilTag::Case5, PencilTag::Case6, PencilTag::Case7, PencilTag::Case8};
    for (auto t : tags) {
        auto pc = classify_pencil(canonical_2x4(t));
        CHECK(pc.tag == t);
        if (!pc.det.is_zero()) {
            CHECK(pc.partition == root_multiplicities(pc.det));
            int s = 0;
            for (int k : pc.partition) s += k;
            CHECK(s == 4);
        } else {
            CHECK(pc.e + pc.m == 4);
        }
    }
    auto c6 = classify_pencil(canonical_2x4(PencilTag::Case6));
    CHECK(c6.m == 1);
    REQUIRE(c6.special_point);
    CHECK((*c6.special_point)[3] != Fp(0));
    CHECK((*c6.special_point)[0] == Fp(0));
    CHECK(classify_pencil(canonical_2x4(PencilTag::Case7)).m == 2);
    CHECK(classify_pencil(canonical_2x4(PencilTag::Case8)).m == 3);
    auto c1 = classify_pencil(make_2x4({{X(0), X(1), X(2), X(3)}, {X(0) * Fp(2), X(1) * Fp(3), X(2), Form(4, 1)}}));
    CHECK(c1.tag == PencilTag::Case1);
    REQUIRE(c1.canonical);
    CHECK(classify_pencil(*c1.canonical).tag == PencilTag::Case1);
}

TEST_CASE("Case 1 canonical form is an orbit invariant") {
    std::mt19937_64 rng(5);
    auto a = canonical_2x4(PencilTag::Case1, Fp(5), Fp(7));
    auto ref = classify_pencil(a);
    REQUIRE(ref.canonical);
    for (int t = 0; t < 10; ++t) {
        auto pc = classify_pencil(oracle::random_conjugate(a, rng));
        REQUIRE(pc.canonical);
        CHECK(*pc.canonical == *ref.canonical);
    }
}

TEST_CASE("classification is invariant under the group action") {
    std::mt19937_64 rng(17);
    const PencilTag tags[] = {PencilTag::Case1, PencilTag::Case2, PencilTag::Case3, PencilTag::Case4,
                              PencilTag::Case5, PencilTag::Case6, PencilTag::Case7, PencilTag::Case8};
    for (auto t : tags)
        for (int k = 0; k < 20; ++k) CHECK(classify_pencil(oracle::random_conjugate(canonical_2x4(t), rng)).tag == t);
}

TEST_CASE("minor ideals of the listed cases") {
    CHECK(minor_ideal_equals(canonical_2x4(PencilTag::Case6),
                             ideal({"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"}), 4));
    CHECK(minor_ideal_equals(canonical_2x4(PencilTag::Case3),
                             ideal({"x1*x3", "x0*x3", "x3^2", "x1*x2", "x0*x2", "x1^2"}), 4));
    CHECK(minor_ideal_equals(canonical_2x4(PencilTag::Case4),
                             ideal({"x0*x3", "x2*x3", "x3^2", "x0*x2", "x0*x1", "x1*x3 - x2^2"}), 4));
    CHECK(minor_ideal_equals(canonical_2x4(PencilTag::Case5),
                             ideal({"x1*x3", "x2*x3", "x3^2", "x2^2", "x0*x3 - x1*x2", "x0*x2 - x1^2"}), 4));
    CHECK(minor_ideal_equals(canonical_2x4(PencilTag::Case7),
                             ideal({"x0^2", "x0*x1", "x1^2", "x1*x2", "x0*x3", "x0*x2 - x1*x3"}), 4));
    CHECK(minor_ideal_equals(canonical_2x4(PencilTag::Case8),
                             ideal({"x0^2", "x0*x2", "x0*x3", "x0*x1", "x1*x3 - x2^2"}), 4));
    CHECK(!minor_ideal_equals(canonical_2x4(PencilTag::Case8), ideal({"x0^2", "x0*x2", "x0*x3", "x1*x3 - x2^2"}), 4));
    // Case 6 has no epimorphism certificate: the minors vanish at a point
    CHECK(!epi_certificate(canonical_2x4(PencilTag::Case6), 6).has_value());
}

TEST_CASE("evaluation rank of the Case 6 matrix") {
    auto a = canonical_2x4(PencilTag::Case6);
    // x3 does not occur, so every entry vanishes at (0,0,0,1)
    CHECK(rank(evaluate(a, {Fp(0), Fp(0), Fp(0), Fp(1)})) == 0);
    CHECK(rank(evaluate(a, {Fp(1), Fp(0), Fp(0), Fp(0)})) == 2);
}
