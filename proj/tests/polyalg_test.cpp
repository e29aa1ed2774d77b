#include <fracperm/rational_map.hpp>
#include <fracperm/resultant.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace fracperm;

namespace {

UniPoly random_poly(const Field& F, int maxdeg, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> pick(0, F.size() - 1);
    std::uniform_int_distribution<int> dd(0, maxdeg);
    int d = dd(rng);
    std::vector<u64> c(size_t(d) + 1);
    for (auto& v : c) v = pick(rng);
    return UniPoly(F, std::move(c));
}

TEST(UniPolyBasics, ConstructionAndDegree) {
    const Field& F = Field::make(5, 1);
    UniPoly z(F);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.deg(), -1);
    UniPoly f = UniPoly::from_ints(F, {1, 0, 3, 0, 0});  // trailing zeros trimmed
    EXPECT_EQ(f.deg(), 2);
    EXPECT_EQ(f.coeff(0), 1u);
    EXPECT_EQ(f.coeff(1), 0u);
    EXPECT_EQ(f.coeff(2), 3u);
    EXPECT_EQ(f.coeff(9), 0u);
    EXPECT_EQ(f.lead(), 3u);
    EXPECT_EQ(UniPoly::monomial(F, 2, 4).deg(), 4);
    EXPECT_EQ(f.eval(2), F.from_int(1 + 3 * 4));
}

TEST(UniPolyBasics, ArithmeticMatchesEvaluation) {
    std::mt19937_64 rng(0xab12);
    const Field& F = Field::make(3, 3);
    for (int i = 0; i < 50; ++i) {
        UniPoly f = random_poly(F, 5, rng), g = random_poly(F, 5, rng);
        for (u64 x = 0; x < F.size(); x += 3) {
            EXPECT_EQ((f + g).eval(x), F.add(f.eval(x), g.eval(x)));
            EXPECT_EQ((f - g).eval(x), F.sub(f.eval(x), g.eval(x)));
            EXPECT_EQ((f * g).eval(x), F.mul(f.eval(x), g.eval(x)));
            EXPECT_EQ((-f).eval(x), F.neg(f.eval(x)));
        }
    }
}

TEST(UniPolyBasics, DivmodInvariant) {
    std::mt19937_64 rng(0xcd34);
    const Field& F = Field::make(5, 2);
    for (int i = 0; i < 80; ++i) {
        UniPoly f = random_poly(F, 7, rng), g = random_poly(F, 4, rng);
        if (g.is_zero()) {
            EXPECT_THROW(f.divmod(g), FieldError);
            continue;
        }
        auto [q, r] = f.divmod(g);
        EXPECT_EQ(q * g + r, f);
        EXPECT_LT(r.deg(), g.deg());
    }
}

TEST(UniPolyBasics, ExactDivision) {
    std::mt19937_64 rng(0xef56);
    const Field& F = Field::make(7, 1);
    for (int i = 0; i < 60; ++i) {
        UniPoly f = random_poly(F, 5, rng), g = random_poly(F, 4, rng);
        if (g.is_zero()) continue;
        EXPECT_EQ((f * g).exact_div(g), f);
    }
    UniPoly a = UniPoly::from_ints(F, {1, 0, 1});
    UniPoly b = UniPoly::from_ints(F, {1, 1});
    EXPECT_THROW(a.exact_div(b), FieldError);  // x^2+1 not divisible by x+1 mod 7
}

TEST(UniPolyBasics, ReversalAndDerivative) {
    const Field& F = Field::make(5, 1);
    UniPoly h = UniPoly::from_ints(F, {2, 0, 1, 4});
    EXPECT_EQ(reversal(h), UniPoly::from_ints(F, {4, 1, 0, 2}));
    EXPECT_EQ(reversal(reversal(h)), h);  // involution when constant term nonzero
    // x^deg * h(1/x) characterization at sampled points
    for (u64 x = 1; x < 5; ++x)
        EXPECT_EQ(reversal(h).eval(x), F.mul(F.powu(x, 3), h.eval(F.inv(x))));
    UniPoly g = UniPoly::from_ints(F, {0, 0, 3, 1});  // zero constant term: degree drops
    EXPECT_EQ(reversal(g).deg(), 1);
    EXPECT_EQ(UniPoly::from_ints(F, {1, 2, 3}).derivative(), UniPoly::from_ints(F, {2, 6}));
    // p-th power derivative vanishes
    EXPECT_TRUE(UniPoly::from_ints(F, {1, 0, 0, 0, 0, 2}).derivative().is_zero());
}

TEST(UniPolyBasics, GcdProperties) {
    std::mt19937_64 rng(0x9876);
    const Field& F = Field::make(5, 2);
    EXPECT_TRUE(gcd_uni(UniPoly(F), UniPoly(F)).is_zero());
    for (int i = 0; i < 40; ++i) {
        UniPoly f = random_poly(F, 3, rng), a = random_poly(F, 3, rng), b = random_poly(F, 3, rng);
        if (f.is_zero() || a.is_zero() || b.is_zero()) continue;
        UniPoly g = gcd_uni(f * a, f * b);
        EXPECT_EQ(g.lead(), 1u);
        EXPECT_TRUE((f * a).divmod(g).second.is_zero());
        EXPECT_TRUE((f * b).divmod(g).second.is_zero());
        // f divides the gcd of its multiples
        EXPECT_TRUE(g.divmod(f.monic()).second.is_zero());
    }
}

TEST(UniPolySubfield, CoefficientTests) {
    const Field& F = Field::make(3, 4);
    auto sub = F.subfield_elements(2);
    UniPoly f(F, {sub[3], sub[5], sub[1]});
    EXPECT_TRUE(f.coeffs_in_subfield(2));
    EXPECT_EQ(f.coeff_frobenius(2), f);  // Frobenius fixes F_9 coefficients
    UniPoly g(F, {5, 1});  // 5 encodes a degree-4 element off F_9
    EXPECT_FALSE(F.in_subfield(5, 2));
    EXPECT_FALSE(g.coeffs_in_subfield(2));
    EXPECT_NE(g.coeff_frobenius(2), g);
    EXPECT_EQ(g.coeff_frobenius(2).coeff_frobenius(2), g);
}

TEST(QuadraticRoots, DistinctRootsInSubfield) {
    const Field& F = Field::make(5, 2);
    // x^2 - 1 has roots 1, 4 in F_5
    UniPoly f = UniPoly::from_ints(F, {-1, 0, 1});
    EXPECT_TRUE(quadratic_distinct_roots_in(f, 1));
    // x^2 - 2: 2 is a non-square mod 5
    EXPECT_FALSE(quadratic_distinct_roots_in(UniPoly::from_ints(F, {-2, 0, 1}), 1));
    // x^2 - 2x + 1 = (x-1)^2: double root
    EXPECT_FALSE(quadratic_distinct_roots_in(UniPoly::from_ints(F, {1, -2, 1}), 1));
    auto roots = quadratic_roots(f);
    ASSERT_EQ(roots.size(), 2u);
    for (u64 r : roots) EXPECT_EQ(f.eval(r), 0u);
    // x^2 - w has roots in F_25 (every element is a square there or not; w = g)
    UniPoly g(F, {F.neg(F.primitive()), 0, 1});
    auto r2 = quadratic_roots(g);
    if (!r2.empty())
        for (u64 r : r2) EXPECT_EQ(g.eval(r), 0u);
}

TEST(BiPolyBasics, GridAndEvaluation) {
    const Field& F = Field::make(5, 1);
    BiPoly xy = BiPoly::from_int_grid(F, {{0, -1}, {1}});  // x - y, short row padded
    EXPECT_EQ(xy.deg_x(), 1);
    EXPECT_EQ(xy.deg_y(), 1);
    for (u64 a = 0; a < 5; ++a)
        for (u64 b = 0; b < 5; ++b) EXPECT_EQ(xy.eval(a, b), F.sub(a, b));
    BiPoly zero = BiPoly::from_int_grid(F, {{0}});
    EXPECT_TRUE(zero.is_zero());
    EXPECT_THROW(BiPoly(F, {{0, 1}, {1, 0, 0}}), FieldError);  // ragged explicit grid
}

TEST(BiPolyBasics, ArithmeticMatchesEvaluation) {
    std::mt19937_64 rng(0x7531);
    const Field& F = Field::make(3, 2);
    std::uniform_int_distribution<u64> pick(0, F.size() - 1);
    auto random_bi = [&](int dx, int dy) {
        std::vector<std::vector<u64>> g(size_t(dx) + 1, std::vector<u64>(size_t(dy) + 1));
        for (auto& row : g)
            for (auto& v : row) v = pick(rng);
        return BiPoly(F, std::move(g));
    };
    for (int i = 0; i < 30; ++i) {
        BiPoly A = random_bi(2, 3), B = random_bi(3, 2);
        for (u64 x = 0; x < F.size(); ++x)
            for (u64 y = 0; y < F.size(); ++y) {
                EXPECT_EQ((A + B).eval(x, y), F.add(A.eval(x, y), B.eval(x, y)));
                EXPECT_EQ((A * B).eval(x, y), F.mul(A.eval(x, y), B.eval(x, y)));
                EXPECT_EQ(A.swap_xy().eval(x, y), A.eval(y, x));
            }
        EXPECT_EQ(A.eval_x(2).eval(1), A.eval(2, 1));
    }
}

TEST(BiPolyBasics, ReciprocalTransform) {
    const Field& F = Field::make(3, 2);
    // conic xy + w^2 x + w^6 y + 1 with w the field generator
    u64 w = F.primitive();
    BiPoly C(F, {{1, F.powu(w, 6)}, {F.powu(w, 2), 1}});
    BiPoly R = reciprocal_transform(C);
    // x^degx y^degy C(1/x,1/y) at invertible points
    for (u64 x = 1; x < F.size(); ++x)
        for (u64 y = 1; y < F.size(); ++y)
            EXPECT_EQ(R.eval(x, y), F.mul(F.mul(x, y), C.eval(F.inv(x), F.inv(y))));
    EXPECT_EQ(reciprocal_transform(R), C);  // involution when no x or y divides
}

TEST(BiPolyBasics, ScalarMultipleDetection) {
    const Field& F = Field::make(5, 2);
    BiPoly A = BiPoly::from_int_grid(F, {{1, 2}, {3, 0}, {0, 4}});
    BiPoly B = A.scaled(17);
    auto s = A.scalar_multiple_of(B);  // s with B = s * A
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, 17u);
    auto t = B.scalar_multiple_of(A);  // t with A = t * B
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(F.mul(*t, 17), 1u);
    BiPoly Cx = BiPoly::from_int_grid(F, {{1, 2}, {3, 1}, {0, 4}});
    EXPECT_FALSE(A.scalar_multiple_of(Cx).has_value());
    EXPECT_FALSE(A.scalar_multiple_of(BiPoly::from_int_grid(F, {{1, 2}, {3, 0}})).has_value());
}

TEST(ExactDivide, RoundTripAndFailure) {
    std::mt19937_64 rng(0x2468);
    const Field& F = Field::make(3, 2);
    std::uniform_int_distribution<u64> pick(0, F.size() - 1);
    auto random_bi = [&](int dx, int dy) {
        std::vector<std::vector<u64>> g(size_t(dx) + 1, std::vector<u64>(size_t(dy) + 1));
        for (auto& row : g)
            for (auto& v : row) v = pick(rng);
        return BiPoly(F, std::move(g));
    };
    for (int i = 0; i < 25; ++i) {
        BiPoly A = random_bi(2, 2), B = random_bi(1, 1);
        if (B.is_zero() || B.deg_y() < 1) continue;
        EXPECT_EQ(exact_divide(A * B, B), A);
    }
    BiPoly P = BiPoly::from_int_grid(F, {{1, 1}, {0, 1}});
    BiPoly D = BiPoly::from_int_grid(F, {{0, 1}, {1}});
    EXPECT_THROW(exact_divide(P, D), FieldError);
}

TEST(CurveQuotient, DifferenceQuotientIdentity) {
    const Field& F = Field::make(3, 2);
    RationalMap g = RationalMap::from_ints(F, {0, 1, 0, 0, 0, 0, 1, -1}, {-1, 1, 0, 0, 0, 0, 1});
    BiPoly H = curve_numerator(g);
    BiPoly dq = difference_quotient(g);
    BiPoly xy = BiPoly::from_int_grid(F, {{0, -1}, {1}});
    EXPECT_EQ(dq * xy, H);
    // H is antisymmetric, so the diagonal lies on it
    for (u64 a = 0; a < F.size(); ++a) EXPECT_EQ(H.eval(a, a), 0u);
}

TEST(CurveQuotient, PolynomialMapQuotient) {
    std::mt19937_64 rng(0x1357);
    const Field& F = Field::make(5, 1);
    for (int i = 0; i < 30; ++i) {
        UniPoly f = random_poly(F, 6, rng);
        if (f.deg() < 1) continue;
        RationalMap g(f);
        BiPoly dq = difference_quotient(g);
        BiPoly xy = BiPoly::from_int_grid(F, {{0, -1}, {1}});
        EXPECT_EQ(dq * xy, curve_numerator(g));
    }
}

TEST(RationalMapBasics, NormalizationAndEval) {
    const Field& F = Field::make(5, 1);
    // (x^2-1)/(x-1) normalizes to x+1
    RationalMap g = RationalMap::from_ints(F, {-1, 0, 1}, {-1, 1});
    EXPECT_TRUE(g.is_polynomial());
    EXPECT_EQ(g.num(), UniPoly::from_ints(F, {1, 1}));
    EXPECT_EQ(g.eval(1).value(), 2u);
    // denominator made monic
    RationalMap h = RationalMap::from_ints(F, {1, 1}, {2, 0, 2});
    EXPECT_EQ(h.den().lead(), 1u);
    for (u64 x = 0; x < 5; ++x) {
        u64 d = F.add(F.mul(2, F.mul(x, x)), 2);
        auto v = h.eval(x);
        if (d == 0) {
            EXPECT_FALSE(v.has_value());
        } else {
            ASSERT_TRUE(v.has_value());
            EXPECT_EQ(*v, F.div(F.add(x, 1), d));
        }
    }
    EXPECT_THROW(RationalMap(UniPoly::from_ints(F, {1}), UniPoly(F)), FieldError);
}

TEST(ResultantY, LinearFactorsAndCommonRoots) {
    const Field& F = Field::make(7, 1);
    // Res_y(y^2 + x, y + 3) = (-3)^2 + x = x + 2 mod 7
    BiPoly A = BiPoly::from_int_grid(F, {{0, 0, 1}, {1}});
    BiPoly B = BiPoly::from_int_grid(F, {{3, 1}});
    EXPECT_EQ(resultant_y(A, B), UniPoly::from_ints(F, {2, 1}));
    // shared factor (y - x) forces the zero resultant
    BiPoly C = BiPoly::from_int_grid(F, {{0, 1}, {-1}});        // y - x
    BiPoly D = BiPoly::from_int_grid(F, {{0, 1}, {1}});         // y + x
    EXPECT_TRUE(resultant_y(C * D, C * (D + B)).is_zero());
    // y-free second argument: power of the constant-in-y polynomial
    BiPoly E = BiPoly::from_int_grid(F, {{1}, {1}});  // x + 1
    UniPoly R = resultant_y(A, E);
    EXPECT_EQ(R, UniPoly::from_ints(F, {1, 2, 1}));  // (x+1)^{deg_y A}
    EXPECT_THROW(resultant_y(E, E), FieldError);  // neither argument involves y
}

TEST(ResultantY, MatchesDifferenceOfSections) {
    std::mt19937_64 rng(0x8642);
    const Field& F = Field::make(5, 2);
    // Res_y(y - f(x), y - g(x)) = +-(f - g)
    BiPoly Y = BiPoly::from_int_grid(F, {{0, 1}});
    for (int i = 0; i < 20; ++i) {
        UniPoly f = random_poly(F, 3, rng), g = random_poly(F, 3, rng);
        if (f == g) continue;
        BiPoly P = Y - BiPoly::from_uni_x(f);
        BiPoly Q = Y - BiPoly::from_uni_x(g);
        UniPoly R = resultant_y(P, Q);
        UniPoly D = f - g;
        EXPECT_TRUE(R == D || R == -D);
    }
}

TEST(ResultantY, TowerPathAgreesWithBase) {
    // Res_y(y + x, y^2 + x) = x^2 + x needs 4 sample points, more than F_2
    // offers, so the F_2 run goes through the quadratic extension; the F_4
    // run of the same grids stays in the base field
    for (const Field* K : {&Field::make(2, 1), &Field::make(2, 2)}) {
        BiPoly A = BiPoly::from_int_grid(*K, {{0, 1}, {1}});
        BiPoly B = BiPoly::from_int_grid(*K, {{0, 0, 1}, {1}});
        EXPECT_EQ(resultant_y(A, B), UniPoly::from_ints(*K, {0, 1, 1}));
    }
}

}  // namespace
