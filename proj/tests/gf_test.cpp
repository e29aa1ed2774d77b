#include <fracperm/field.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace fracperm;

namespace {

struct RosterRow {
    u64 p;
    u32 n;
    std::vector<u32> mod;
    u64 g;
};

// Deterministic context selection: smallest monic irreducible modulus
// (coefficients low-first) and smallest generator.  These values are load
// bearing: every integer witness in the suite is an encoding under them.
const std::vector<RosterRow> kRoster = {
    {2, 1, {0, 1}, 1},
    {2, 2, {1, 1, 1}, 2},
    {2, 3, {1, 0, 1, 1}, 2},
    {2, 4, {1, 0, 0, 1, 1}, 2},
    {2, 5, {1, 0, 0, 1, 0, 1}, 2},
    {2, 6, {1, 0, 0, 0, 0, 1, 1}, 2},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}, 2},
    {2, 8, {1, 0, 0, 0, 1, 1, 0, 1, 1}, 6},
    {3, 1, {0, 1}, 2},
    {3, 2, {1, 0, 1}, 4},
    {3, 3, {1, 0, 2, 1}, 3},
    {3, 4, {1, 0, 1, 1, 1}, 10},
    {3, 6, {1, 0, 0, 0, 1, 1, 1}, 4},
    {5, 1, {0, 1}, 2},
    {5, 2, {1, 1, 1}, 7},
    {5, 3, {1, 0, 1, 1}, 7},
    {5, 4, {1, 0, 1, 1, 1}, 30},
    {7, 1, {0, 1}, 3},
    {7, 2, {1, 0, 1}, 9},
    {11, 1, {0, 1}, 2},
    {13, 1, {0, 1}, 2},
};

TEST(FieldRoster, ModuliAndGenerators) {
    for (const auto& row : kRoster) {
        const Field& F = Field::make(row.p, row.n);
        EXPECT_EQ(F.modulus(), row.mod) << F.name();
        EXPECT_EQ(F.primitive(), row.g) << F.name();
        EXPECT_EQ(F.p(), row.p);
        EXPECT_EQ(F.n(), row.n);
        u64 N = 1;
        for (u32 i = 0; i < row.n; ++i) N *= row.p;
        EXPECT_EQ(F.size(), N) << F.name();
    }
}

// the one modulus pinned away from the lexicographic rule, so that mu_129
// witnesses match the classical w^7+w+1 presentation
TEST(FieldRoster, Binary128Pin) {
    const Field& F = Field::make(2, 7);
    EXPECT_EQ(F.modulus(), (std::vector<u32>{1, 1, 0, 0, 0, 0, 0, 1}));
}

TEST(FieldRoster, PrimitiveSets) {
    EXPECT_EQ(Field::make(3, 2).primitives(), (std::vector<u64>{4, 5, 7, 8}));
    EXPECT_EQ(Field::make(5, 2).primitives(), (std::vector<u64>{7, 9, 13, 14, 16, 17, 21, 23}));
    EXPECT_EQ(Field::make(7, 1).primitives(), (std::vector<u64>{3, 5}));
    EXPECT_EQ(Field::make(2, 4).primitives(), (std::vector<u64>{2, 4, 6, 7, 9, 12, 13, 14}));
}

TEST(FieldRoster, SameContextIsSameObject) {
    const Field& a = Field::make(3, 2);
    const Field& b = Field::make(3, 2);
    EXPECT_EQ(&a, &b);
}

TEST(FieldMake, RejectsBadParameters) {
    EXPECT_THROW(Field::make(4, 1), FieldError);
    EXPECT_THROW(Field::make(1, 1), FieldError);
    EXPECT_THROW(Field::make(2, 0), FieldError);
    EXPECT_THROW(Field::make(2, 23), CapError);  // over the size cap
    EXPECT_THROW(Field::make(5, 10), CapError);
}

TEST(FieldAxioms, SampledLaws) {
    std::mt19937_64 rng(0xf1e1d5);
    for (auto [p, n] : {std::pair<u64, u32>{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
        const Field& F = Field::make(p, n);
        std::uniform_int_distribution<u64> pick(0, F.size() - 1);
        for (int i = 0; i < 300; ++i) {
            u64 a = pick(rng), b = pick(rng), c = pick(rng);
            EXPECT_EQ(F.add(a, b), F.add(b, a));
            EXPECT_EQ(F.mul(a, b), F.mul(b, a));
            EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
            EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
            EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            EXPECT_EQ(F.add(a, 0), a);
            EXPECT_EQ(F.mul(a, 1), a);
            EXPECT_EQ(F.add(a, F.neg(a)), 0u);
            if (a) {
                EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
                EXPECT_EQ(F.div(F.mul(a, b), a), b);
            }
        }
        EXPECT_THROW(F.inv(0), FieldError);
        EXPECT_THROW(F.div(1, 0), FieldError);
    }
}

TEST(FieldPow, EdgeCases) {
    const Field& F = Field::make(5, 2);
    EXPECT_EQ(F.powu(0, 0), 1u);
    EXPECT_EQ(F.powu(0, 7), 0u);
    EXPECT_EQ(F.powu(F.primitive(), F.size() - 1), 1u);
    u64 a = 13;
    EXPECT_EQ(F.pows(a, -1), F.inv(a));
    EXPECT_EQ(F.mul(F.pows(a, -3), F.powu(a, 3)), 1u);
    EXPECT_EQ(F.elem_exp(F.elem_log(a)), a);
    EXPECT_EQ(F.order(F.primitive()), F.size() - 1);
    EXPECT_EQ(F.order(1), 1u);
    EXPECT_EQ(F.order(F.powu(F.primitive(), 8)), 3u);  // 24/gcd(24,8)
}

TEST(FieldFrobenius, SubfieldMembership) {
    const Field& F = Field::make(3, 4);
    auto sub2 = F.subfield_elements(2);
    EXPECT_EQ(sub2.size(), 9u);
    for (u64 e : sub2) EXPECT_EQ(F.powu(e, 9), e);
    size_t others = 0;
    for (u64 e = 0; e < F.size(); ++e)
        if (F.in_subfield(e, 2) && F.powu(e, 9) != e) ++others;
    EXPECT_EQ(others, 0u);
    EXPECT_EQ(F.subfield_elements(1), (std::vector<u64>{0, 1, 2}));
    EXPECT_EQ(F.subfield_elements(4).size(), F.size());
    EXPECT_THROW(F.in_subfield(1, 3), FieldError);  // 3 does not divide 4
}

TEST(FieldEncoding, DigitsRoundTrip) {
    const Field& F = Field::make(3, 3);
    for (u64 e = 0; e < F.size(); ++e) EXPECT_EQ(F.encode(F.digits(e)), e);
    EXPECT_EQ(F.digits(5), (std::vector<u32>{2, 1, 0}));  // 5 = 2 + 1*3
    EXPECT_EQ(F.from_int(-1), 2u);
    EXPECT_EQ(F.from_int(-3), 0u);
    EXPECT_EQ(F.from_int(7), 1u);
}

TEST(FieldEncoding, AddIsDigitwise) {
    const Field& F = Field::make(5, 2);
    // 13 = 3 + 2*5, 9 = 4 + 1*5; digitwise sum mod 5 = 2 + 3*5 = 17
    EXPECT_EQ(F.add(13, 9), 17u);
    const Field& B = Field::make(2, 6);
    EXPECT_EQ(B.add(0b101011, 0b001110), u64(0b100101));
}

TEST(FieldElem, CrossContextThrows) {
    const Field& A = Field::make(3, 2);
    const Field& B = Field::make(3, 3);
    Elem a{A, 4}, b{B, 4};
    EXPECT_THROW(a + b, FieldError);
    EXPECT_THROW(a * b, FieldError);
    Elem a2{A, 5};
    EXPECT_EQ((a + a2).code, A.add(4, 5));
    EXPECT_EQ((a * a2).code, A.mul(4, 5));
}

TEST(FieldPrimitives, CapEnforced) {
    const Field& F = Field::make(3, 6);
    EXPECT_THROW(F.primitives(100), FieldError);
    EXPECT_NO_THROW(F.primitives());
}

}  // namespace
