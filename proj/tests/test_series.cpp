#include "hsop/series.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hsop;

namespace {

IntPolynomial poly(std::initializer_list<std::pair<std::size_t, long long>> terms) {
    IntPolynomial p;
    for (auto [e, c] : terms) p += IntPolynomial::monomial(c, e);
    return p;
}

IntPolynomial product_one_minus(std::initializer_list<std::size_t> exps) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (auto e : exps) p = p * IntPolynomial::one_minus_power(e);
    return p;
}

IntPolynomial product_one_minus(const DegreeSequence& seq) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int d : seq) p = p * IntPolynomial::one_minus_power(static_cast<std::size_t>(d));
    return p;
}

}  // namespace

TEST(Polynomial, CanonicalFormAndArithmetic) {
    const IntPolynomial z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    IntPolynomial p = poly({{0, 1}, {3, -1}});
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_EQ(p.to_string(), "1 - t^3");
    EXPECT_EQ(poly({{0, 1}, {4, 2}, {5, -1}}).to_string(), "1 + 2*t^4 - t^5");
    EXPECT_EQ(poly({{1, 1}}).to_string(), "t");
    EXPECT_EQ(z.to_string(), "0");
    EXPECT_EQ(p.to_pairs(), "0:1,3:-1");
    EXPECT_EQ(IntPolynomial::from_pairs("0:1,3:-1"), p);
    EXPECT_EQ(IntPolynomial::from_pairs(""), z);
}

TEST(Polynomial, DivisionIsExactOrThrows) {
    const IntPolynomial a = product_one_minus({2, 3, 5});
    EXPECT_EQ(exact_divide(a, IntPolynomial::one_minus_power(3)), product_one_minus({2, 5}));
    EXPECT_THROW(exact_divide(a, IntPolynomial::one_minus_power(4)), NotPolynomial);
    const auto [q, r] = divmod(poly({{0, 1}, {2, 1}}), poly({{0, 1}, {1, 1}}));
    EXPECT_EQ(q * poly({{0, 1}, {1, 1}}) + r, poly({{0, 1}, {2, 1}}));
}

TEST(Polynomial, FirstNegativeAndPalindrome) {
    EXPECT_EQ(first_negative(poly({{0, 1}, {3, -1}})), 3u);
    EXPECT_FALSE(first_negative(poly({{0, 1}, {3, 1}})).has_value());
    EXPECT_TRUE(poly({{0, 1}, {2, 3}, {4, 1}}).is_palindromic());
    EXPECT_FALSE(poly({{0, 1}, {1, 3}, {4, 1}}).is_palindromic());
}

TEST(TruncatedSeries, RefusesToReadPastOrder) {
    const TruncatedSeries s = poincare_series(4, 10);
    EXPECT_EQ(s.order(), 10u);
    EXPECT_NO_THROW(s[10]);
    EXPECT_THROW(s[11], DomainError);
}

TEST(Poincare, QuinticDisplayedSeries) {
    const IntPolynomial expected = poly({{0, 1}, {4, 1}, {8, 2}, {12, 3}, {16, 4}, {18, 1}, {20, 5},
                                         {22, 1}, {24, 7}, {26, 2}, {28, 8}, {30, 3}});
    EXPECT_EQ(poincare_series(5, 30).as_polynomial(), expected);
}

TEST(Poincare, SexticDisplayedSeries) {
    const IntPolynomial expected =
        poly({{0, 1},   {2, 1},   {4, 2},   {6, 3},   {8, 4},   {10, 6},  {12, 8},  {14, 10},
              {15, 1},  {16, 13}, {17, 1},  {18, 16}, {19, 2},  {20, 20}, {21, 3},  {22, 24},
              {23, 4},  {24, 29}, {25, 6},  {26, 34}, {27, 8},  {28, 40}, {29, 10}, {30, 47}});
    EXPECT_EQ(poincare_series(6, 30).as_polynomial(), expected);
}

TEST(Poincare, OcticDisplayedSeries) {
    const IntPolynomial expected = poly({{0, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 4}, {7, 4}, {8, 7},
                                         {9, 8}, {10, 12}, {11, 13}, {12, 20}, {13, 22}, {14, 31}});
    EXPECT_EQ(poincare_series(8, 14).as_polynomial(), expected);
}

TEST(Poincare, SmallDegreesAreClosedForms) {
    EXPECT_EQ(poincare_series(1, 5).as_polynomial(), IntPolynomial::constant(1));
    // 1/(1-t^2) and 1/(1-t^4)
    const TruncatedSeries two = poincare_series(2, 40);
    const TruncatedSeries three = poincare_series(3, 40);
    for (std::size_t m = 0; m <= 40; ++m) {
        EXPECT_EQ(two[m], m % 2 == 0 ? 1 : 0);
        EXPECT_EQ(three[m], m % 4 == 0 ? 1 : 0);
    }
}

TEST(Poincare, CoefficientsAreInvariantDimensions) {
    for (int n = 1; n <= 12; ++n) {
        const TruncatedSeries s = poincare_series(n, 40);
        for (int m = 0; m <= 40; ++m) ASSERT_EQ(s[m], oracle::invariant_dim(n, m)) << n << " " << m;
    }
}

TEST(Dixmier, ThreeCases) {
    EXPECT_EQ(dixmier_B(5), product_one_minus({4, 6, 8}));
    EXPECT_EQ(dixmier_B(6), product_one_minus({2, 3, 4, 5}) * poly({{0, 1}, {1, 1}}));
    EXPECT_EQ(dixmier_B(8), product_one_minus({2, 3, 4, 5, 3, 7}) * poly({{0, 1}, {1, 1}}));
    EXPECT_THROW(dixmier_B(2), DomainError);
}

TEST(PB, KnownSmallCases) {
    EXPECT_EQ(pb_polynomial(3), IntPolynomial::constant(1));
    EXPECT_EQ(exact_divide(pb_polynomial(4) * product_one_minus({2, 3}), dixmier_B(4)), IntPolynomial::constant(1));
}

TEST(PB, WindowIsCleanForThreeToTwelve) {
    for (int n = 3; n <= 12; ++n) {
        const IntPolynomial b = dixmier_B(n);
        const std::size_t order = pb_window(n) + static_cast<std::size_t>(b.degree());
        const TruncatedSeries conv = poincare_series(n, order).times(b);
        const IntPolynomial pb = pb_polynomial(n);
        for (std::size_t k = 0; k <= order; ++k) {
            const Integer want = static_cast<long>(k) <= pb.degree() ? pb[k] : Integer(0);
            ASSERT_EQ(conv[k], want) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Numerator, PublishedIdentities) {
    EXPECT_EQ(hsop_numerator(6, {6, 6, 6, 20}),
              poly({{0, 1}, {2, 1}, {4, 2}, {8, 1}, {12, 2}, {14, 1}, {15, 1}, {16, 1},
                    {17, 1}, {19, 2}, {23, 1}, {27, 2}, {29, 1}, {31, 1}}));
    EXPECT_EQ(hsop_numerator(8, {2, 3, 4, 5, 6, 7}), poly({{0, 1}, {8, 1}, {9, 1}, {10, 1}, {18, 1}}));
    EXPECT_EQ(hsop_numerator(3, {4}), IntPolynomial::constant(1));
    EXPECT_FALSE(first_negative(hsop_numerator(6, {6, 6, 6, 20})).has_value());
}

TEST(Numerator, RefusesBadInput) {
    EXPECT_THROW(hsop_numerator(5, {4, 4, 6}), PreconditionFailed);
    EXPECT_THROW(hsop_numerator(5, {4, 8}), LengthMismatch);
}

TEST(Numerator, OcticWithRepeatedTwoGoesNegativeEarly) {
    // {2,2} forces a negative coefficient at t^4 or below whatever the rest is.
    for (const DegreeSequence seq : {DegreeSequence{2, 2, 5, 6, 7, 12}, DegreeSequence{2, 2, 3, 7, 12, 20},
                                     DegreeSequence{2, 2, 6, 7, 12, 15}}) {
        const auto neg = first_negative(hsop_numerator(8, seq));
        ASSERT_TRUE(neg.has_value()) << seq.to_string();
        EXPECT_LE(*neg, 4u) << seq.to_string();
    }
}

TEST(Numerator, PartialProductsForOcticTableRows) {
    // P(t) times prod(1 - t^d) over a sub-sequence of an hsop's degrees has no
    // negative coefficient; each listed row fails that within degree 40.
    const TruncatedSeries p = poincare_series(8, 40);
    const std::vector<std::vector<std::size_t>> rows{{2, 2}, {2, 4, 4}, {3, 5, 5}, {5, 5, 5},
                                                     {3, 3}, {2, 5, 5}, {4, 4, 4}, {2, 3, 7, 7}};
    for (const auto& row : rows) {
        TruncatedSeries s = p;
        for (auto d : row) s = s.times(IntPolynomial::one_minus_power(d));
        EXPECT_TRUE(s.as_polynomial().first_negative().has_value());
    }
    // Every sub-multiset of the hsop 2,3,4,5,6,7 stays nonnegative.
    const std::vector<std::size_t> hsop{2, 3, 4, 5, 6, 7};
    for (unsigned mask = 0; mask < 64; ++mask) {
        TruncatedSeries s = p;
        for (unsigned i = 0; i < 6; ++i)
            if (mask >> i & 1) s = s.times(IntPolynomial::one_minus_power(hsop[i]));
        EXPECT_FALSE(s.as_polynomial().first_negative().has_value()) << mask;
    }
}

TEST(Numerator, ExactIdentityAndSeriesConsistency) {
    const std::vector<std::pair<int, DegreeSequence>> cases{
        {3, {4}},           {3, {8}},           {4, {2, 3}},           {4, {6, 6}},
        {5, {4, 8, 12}},    {5, {4, 8, 18}},    {5, {8, 12, 12}},      {6, {2, 4, 6, 10}},
        {6, {2, 4, 6, 15}}, {6, {6, 6, 6, 20}}, {7, {4, 8, 8, 12, 30}}, {7, {4, 8, 12, 12, 20}},
        {8, {2, 3, 4, 5, 6, 7}}, {8, {2, 3, 4, 8, 9, 210}}, {9, {4, 8, 10, 12, 12, 14, 16}},
        {10, {2, 4, 6, 6, 8, 9, 10, 14}}};
    for (const auto& [n, seq] : cases) {
        const IntPolynomial num = hsop_numerator(n, seq);
        const IntPolynomial prod = product_one_minus(seq);
        EXPECT_EQ(num * dixmier_B(n), pb_polynomial(n) * prod) << n << ": " << seq.to_string();
        std::size_t order = 10;
        for (int d : seq) order += static_cast<std::size_t>(d);
        const TruncatedSeries expanded = TruncatedSeries::from_polynomial(num, order).divided_by(prod);
        const TruncatedSeries direct = poincare_series(n, order);
        for (std::size_t k = 0; k <= order; ++k) ASSERT_EQ(expanded[k], direct[k]) << n << " k=" << k;
    }
}

TEST(Numerator, PalindromicityIsReportedNotRequired) {
    // Recorded for the known hsops; the library never rejects a numerator on
    // this ground.
    for (const auto& [n, seq] : std::vector<std::pair<int, DegreeSequence>>{
             {5, {4, 8, 12}}, {6, {2, 4, 6, 10}}, {8, {2, 3, 4, 5, 6, 7}}, {6, {6, 6, 6, 20}}}) {
        const IntPolynomial num = hsop_numerator(n, seq);
        RecordProperty(std::to_string(n) + ":" + seq.to_string(), num.is_palindromic() ? "palindromic" : "not");
        EXPECT_TRUE(num.is_palindromic()) << n << ": " << seq.to_string();
    }
}
