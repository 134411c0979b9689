#include <gtest/gtest.h>

#include <brodmann/cohomology.hpp>

#include <functional>

#include "corpus.hpp"

using namespace brodmann;
using brodmann::testing::e11;
using brodmann::testing::random_corpus;

namespace {

MonomialIdeal ideal(std::size_t r, std::vector<Monomial> gens) { return MonomialIdeal::generated_by(std::move(gens), r); }

// union over 1 <= m <= m_max of I^(n+m) : I^m, straight from the definition
MonomialIdeal rr_definitional(const MonomialIdeal& I, std::uint64_t n, std::uint64_t m_max) {
    MonomialIdeal u = power(I, n);
    for (std::uint64_t m = 1; m <= m_max; ++m) u = sum(u, colon(power(I, n + m), power(I, m)));
    return u;
}

MonomialIdeal scaled_colon_term(const MonomialIdeal& I, std::uint64_t n, std::uint64_t m) {
    std::vector<Monomial> scaled;
    for (const auto& a : I.generators()) scaled.push_back(pow(a, m));
    return colon(power(I, n + m), MonomialIdeal::generated_by(scaled, I.r()));
}

}  // namespace

TEST(RatliffRush, PrincipalIsClosed) {
    auto I = ideal(2, {{1, 1}});
    for (std::uint64_t n = 1; n <= 3; ++n) {
        auto rr = ratliff_rush(I, n, 4);
        EXPECT_EQ(rr.closure, ideal(2, {{exponent_t(n), exponent_t(n)}}));
        EXPECT_EQ(rr.stabilized_at_m, 0u);
        EXPECT_TRUE(rr.certified);
    }
}

TEST(RatliffRush, FourGeneratorExample) {
    auto I = ideal(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
    // x^2y^2 * g lies in I^2 for every generator g, and x^2y^2 is not in I
    Monomial u{2, 2};
    EXPECT_FALSE(I.contains(u));
    auto I2 = power(I, 2);
    for (const auto& g : I.generators()) EXPECT_TRUE(I2.contains(u * g));

    auto rr = ratliff_rush(I, 1, 8);
    EXPECT_TRUE(rr.certified);
    EXPECT_EQ(rr.closure, sum(I, ideal(2, {{2, 2}})));
    EXPECT_EQ(rr.closure, rr_definitional(I, 1, 6));
}

TEST(RatliffRush, UncertifiedWhenCapTooSmall) {
    auto I = ideal(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
    auto rr = ratliff_rush(I, 1, 2);
    EXPECT_FALSE(rr.certified);
    EXPECT_EQ(rr.stabilized_at_m, 2u);
}

TEST(RatliffRush, RejectsBadArguments) {
    EXPECT_THROW(ratliff_rush(ideal(2, {{1, 0}}), 0, 4), input_error);
    EXPECT_THROW(ratliff_rush(ideal(2, {{1, 0}}), 1, 1), input_error);
    EXPECT_THROW(ratliff_rush(MonomialIdeal::zero(2), 1, 4), input_error);
}

TEST(H0, Examples) {
    auto m = ideal(2, {{1, 0}, {0, 1}});
    auto rep = h0_m_monomials(m, 0);
    EXPECT_TRUE(rep.nonzero);
    EXPECT_EQ(rep.witness_monomials, std::vector<Monomial>{Monomial(2)});

    auto e = h0_m_monomials(e11(5), 0);
    EXPECT_TRUE(e.nonzero);
    EXPECT_EQ(e.witness_monomials, (std::vector<Monomial>{{3, 3, 0}, {2, 3, 0}}));
    EXPECT_EQ(e.numerator, ideal(3, {{5, 0, 0}, {4, 1, 0}, {1, 4, 0}, {0, 5, 0}, {2, 3, 0}}));

    EXPECT_FALSE(h0_m_monomials(e11(5), 2).nonzero);
    EXPECT_FALSE(h0_m_monomials(ideal(1, {{2}}), 1).nonzero);
}

TEST(A0, Examples) {
    auto principal = a0_observed(ideal(2, {{1, 2}}), 4, 4);
    EXPECT_FALSE(principal.a0.has_value());
    EXPECT_TRUE(principal.certified);

    auto four = a0_observed(ideal(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}}), 4, 8);
    ASSERT_TRUE(four.a0.has_value());
    EXPECT_TRUE(four.per_degree[0]);
    EXPECT_GE(*four.a0, 0u);
    EXPECT_TRUE(four.certified);
}

TEST(PropertyCohomology, ScaledColonTermsContainDefinitionalTerms) {
    for (const auto& I : random_corpus(60)) {
        for (std::uint64_t n = 1; n <= 2; ++n) {
            for (std::uint64_t m = 1; m <= 4; ++m)
                ASSERT_TRUE(is_subset(colon(power(I, n + m), power(I, m)), scaled_colon_term(I, n, m)));
        }
    }
}

TEST(PropertyCohomology, ClosureContainsPowerAndIsMultiplicative) {
    for (const auto& I : random_corpus(60)) {
        auto c1 = ratliff_rush(I, 1, 8), c2 = ratliff_rush(I, 2, 8), c3 = ratliff_rush(I, 3, 8);
        EXPECT_TRUE(c1.chain_monotone);
        EXPECT_TRUE(is_subset(power(I, 1), c1.closure));
        EXPECT_TRUE(is_subset(power(I, 2), c2.closure));
        if (c1.certified && c2.certified && c3.certified)
            EXPECT_TRUE(is_subset(product(c1.closure, c2.closure), c3.closure)) << ::testing::PrintToString(I);
    }
}

TEST(PropertyCohomology, H0WitnessesAreExactDifference) {
    for (const auto& I : random_corpus(60)) {
        for (std::uint64_t n = 0; n <= 2; ++n) {
            auto rep = h0_m_monomials(I, n);
            auto denom = power(I, n + 1);
            EXPECT_EQ(rep.nonzero, max_ideal_in_ass(I, n));
            for (const auto& w : rep.witness_monomials) {
                EXPECT_TRUE(rep.numerator.contains(w));
                EXPECT_FALSE(denom.contains(w));
            }
            // no witness outside the enumeration box: scan a box twice as large
            Monomial box = lcm(rep.numerator.is_zero() ? Monomial(I.r()) : rep.numerator.max_exponents(),
                               denom.max_exponents());
            std::size_t count = 0;
            std::vector<exponent_t> e(I.r(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == I.r()) {
                    Monomial m(e);
                    if (rep.numerator.contains(m) && !denom.contains(m)) ++count;
                    return;
                }
                for (exponent_t k = 0; k <= 2 * box[i] + 1; ++k) {
                    e[i] = k;
                    rec(i + 1);
                }
            };
            rec(0);
            EXPECT_EQ(count, rep.witness_monomials.size());
        }
    }
}
