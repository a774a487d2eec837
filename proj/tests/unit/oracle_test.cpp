#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "gdrs/errors.hpp"
#include "gdrs/oracle.hpp"
#include "oracles.hpp"

namespace gdrs {
namespace {

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

GdrsCode code(std::uint32_t q, std::uint32_t d) { return GdrsCode::make(Field::make(q), d); }

std::vector<FieldElement> vec(const GdrsCode& c, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> entries) {
    std::vector<FieldElement> v(c.n(), FieldElement{0});
    for (auto [pos, val] : entries) v[pos - 1] = FieldElement{val};
    return v;
}

TEST(Codewords, FormTheCode) {
    for (auto [q, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 5}, {7, 5}, {8, 6}, {9, 7}}) {
        const auto c = code(q, d);
        const auto words = enumerate_codewords(c);
        const std::size_t n = c.n();
        ASSERT_EQ(words.size(), static_cast<std::size_t>(ipow(q, c.k())) * n);
        std::set<std::vector<std::uint32_t>> distinct;
        std::uint32_t min_weight = n + 1;
        for (std::size_t i = 0; i < words.size(); i += n) {
            std::vector<std::uint32_t> w(words.begin() + static_cast<long>(i), words.begin() + static_cast<long>(i + n));
            std::vector<FieldElement> fw;
            std::uint32_t weight = 0;
            for (auto x : w) {
                fw.push_back(FieldElement{x});
                weight += x != 0;
            }
            for (auto s : c.syndrome(fw)) ASSERT_EQ(s.value, 0U);
            if (weight > 0) min_weight = std::min(min_weight, weight);
            distinct.insert(std::move(w));
        }
        EXPECT_EQ(distinct.size(), words.size() / n);
        EXPECT_EQ(min_weight, d);
    }
}

TEST(FullCosetOracle, MatchesFrozenEnumeration) {
    const auto c7 = code(7, 5);
    EXPECT_EQ(oracle_full_coset_wd(c7, vec(c7, {{1, 1}, {2, 6}})).counts, big({0, 0, 1, 4, 35, 192, 531, 940, 698}));
    EXPECT_EQ(oracle_full_coset_wd(c7, vec(c7, {{1, 1}, {2, 4}})).counts, big({0, 0, 1, 3, 40, 182, 541, 935, 699}));
    EXPECT_EQ(oracle_full_coset_wd(c7, vec(c7, {{3, 2}})).counts, big({0, 1, 0, 0, 35, 217, 490, 966, 692}));
    EXPECT_EQ(oracle_full_coset_wd(c7, vec(c7, {})).counts, mds_code_wd(8, 5, 7).counts);
    const auto c5 = code(5, 5);
    EXPECT_EQ(oracle_full_coset_wd(c5, vec(c5, {{1, 1}, {2, 1}})).counts, big({0, 0, 1, 1, 6, 11, 6}));
    EXPECT_EQ(oracle_full_coset_wd(c5, vec(c5, {{2, 3}, {5, 2}})).total(), 25);
}

TEST(FullCosetOracle, FormulaAgreesForEveryCanonicalLeader) {
    for (auto [q, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 5}, {7, 5}, {8, 5}, {9, 5}, {7, 6}, {8, 6}, {9, 7}}) {
        const auto c = code(q, d);
        for (auto g2 : c.field().nonzero_elements()) {
            const auto leader = CosetLeader2::make(1, 2, c.field().one(), g2);
            EXPECT_EQ(oracle_full_coset_wd(c, leader), coset_wd_weight2(c, leader)) << "q=" << q << " d=" << d;
        }
        EXPECT_EQ(oracle_full_coset_wd(c, vec(c, {{c.n(), 1}})), coset_wd_weight1(c));
    }
}

TEST(Bd2Oracle, Examples) {
    const auto c7 = code(7, 5);
    EXPECT_EQ(oracle_bd2(c7, CosetLeader2::make(1, 2, FieldElement{1}, FieldElement{6})), 4);
    EXPECT_EQ(oracle_bd2(c7, CosetLeader2::make(7, 8, FieldElement{1}, FieldElement{6})), 4);
    const auto c5 = code(5, 5);
    EXPECT_EQ(oracle_bd2(c5, CosetLeader2::make(3, 4, FieldElement{2}, FieldElement{3})), 1);
}

TEST(Bd2Oracle, PositionIndependenceAndIntegralSpectrum) {
    for (std::uint32_t q : {5U, 7U, 8U}) {
        const auto c = code(q, 5);
        const auto buckets = SyndromeBuckets::build(c, 3);
        EXPECT_EQ(buckets.vectors(), static_cast<std::uint64_t>(binomial(c.n(), 3) * ipow(q - 1, 3)));
        BigInt total = 0;
        for (auto g1 : c.field().nonzero_elements()) {
            for (auto g2 : c.field().nonzero_elements()) {
                const auto at12 = buckets.count(c.syndrome(CosetLeader2::make(1, 2, g1, g2)));
                EXPECT_EQ(at12, coset_bd2(c, CosetLeader2::make(1, 2, g1, g2)));
                for (std::uint32_t j1 = 1; j1 <= c.n(); ++j1) {
                    for (std::uint32_t j2 = j1 + 1; j2 <= c.n(); ++j2) {
                        const auto v = buckets.count(c.syndrome(CosetLeader2::make(j1, j2, g1, g2)));
                        ASSERT_EQ(v, at12) << "q=" << q << " (" << j1 << "," << j2 << ")";
                        total += v;
                    }
                }
            }
        }
        EXPECT_EQ(total, bd2_total(q, 5));
    }
}

TEST(FullCosetOracle, ScalingInvariance) {
    testing::RingCaseGen gen(100, 77);
    for (std::uint32_t q : {5U, 7U}) {
        const auto c = code(q, 5);
        const Field& f = c.field();
        for (int trial = 0; trial < 12; ++trial) {
            // Random vector of weight 1..3, including raw weight-3 cosets.
            std::vector<FieldElement> v(c.n(), f.zero());
            const std::uint32_t weight = 1 + gen.below(3);
            for (std::uint32_t i = 0; i < weight; ++i) v[gen.below(c.n())] = FieldElement{1 + gen.below(q - 1)};
            const auto ref = oracle_full_coset_wd(c, v);
            for (auto alpha : f.nonzero_elements()) {
                std::vector<FieldElement> scaled(v.size());
                for (std::size_t j = 0; j < v.size(); ++j) scaled[j] = f.mul(alpha, v[j]);
                EXPECT_EQ(oracle_full_coset_wd(c, scaled), ref) << "q=" << q;
            }
        }
    }
}

TEST(TwoRegularity, Examples) {
    auto r5 = check_2_regular(code(5, 5));
    EXPECT_TRUE(r5.regular);
    EXPECT_FALSE(r5.witness);
    EXPECT_EQ(r5.cosets_checked, 1U + 6 * 4 + 15 * 16);

    const auto c7 = code(7, 5);
    auto r7 = check_2_regular(c7);
    EXPECT_FALSE(r7.regular);
    ASSERT_TRUE(r7.witness);
    EXPECT_EQ(r7.distinct[0].size(), 1U);
    EXPECT_EQ(r7.distinct[1].size(), 1U);
    EXPECT_EQ(r7.distinct[2].size(), 2U);
    const auto a = oracle_full_coset_wd(c7, r7.witness->first);
    const auto b = oracle_full_coset_wd(c7, r7.witness->second);
    EXPECT_NE(a, b);
    std::set<BigInt> b3 = {a.counts[3], b.counts[3]};
    EXPECT_EQ(b3, (std::set<BigInt>{3, 4}));

    auto r8 = check_2_regular(code(8, 5));
    EXPECT_TRUE(r8.regular);
    EXPECT_EQ(r8.distinct[2].front().counts[3], 5);
}

TEST(TwoRegularity, BudgetGuard) {
    OracleOptions tiny;
    tiny.budget = 1000;
    try {
        check_2_regular(code(7, 5), tiny);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    }
    EXPECT_THROW(oracle_full_coset_wd(code(16, 5), std::vector<FieldElement>(17, FieldElement{0})), Error);
    EXPECT_THROW(check_2_regular(code(7, 4)), Error);
}

TEST(Mds, EveryColumnSubsetIsIndependent) {
    for (std::uint32_t q : {3U, 4U, 5U, 7U, 8U, 9U}) {
        for (std::uint32_t d = 3; d <= q + 1; ++d) EXPECT_TRUE(check_mds(code(q, d))) << "q=" << q << " d=" << d;
    }
}

}  // namespace
}  // namespace gdrs
