#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gdrs/code.hpp"

namespace gdrs {

/// Exhaustive ground truth for small codes. Nothing here uses the weight
/// distribution formulas or the peculiarity routes.

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

struct OracleOptions {
    /// Cap on elementary steps (vectors visited times work per vector).
    std::uint64_t budget = kDefaultOracleBudget;
    bool override_budget = false;
    unsigned jobs = 1;
};

/// Number of vectors of each syndrome among all weight-w vectors of F_q^n.
class SyndromeBuckets {
public:
    /// Throws BudgetExceeded if C(n, w) (q-1)^w exceeds the budget.
    static SyndromeBuckets build(const GdrsCode& code, std::uint32_t weight, const OracleOptions& opts = {});

    std::uint32_t weight() const noexcept { return weight_; }
    std::uint64_t count(const std::vector<FieldElement>& syndrome) const;
    std::uint64_t vectors() const noexcept { return vectors_; }

private:
    SyndromeBuckets() = default;

    std::uint32_t q_ = 0;
    std::uint32_t weight_ = 0;
    std::uint64_t vectors_ = 0;
    std::vector<std::uint64_t> counts_;  // indexed by the syndrome read as base-q digits
};

/// Weight-(d-2) vectors in the leader's coset, by syndrome bucketing.
BigInt oracle_bd2(const GdrsCode& code, const CosetLeader2& leader, const OracleOptions& opts = {});

/// Every codeword, row-major with n entries each, in message order.
std::vector<std::uint32_t> enumerate_codewords(const GdrsCode& code, const OracleOptions& opts = {});

/// Weight distribution of leader + C by translating every codeword.
WeightDistribution oracle_full_coset_wd(const GdrsCode& code, const std::vector<FieldElement>& leader,
                                        const OracleOptions& opts = {});
WeightDistribution oracle_full_coset_wd(const GdrsCode& code, const CosetLeader2& leader,
                                        const OracleOptions& opts = {});

struct RegularityReport {
    bool regular = true;
    /// Two leaders of equal weight whose cosets differ, when not regular.
    std::optional<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>> witness;
    /// Distinct weight distributions among cosets of weight 0, 1, 2.
    std::vector<std::vector<WeightDistribution>> distinct;
    std::uint64_t cosets_checked = 0;
};

/// Enumerates every coset of weight 0, 1 and 2 (each weight-2 vector leads its
/// own coset since d >= 5). Throws DistanceTooSmall, BudgetExceeded.
RegularityReport check_2_regular(const GdrsCode& code, const OracleOptions& opts = {});

/// Every d-1 columns of H are linearly independent.
bool check_mds(const GdrsCode& code);

}  // namespace gdrs
