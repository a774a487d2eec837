#pragma once

#include <cstdint>
#include <vector>

#include "gdrs/bigint.hpp"
#include "gdrs/field.hpp"
#include "gdrs/peculiarity.hpp"

namespace gdrs {

/// B_0..B_n (or A_0..A_n) of a coset or code.
struct WeightDistribution {
    std::vector<BigInt> counts;

    BigInt total() const;
    std::size_t length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Weight-2 vector gamma1 at position j1 and gamma2 at j2 (1-based).
struct CosetLeader2 {
    std::uint32_t j1 = 1;
    std::uint32_t j2 = 2;
    FieldElement gamma1{1};
    FieldElement gamma2{1};

    /// Orders the positions so that j1 < j2. Throws InvalidArgument on equal
    /// positions, a zero position, or a zero gamma.
    static CosetLeader2 make(std::uint32_t j1, std::uint32_t j2, FieldElement gamma1, FieldElement gamma2);

    friend bool operator==(const CosetLeader2&, const CosetLeader2&) = default;
};

/// Normalized [q+1, q+2-d, d]_q GDRS code.
///
/// Column j <= q-1 of H is (1, m_j, ..., m_j^{d-2}) with m_j = beta^{j-1};
/// column q is (1, 0, ..., 0); column q+1 is (0, ..., 0, 1).
class GdrsCode {
public:
    /// Throws InvalidArgument unless 3 <= d <= q+1.
    static GdrsCode make(Field field, std::uint32_t d);

    const Field& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_.order(); }
    std::uint32_t n() const noexcept { return q() + 1; }
    std::uint32_t d() const noexcept { return d_; }
    std::uint32_t k() const noexcept { return n() + 1 - d_; }
    std::uint32_t redundancy() const noexcept { return d_ - 1; }

    /// H[r][j], 0-based row and column.
    const std::vector<std::vector<FieldElement>>& parity_check() const noexcept { return H_; }
    /// k x n generator, a basis of the null space of H.
    const std::vector<std::vector<FieldElement>>& generator() const noexcept { return G_; }

    std::vector<FieldElement> syndrome(const std::vector<FieldElement>& x) const;
    /// Syndrome of a weight-2 leader.
    std::vector<FieldElement> syndrome(const CosetLeader2& leader) const;
    /// The leader as a length-n vector.
    std::vector<FieldElement> expand(const CosetLeader2& leader) const;

private:
    GdrsCode(Field field, std::uint32_t d) : field_(std::move(field)), d_(d) {}

    Field field_;
    std::uint32_t d_;
    std::vector<std::vector<FieldElement>> H_;
    std::vector<std::vector<FieldElement>> G_;
};

/// Any-size rank over F_q by Gaussian elimination.
std::size_t rank(const Field& field, std::vector<std::vector<FieldElement>> rows);

/// A_w of an [n, n-d+1, d]_q MDS code.
WeightDistribution mds_code_wd(std::uint32_t n, std::uint32_t d, std::uint32_t q);

/// (-1)^{w-d} C(n-v, w-v) C(w-1-v, d-2-v).
BigInt omega(std::int64_t w, std::int64_t v, std::int64_t n, std::int64_t d);

/// Extends B_0..B_{d-2} to B_0..B_n for a coset of an MDS code.
/// Throws MassMismatch if the result has a negative entry or the wrong mass,
/// InvalidArgument on a prefix of the wrong length.
WeightDistribution bonneau_extend(std::uint32_t n, std::uint32_t d, std::uint32_t q,
                                  const std::vector<BigInt>& prefix);

/// The weight distribution shared by every weight-1 coset.
WeightDistribution coset_wd_weight1(const GdrsCode& code);

/// B_{d-2} of a weight-2 coset: P^+_{q-1,d-2}(dlog(-gamma2/gamma1)).
BigInt coset_bd2(const GdrsCode& code, const CosetLeader2& leader);

/// Weight distribution of the coset with the given weight-2 leader.
/// Throws DistanceTooSmall when d < 5.
WeightDistribution coset_wd_weight2(const GdrsCode& code, const CosetLeader2& leader);

/// The common weight-2 coset distribution when gcd(q-1, d-2) == 1.
/// Throws NotUniformCase otherwise, DistanceTooSmall when d < 5.
WeightDistribution coset_wd_weight2_uniform(const GdrsCode& code);

/// Weight-2 coset distribution from a given B_{d-2}.
WeightDistribution coset_wd_weight2_from_bd2(std::uint32_t q, std::uint32_t d, const BigInt& bd2);

/// C(n-2, d-2) / (q-1) is an integer, n = q+1.
bool necessary_condition(std::uint32_t q, std::uint32_t d);

/// Sum of B_{d-2} over all weight-2 cosets: (q-1) C(n,2) C(n-2, d-2).
BigInt bd2_total(std::uint32_t q, std::uint32_t d);

/// (-1)^{n+d} B_w - B_{n+d-2-w} agrees between a and b for w = d-1..n.
bool symmetry_residual(const WeightDistribution& a, const WeightDistribution& b, std::uint32_t n,
                       std::uint32_t d);

}  // namespace gdrs
