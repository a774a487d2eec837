#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdrs/bigint.hpp"
#include "gdrs/errors.hpp"
#include "gdrs/ring.hpp"

namespace gdrs {

/// Default cap on C(R, mu) for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

enum class Method { BruteForce, ProfileEngine, ClosedForm };

std::string_view method_name(Method m) noexcept;

/// P^+_{R,mu}(lambda) for every lambda in Z_R.
struct PeculiarityTable {
    RingContext ctx;
    std::vector<BigInt> values;
    Method method;
    /// Which solved case produced a closed-form table, e.g. "mu4-D4".
    std::optional<std::string> closed_form_case;

    BigInt total() const;
    /// values[a] - values[b].
    BigInt delta(std::uint32_t a, std::uint32_t b) const;
};

struct BruteForceOptions {
    std::uint64_t budget = kDefaultBruteForceBudget;
    bool override_budget = false;
    /// 0 = hardware concurrency.
    unsigned jobs = 1;
};

/// Two routes disagreed on P^+(lambda).
class RouteMismatch : public Error {
public:
    RouteMismatch(std::uint32_t lambda, Method a, BigInt value_a, Method b, BigInt value_b);

    std::uint32_t lambda() const noexcept { return lambda_; }
    Method route_a() const noexcept { return route_a_; }
    Method route_b() const noexcept { return route_b_; }
    const BigInt& value_a() const noexcept { return value_a_; }
    const BigInt& value_b() const noexcept { return value_b_; }

private:
    std::uint32_t lambda_;
    Method route_a_;
    Method route_b_;
    BigInt value_a_;
    BigInt value_b_;
};

bool brute_force_within_budget(std::uint32_t R, std::uint32_t mu, const BruteForceOptions& opts);

/// Exhaustive count of mu-subsets of Z_R summing to lambda.
/// Throws MuOutOfRange, BudgetExceeded.
BigInt sum_peculiarity_bruteforce(std::uint32_t R, std::uint32_t mu, std::uint32_t lambda,
                                  const BruteForceOptions& opts = {});
/// One enumeration pass filling every lambda.
PeculiarityTable sum_peculiarity_table_bruteforce(std::uint32_t R, std::uint32_t mu,
                                                  const BruteForceOptions& opts = {});

/// Residue-profile route: P^+ is constant on residue classes mod D, so
/// P^+(lambda) = (1/Phi_R) * sum over profiles c of lambda mod D of
/// prod_xi C(Phi_R, N_xi). Throws NonIntegralResult if the division is not exact.
BigInt sum_peculiarity_profile(const RingContext& ctx, std::uint32_t lambda);
PeculiarityTable sum_peculiarity_profile_table(const RingContext& ctx);

/// Closed formulas for the solved cases: gcd(R, mu) == 1; (mu, D) in
/// {(3,3), (4,2), (5,5), (6,2), (6,3), (7,7), (8,2), (9,3)}; mu == 4 with
/// 4 | R. nullopt when (R, mu) is not covered.
std::optional<PeculiarityTable> sum_peculiarity_closed_form(const RingContext& ctx);

struct ReconcileReport {
    /// Profile-engine table (always computed).
    PeculiarityTable table;
    std::vector<Method> routes;
    BigInt delta01;
    /// Only when R > 2.
    std::optional<BigInt> delta02;
};

/// Runs every applicable route and requires exact agreement.
/// Throws RouteMismatch on the first disagreeing lambda.
ReconcileReport reconcile(std::uint32_t R, std::uint32_t mu, const BruteForceOptions& opts = {});

// --- conjecture sweeps -------------------------------------------------------

enum class CheckStatus { Pass, Fail, Warn, Untested };

std::string_view status_name(CheckStatus s) noexcept;

/// One instance of a sweep. Conjecture counterexamples are Warn; a failure of
/// a proved statement checked along the way is Fail.
struct ConjectureResult {
    std::string conjecture;
    std::uint32_t R = 0;
    std::uint32_t mu = 0;
    CheckStatus status = CheckStatus::Untested;
    std::string expected;
    std::string actual;
    std::string note;
};

/// Uniform P^+ iff gcd(R, mu) == 1, for R_min <= R <= R_max and 2 <= mu < R.
/// The forward direction is a theorem (Fail on violation), the converse a
/// conjecture (Warn).
std::vector<ConjectureResult> check_uniformity_conjecture(std::uint32_t R_min, std::uint32_t R_max,
                                                          const BruteForceOptions& opts = {});

/// For prime mu >= 11 and mu | R <= R_max: Delta^{(0,1)} == 1 together with
/// the closed values of P^+(0) and P^+(1).
std::vector<ConjectureResult> check_prime_mu_conjecture(std::uint32_t R_max,
                                                        const std::vector<std::uint32_t>& mus,
                                                        const BruteForceOptions& opts = {});

/// For prime-power q = p*t + 1 <= q_max, p >= 3 prime, t >= 2, d = p + 2:
/// the two-valued formula for P^+_{q-1,p}. Proved for p in {3,5,7}.
std::vector<ConjectureResult> check_d_p2_conjecture(std::uint32_t q_max, const BruteForceOptions& opts = {});

/// All three sweeps over the given ranges.
std::vector<ConjectureResult> verify_conjectures(std::uint32_t R_min, std::uint32_t R_max,
                                                 const std::vector<std::uint32_t>& prime_mus,
                                                 std::uint32_t q_max, const BruteForceOptions& opts = {});

}  // namespace gdrs
