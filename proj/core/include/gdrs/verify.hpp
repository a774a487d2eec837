#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdrs/oracle.hpp"
#include "gdrs/peculiarity.hpp"

namespace gdrs {

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Untested;
    std::string expected;
    std::string actual;
    std::string note;
};

struct SuiteOptions {
    std::uint32_t q_max = 31;
    /// Suite-specific default when unset: 20 for conjecture-4a, 22 for
    /// conjecture-mu-prime.
    std::optional<std::uint32_t> R_max;
    std::vector<std::uint32_t> prime_mus = {11};
    std::vector<std::uint32_t> oracle_qs = {5, 7, 8};
    std::uint32_t oracle_d = 5;
    BruteForceOptions brute;
    OracleOptions oracle;
};

/// table4, oracle, conjecture-4a, conjecture-mu-prime, conjecture-d-p2.
const std::vector<std::string_view>& suite_names();

/// Throws InvalidArgument on an unknown suite.
std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& opts = {});

/// One row of the weight-2 coset table: a family of q in terms of t, the
/// distance d, and the value of P^+_{q-1,d-2} on each class of lambda.
struct Table4Row {
    std::uint32_t d;
    std::string family;
    bool (*admits)(std::uint32_t q);
    std::uint32_t classes;
    /// Class index of lambda, below `classes`.
    std::uint32_t (*class_of)(std::uint32_t lambda);
    /// Tabulated value on a class, exact.
    BigRational (*value)(std::uint32_t q, std::uint32_t cls);
};

const std::vector<Table4Row>& table4_rows();

/// Every row instance with prime-power q <= q_max against the profile engine
/// and the weight-2 coset route.
std::vector<Check> verify_table4(std::uint32_t q_max);

/// Formula against enumeration for each q in opts.oracle_qs at d = opts.oracle_d.
std::vector<Check> verify_oracle(const SuiteOptions& opts);

Check to_check(const ConjectureResult& r);

/// No check has status Fail.
bool all_passed(const std::vector<Check>& checks);

}  // namespace gdrs
