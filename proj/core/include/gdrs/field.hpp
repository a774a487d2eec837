#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdrs/bigint.hpp"

namespace gdrs {

/// An element of F_q in canonical form.
///
/// For a prime field the value is the residue mod p. For F_{p^m} it packs the
/// coefficient vector (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... as
/// value = sum c_i p^i, so integer order is lexicographic order on
/// (c_{m-1}, ..., c_0).
struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

struct PrimePower {
    std::uint32_t p;
    std::uint32_t m;
};

std::optional<PrimePower> prime_power(std::uint32_t q);

/// Built-in Conway polynomial for F_q, low-to-high coefficients including the
/// leading 1; nullopt if q is prime or not in the table.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t q);

/// Concrete finite field F_q with a fixed primitive element and a full
/// discrete-log table. Immutable after construction.
class Field {
public:
    static constexpr std::uint32_t kDefaultMaxOrder = 1U << 16;

    /// Uses the built-in modulus table for extension fields.
    static Field make(std::uint32_t q, std::uint32_t max_order = kDefaultMaxOrder);
    /// Caller-supplied monic modulus (low-to-high, leading 1 included).
    static Field make(std::uint32_t q, std::vector<std::uint32_t> modulus,
                      std::uint32_t max_order = kDefaultMaxOrder);

    /// Same field, different primitive element. Throws InvalidArgument if
    /// `beta` does not have order q-1.
    Field with_primitive(FieldElement beta) const;

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    FieldElement primitive() const noexcept { return beta_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    FieldElement element(std::uint32_t value) const;
    std::vector<FieldElement> nonzero_elements() const;
    std::vector<std::uint32_t> coefficients(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const noexcept {
        if (!add_table_.empty()) return {add_table_[a.value * q_ + b.value]};
        return add_slow(a, b);
    }
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        if (a.value == 0 || b.value == 0) return {0};
        std::uint32_t k = log_[a.value] + log_[b.value];
        if (k >= q_ - 1) k -= q_ - 1;
        return {exp_[k]};
    }
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

    /// Polynomial multiplication mod the modulus (or mod p), without the log
    /// tables. Used to build the tables and by oracles that must not depend
    /// on them.
    FieldElement mul_reference(FieldElement a, FieldElement b) const noexcept;

    /// lambda with beta^lambda == a. Throws LogOfZero.
    std::uint32_t dlog(FieldElement a) const;
    /// beta^k.
    FieldElement exp(std::uint64_t k) const noexcept { return {exp_[k % (q_ - 1)]}; }

    std::string to_string(FieldElement a) const;

private:
    Field() = default;
    void build_tables(FieldElement beta);
    FieldElement add_slow(FieldElement a, FieldElement b) const noexcept;
    FieldElement pow_reference(FieldElement a, std::uint64_t e) const noexcept;
    bool has_full_order(FieldElement g, const std::vector<std::uint32_t>& prime_factors) const noexcept;

    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::vector<std::uint32_t> modulus_;
    FieldElement beta_{};
    std::vector<std::uint32_t> exp_;        // size q-1
    std::vector<std::uint32_t> log_;        // size q, log_[0] unused
    std::vector<std::uint16_t> add_table_;  // q*q when q is small
};

/// Number of mu-subsets of F_q^* (distinct elements) whose product is gamma,
/// by exhaustive enumeration of all C(q-1, mu) subsets in lexicographic order.
/// Products use `mul_reference`, so the count is independent of the dlog
/// table. Throws MuOutOfRange unless 1 <= mu < q-1; LogOfZero for gamma == 0.
BigInt product_peculiarity_bruteforce(const Field& field, std::uint32_t mu, FieldElement gamma);

/// The same count for every gamma at once; index by element value, entry 0
/// is zero.
std::vector<BigInt> product_peculiarity_table(const Field& field, std::uint32_t mu);

}  // namespace gdrs
