#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gdrs/bigint.hpp"

namespace gdrs {

/// (R, mu) with the derived D = gcd(R, mu), Phi_R = R/D, Phi_mu = mu/D.
class RingContext {
public:
    /// Throws MuOutOfRange unless R >= 2 and 1 <= mu < R.
    static RingContext make(std::uint32_t R, std::uint32_t mu);

    std::uint32_t R() const noexcept { return R_; }
    std::uint32_t mu() const noexcept { return mu_; }
    std::uint32_t D() const noexcept { return D_; }
    std::uint32_t phi_R() const noexcept { return R_ / D_; }
    std::uint32_t phi_mu() const noexcept { return mu_ / D_; }
    bool coprime() const noexcept { return D_ == 1; }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    RingContext(std::uint32_t R, std::uint32_t mu, std::uint32_t D) : R_(R), mu_(mu), D_(D) {}

    std::uint32_t R_;
    std::uint32_t mu_;
    std::uint32_t D_;
};

/// Orbits of Z_R under lambda -> lambda + u*mu (the translation subgroup) and
/// under the full affine group lambda -> lambda*l + u*mu, l a unit.
struct OrbitPartition {
    /// oplus_orbits[j] = { lambda : lambda == j (mod D) }, ascending.
    std::vector<std::vector<std::uint32_t>> oplus_orbits;
    /// Full orbits, each ascending, ordered by smallest element.
    std::vector<std::vector<std::uint32_t>> full_orbits;
    /// For each full orbit, the residues j mod D it is the union of.
    std::vector<std::vector<std::uint32_t>> full_orbit_classes;
    /// orbit_of[lambda] = index into full_orbits.
    std::vector<std::uint32_t> orbit_of;
};

OrbitPartition orbit_partition(const RingContext& ctx);

/// Residue-class profile (N_0, ..., N_{D-1}) of a mu-subset of Z_R.
struct ChVector {
    std::vector<std::uint32_t> counts;

    friend auto operator<=>(const ChVector&, const ChVector&) = default;
};

/// All profiles with sum mu, entries at most Phi_R, and
/// sum xi*N_xi == lambda_mod_D (mod D); lexicographically descending.
std::vector<ChVector> enumerate_profiles(const RingContext& ctx, std::uint32_t lambda_mod_D);

/// Distinct right cyclic shifts of c, starting with c itself; the size is the
/// multiplicity m.
std::vector<ChVector> cyclic_shifts(const ChVector& c);

/// (m / Phi_R) * prod_xi C(Phi_R, N_xi), exact. Purely formal: the value
/// counts the subsets of one lambda whose profile is a shift of c only under
/// the prime-D two-orbit hypotheses.
BigRational n_sigma(const RingContext& ctx, const ChVector& c);

/// n_sigma, asserting integrality. Throws NonIntegralCount.
BigInt n_sigma_integral(const RingContext& ctx, const ChVector& c);

}  // namespace gdrs
