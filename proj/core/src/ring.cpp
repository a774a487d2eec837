#include "gdrs/ring.hpp"

#include <algorithm>
#include <numeric>

#include "gdrs/errors.hpp"

namespace gdrs {

RingContext RingContext::make(std::uint32_t R, std::uint32_t mu) {
    if (R < 2 || mu < 1 || mu >= R) {
        throw Error(Errc::MuOutOfRange, "need R >= 2 and 1 <= mu < R, got R=" + std::to_string(R) +
                                            ", mu=" + std::to_string(mu));
    }
    return RingContext(R, mu, std::gcd(R, mu));
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::uint32_t> parent;
};

}  // namespace

OrbitPartition orbit_partition(const RingContext& ctx) {
    const std::uint32_t R = ctx.R();
    const std::uint32_t D = ctx.D();
    OrbitPartition out;
    out.oplus_orbits.resize(D);
    for (std::uint32_t lambda = 0; lambda < R; ++lambda) out.oplus_orbits[lambda % D].push_back(lambda);

    // Translations by u*mu stay inside a residue class mod D, so merging is
    // driven by the units alone: class j goes to class (j*l mod R) mod D.
    DisjointSets sets(D);
    for (std::uint32_t l = 1; l < R; ++l) {
        if (std::gcd(l, R) != 1) continue;
        for (std::uint32_t j = 0; j < D; ++j) {
            const auto image = static_cast<std::uint32_t>((static_cast<std::uint64_t>(j) * l % R) % D);
            sets.unite(j, image);
        }
    }

    std::vector<std::int64_t> index_of_root(D, -1);
    out.orbit_of.assign(R, 0);
    for (std::uint32_t j = 0; j < D; ++j) {
        const auto root = sets.find(j);
        if (index_of_root[root] < 0) {
            index_of_root[root] = static_cast<std::int64_t>(out.full_orbit_classes.size());
            out.full_orbit_classes.emplace_back();
        }
        out.full_orbit_classes[static_cast<std::size_t>(index_of_root[root])].push_back(j);
    }
    out.full_orbits.resize(out.full_orbit_classes.size());
    for (std::uint32_t lambda = 0; lambda < R; ++lambda) {
        const auto idx = static_cast<std::uint32_t>(index_of_root[sets.find(lambda % D)]);
        out.full_orbits[idx].push_back(lambda);
        out.orbit_of[lambda] = idx;
    }
    return out;
}

std::vector<ChVector> enumerate_profiles(const RingContext& ctx, std::uint32_t lambda_mod_D) {
    const std::uint32_t D = ctx.D();
    if (lambda_mod_D >= D) {
        throw Error(Errc::InvalidArgument, "residue must be below D=" + std::to_string(D));
    }
    const std::uint32_t cap = ctx.phi_R();
    std::vector<ChVector> out;
    std::vector<std::uint32_t> cur(D, 0);

    // Backtracking over N_0, N_1, ... with each entry tried from high to low,
    // which yields lexicographically descending output.
    auto rec = [&](auto&& self, std::uint32_t xi, std::uint32_t left, std::uint64_t weighted) -> void {
        if (xi + 1 == D) {
            if (left > cap) return;
            cur[xi] = left;
            if ((weighted + static_cast<std::uint64_t>(xi) * left) % D == lambda_mod_D) {
                out.push_back(ChVector{cur});
            }
            return;
        }
        const std::uint32_t slots_after = D - xi - 1;
        for (std::uint32_t n = std::min(cap, left) + 1; n-- > 0;) {
            if (left - n > static_cast<std::uint64_t>(slots_after) * cap) break;
            cur[xi] = n;
            self(self, xi + 1, left - n, weighted + static_cast<std::uint64_t>(xi) * n);
        }
        cur[xi] = 0;
    };
    rec(rec, 0, ctx.mu(), 0);
    return out;
}

std::vector<ChVector> cyclic_shifts(const ChVector& c) {
    std::vector<ChVector> out;
    const std::size_t D = c.counts.size();
    for (std::size_t delta = 0; delta < std::max<std::size_t>(D, 1); ++delta) {
        ChVector s;
        s.counts.resize(D);
        for (std::size_t i = 0; i < D; ++i) s.counts[(i + delta) % D] = c.counts[i];
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    return out;
}

BigRational n_sigma(const RingContext& ctx, const ChVector& c) {
    if (c.counts.size() != ctx.D()) {
        throw Error(Errc::InvalidArgument, "ch-vector length must equal D");
    }
    BigInt prod = cyclic_shifts(c).size();
    for (auto n : c.counts) prod *= binomial(ctx.phi_R(), n);
    return BigRational(prod, BigInt(ctx.phi_R()));
}

BigInt n_sigma_integral(const RingContext& ctx, const ChVector& c) {
    const BigRational v = n_sigma(ctx, c);
    if (denominator(v) != 1) {
        throw Error(Errc::NonIntegralCount, "N^Sigma is not an integer for this ch-vector");
    }
    return numerator(v);
}

}  // namespace gdrs
