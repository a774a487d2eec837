#include "gdrs/code.hpp"

#include <numeric>

#include "gdrs/errors.hpp"

namespace gdrs {

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

CosetLeader2 CosetLeader2::make(std::uint32_t j1, std::uint32_t j2, FieldElement gamma1, FieldElement gamma2) {
    if (j1 == 0 || j2 == 0 || j1 == j2) {
        throw Error(Errc::InvalidArgument, "leader positions must be distinct and 1-based");
    }
    if (gamma1.value == 0 || gamma2.value == 0) {
        throw Error(Errc::InvalidArgument, "leader entries must be nonzero");
    }
    if (j1 > j2) return CosetLeader2{j2, j1, gamma2, gamma1};
    return CosetLeader2{j1, j2, gamma1, gamma2};
}

namespace {

using Matrix = std::vector<std::vector<FieldElement>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].value == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const FieldElement inv = f.inv(rows[r][c]);
        for (auto& e : rows[r]) e = f.mul(e, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].value == 0) continue;
            const FieldElement factor = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void check_length(const GdrsCode& code, std::size_t len) {
    if (len != code.n()) throw Error(Errc::InvalidArgument, "vector length must be n=" + std::to_string(code.n()));
}

void check_leader(const GdrsCode& code, const CosetLeader2& leader) {
    if (leader.j1 == 0 || leader.j1 >= leader.j2 || leader.j2 > code.n()) {
        throw Error(Errc::InvalidArgument, "leader positions must satisfy 1 <= j1 < j2 <= n");
    }
    if (leader.gamma1.value == 0 || leader.gamma2.value == 0 || leader.gamma1.value >= code.q() ||
        leader.gamma2.value >= code.q()) {
        throw Error(Errc::InvalidArgument, "leader entries must be nonzero field elements");
    }
}

void check_weight2_distance(std::uint32_t d) {
    if (d < 5) throw Error(Errc::DistanceTooSmall, "weight-2 cosets need d >= 5, got d=" + std::to_string(d));
}

}  // namespace

std::size_t rank(const Field& field, std::vector<std::vector<FieldElement>> rows) {
    return row_reduce(field, rows).size();
}

GdrsCode GdrsCode::make(Field field, std::uint32_t d) {
    const std::uint32_t q = field.order();
    if (d < 3 || d > q + 1) {
        throw Error(Errc::InvalidArgument, "need 3 <= d <= q+1, got q=" + std::to_string(q) + ", d=" + std::to_string(d));
    }
    GdrsCode code(std::move(field), d);
    const Field& f = code.field_;
    const std::uint32_t n = q + 1;
    const std::uint32_t rows = d - 1;

    code.H_.assign(rows, std::vector<FieldElement>(n, f.zero()));
    for (std::uint32_t j = 0; j + 1 < q; ++j) {
        const FieldElement m = f.exp(j);
        FieldElement power = f.one();
        for (std::uint32_t r = 0; r < rows; ++r) {
            code.H_[r][j] = power;
            power = f.mul(power, m);
        }
    }
    code.H_[0][q - 1] = f.one();
    code.H_[rows - 1][q] = f.one();

    Matrix reduced = code.H_;
    const auto pivots = row_reduce(f, reduced);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::uint32_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> g(n, f.zero());
        g[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) g[pivots[i]] = f.neg(reduced[i][free]);
        code.G_.push_back(std::move(g));
    }
    return code;
}

std::vector<FieldElement> GdrsCode::syndrome(const std::vector<FieldElement>& x) const {
    check_length(*this, x.size());
    std::vector<FieldElement> s(redundancy(), field_.zero());
    for (std::uint32_t j = 0; j < n(); ++j) {
        if (x[j].value == 0) continue;
        for (std::uint32_t r = 0; r < redundancy(); ++r) s[r] = field_.add(s[r], field_.mul(H_[r][j], x[j]));
    }
    return s;
}

std::vector<FieldElement> GdrsCode::expand(const CosetLeader2& leader) const {
    check_leader(*this, leader);
    std::vector<FieldElement> v(n(), field_.zero());
    v[leader.j1 - 1] = leader.gamma1;
    v[leader.j2 - 1] = leader.gamma2;
    return v;
}

std::vector<FieldElement> GdrsCode::syndrome(const CosetLeader2& leader) const { return syndrome(expand(leader)); }

WeightDistribution mds_code_wd(std::uint32_t n, std::uint32_t d, std::uint32_t q) {
    if (d < 1 || d > n) throw Error(Errc::InvalidArgument, "need 1 <= d <= n");
    WeightDistribution wd{std::vector<BigInt>(n + 1, 0)};
    wd.counts[0] = 1;
    for (std::int64_t w = d; w <= n; ++w) {
        BigInt s = 0;
        for (std::int64_t j = 0; j <= w - d; ++j) {
            const BigInt term = binomial(w, j) * (ipow(q, static_cast<std::uint32_t>(w - d + 1 - j)) - 1);
            s += sign_pow(j) * term;
        }
        wd.counts[static_cast<std::size_t>(w)] = binomial(n, w) * s;
    }
    return wd;
}

BigInt omega(std::int64_t w, std::int64_t v, std::int64_t n, std::int64_t d) {
    return sign_pow(w - d) * binomial(n - v, w - v) * binomial(w - 1 - v, d - 2 - v);
}

WeightDistribution bonneau_extend(std::uint32_t n, std::uint32_t d, std::uint32_t q,
                                  const std::vector<BigInt>& prefix) {
    if (d < 2 || d > n) throw Error(Errc::InvalidArgument, "need 2 <= d <= n");
    if (prefix.size() != d - 1) {
        throw Error(Errc::InvalidArgument, "prefix must hold B_0..B_{d-2}, " + std::to_string(d - 1) + " entries");
    }
    const auto A = mds_code_wd(n, d, q);
    WeightDistribution wd{std::vector<BigInt>(n + 1, 0)};
    std::copy(prefix.begin(), prefix.end(), wd.counts.begin());
    for (std::int64_t w = d - 1; w <= n; ++w) {
        BigInt b = A.counts[static_cast<std::size_t>(w)] - omega(w, 0, n, d);
        for (std::int64_t v = 0; v + 2 <= d; ++v) {
            if (prefix[static_cast<std::size_t>(v)] != 0) b += omega(w, v, n, d) * prefix[static_cast<std::size_t>(v)];
        }
        wd.counts[static_cast<std::size_t>(w)] = std::move(b);
    }
    for (std::size_t w = 0; w < wd.counts.size(); ++w) {
        if (wd.counts[w] < 0) {
            throw Error(Errc::MassMismatch, "negative count B_" + std::to_string(w) + "=" + wd.counts[w].str());
        }
    }
    const BigInt expected = ipow(q, n + 1 - d);
    if (wd.total() != expected) {
        throw Error(Errc::MassMismatch, "mass " + wd.total().str() + " != q^k = " + expected.str());
    }
    return wd;
}

WeightDistribution coset_wd_weight1(const GdrsCode& code) {
    std::vector<BigInt> prefix(code.d() - 1, 0);
    prefix[1] = 1;
    return bonneau_extend(code.n(), code.d(), code.q(), prefix);
}

BigInt coset_bd2(const GdrsCode& code, const CosetLeader2& leader) {
    check_weight2_distance(code.d());
    check_leader(code, leader);
    const Field& f = code.field();
    const std::uint32_t lambda = f.dlog(f.neg(f.div(leader.gamma2, leader.gamma1)));
    return sum_peculiarity_profile(RingContext::make(code.q() - 1, code.d() - 2), lambda);
}

WeightDistribution coset_wd_weight2_from_bd2(std::uint32_t q, std::uint32_t d, const BigInt& bd2) {
    check_weight2_distance(d);
    std::vector<BigInt> prefix(d - 1, 0);
    prefix[2] = 1;
    prefix[d - 2] = bd2;
    return bonneau_extend(q + 1, d, q, prefix);
}

WeightDistribution coset_wd_weight2(const GdrsCode& code, const CosetLeader2& leader) {
    return coset_wd_weight2_from_bd2(code.q(), code.d(), coset_bd2(code, leader));
}

WeightDistribution coset_wd_weight2_uniform(const GdrsCode& code) {
    check_weight2_distance(code.d());
    const std::uint32_t R = code.q() - 1;
    const std::uint32_t mu = code.d() - 2;
    if (std::gcd(R, mu) != 1) {
        throw Error(Errc::NotUniformCase, "gcd(q-1, d-2) = " + std::to_string(std::gcd(R, mu)) + " != 1");
    }
    return coset_wd_weight2_from_bd2(code.q(), code.d(), binomial(R, mu) / R);
}

bool necessary_condition(std::uint32_t q, std::uint32_t d) {
    return binomial(q - 1, d - 2) % (q - 1) == 0;
}

BigInt bd2_total(std::uint32_t q, std::uint32_t d) {
    const std::uint32_t n = q + 1;
    return BigInt(q - 1) * binomial(n, 2) * binomial(n - 2, d - 2);
}

bool symmetry_residual(const WeightDistribution& a, const WeightDistribution& b, std::uint32_t n, std::uint32_t d) {
    if (a.counts.size() != n + 1 || b.counts.size() != n + 1) {
        throw Error(Errc::InvalidArgument, "weight distributions must have n+1 entries");
    }
    const int s = sign_pow(static_cast<std::int64_t>(n) + d);
    for (std::uint32_t w = d - 1; w <= n; ++w) {
        const std::uint32_t mirror = n + d - 2 - w;
        if (s * a.counts[w] - a.counts[mirror] != s * b.counts[w] - b.counts[mirror]) return false;
    }
    return true;
}

}  // namespace gdrs
