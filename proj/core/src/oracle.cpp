#include "gdrs/oracle.hpp"

#include <algorithm>

#include "gdrs/errors.hpp"
#include "gdrs/parallel.hpp"

namespace gdrs {

namespace {

constexpr std::uint64_t kMaxSyndromeKeys = 1ULL << 26;

void require_budget(const BigInt& cost, const OracleOptions& opts, const std::string& what) {
    if (opts.override_budget || cost <= opts.budget) return;
    throw Error(Errc::BudgetExceeded, what + " needs " + cost.str() + " steps, budget " + std::to_string(opts.budget));
}

/// Advances `idx` to the next w-combination of [0, n); false after the last.
bool next_combination(std::vector<std::uint32_t>& idx, std::uint32_t n) {
    const auto w = static_cast<std::uint32_t>(idx.size());
    std::uint32_t i = w;
    while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::uint32_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

std::uint64_t syndrome_key(const std::vector<FieldElement>& s, std::uint32_t q) {
    std::uint64_t key = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) key = key * q + it->value;
    return key;
}

WeightDistribution to_wd(const std::vector<std::uint64_t>& hist) {
    WeightDistribution wd;
    wd.counts.reserve(hist.size());
    for (auto h : hist) wd.counts.emplace_back(h);
    return wd;
}

}  // namespace

SyndromeBuckets SyndromeBuckets::build(const GdrsCode& code, std::uint32_t weight, const OracleOptions& opts) {
    const std::uint32_t q = code.q();
    const std::uint32_t n = code.n();
    const std::uint32_t r = code.redundancy();
    if (weight == 0 || weight > n) throw Error(Errc::InvalidArgument, "bucket weight must be in 1..n");
    require_budget(binomial(n, weight) * ipow(q - 1, weight) * r, opts, "syndrome bucketing");
    const BigInt keys = ipow(q, r);
    if (keys > kMaxSyndromeKeys) throw Error(Errc::BudgetExceeded, "syndrome space q^(d-1) too large");

    SyndromeBuckets out;
    out.q_ = q;
    out.weight_ = weight;
    out.counts_.assign(static_cast<std::size_t>(keys), 0);

    const Field& f = code.field();
    const auto& H = code.parity_check();
    std::vector<std::uint32_t> support(weight);
    for (std::uint32_t i = 0; i < weight; ++i) support[i] = i;
    std::vector<std::uint32_t> values(weight);
    std::vector<FieldElement> s(r);
    do {
        std::fill(values.begin(), values.end(), 1U);
        while (true) {
            std::fill(s.begin(), s.end(), f.zero());
            for (std::uint32_t i = 0; i < weight; ++i) {
                const FieldElement x{values[i]};
                for (std::uint32_t row = 0; row < r; ++row) s[row] = f.add(s[row], f.mul(H[row][support[i]], x));
            }
            ++out.counts_[syndrome_key(s, q)];
            ++out.vectors_;
            std::uint32_t i = 0;
            while (i < weight && values[i] == q - 1) values[i++] = 1;
            if (i == weight) break;
            ++values[i];
        }
    } while (next_combination(support, n));
    return out;
}

std::uint64_t SyndromeBuckets::count(const std::vector<FieldElement>& syndrome) const {
    return counts_.at(syndrome_key(syndrome, q_));
}

BigInt oracle_bd2(const GdrsCode& code, const CosetLeader2& leader, const OracleOptions& opts) {
    if (code.d() < 5) throw Error(Errc::DistanceTooSmall, "weight-2 cosets need d >= 5");
    const auto buckets = SyndromeBuckets::build(code, code.d() - 2, opts);
    return buckets.count(code.syndrome(leader));
}

std::vector<std::uint32_t> enumerate_codewords(const GdrsCode& code, const OracleOptions& opts) {
    const std::uint32_t q = code.q();
    const std::uint32_t n = code.n();
    const std::uint32_t k = code.k();
    require_budget(ipow(q, k) * n, opts, "codeword enumeration");
    const auto total = static_cast<std::uint64_t>(ipow(q, k));
    const Field& f = code.field();
    const auto& G = code.generator();

    std::vector<std::uint32_t> words(total * n, 0);
    std::vector<std::uint32_t> digits(k, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint32_t* c = &words[t * n];
        for (std::uint32_t i = 0; i < k; ++i) {
            if (digits[i] == 0) continue;
            const FieldElement m{digits[i]};
            for (std::uint32_t j = 0; j < n; ++j) c[j] = f.add(FieldElement{c[j]}, f.mul(m, G[i][j])).value;
        }
        std::uint32_t i = 0;
        while (i < k && digits[i] == q - 1) digits[i++] = 0;
        if (i < k) ++digits[i];
    }
    return words;
}

WeightDistribution oracle_full_coset_wd(const GdrsCode& code, const std::vector<FieldElement>& leader,
                                        const OracleOptions& opts) {
    const std::uint32_t n = code.n();
    if (leader.size() != n) throw Error(Errc::InvalidArgument, "leader length must be n");
    const auto words = enumerate_codewords(code, opts);
    const Field& f = code.field();
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::size_t base = 0; base < words.size(); base += n) {
        std::uint32_t w = 0;
        for (std::uint32_t j = 0; j < n; ++j) w += f.add(FieldElement{words[base + j]}, leader[j]).value != 0;
        ++hist[w];
    }
    return to_wd(hist);
}

WeightDistribution oracle_full_coset_wd(const GdrsCode& code, const CosetLeader2& leader, const OracleOptions& opts) {
    return oracle_full_coset_wd(code, code.expand(leader), opts);
}

RegularityReport check_2_regular(const GdrsCode& code, const OracleOptions& opts) {
    if (code.d() < 5) throw Error(Errc::DistanceTooSmall, "2-regularity needs d >= 5");
    const std::uint32_t q = code.q();
    const std::uint32_t n = code.n();
    const std::uint64_t leaders = 1 + std::uint64_t{n} * (q - 1) + binomial_u64(n, 2) * (q - 1) * (q - 1);
    require_budget(ipow(q, code.k()) * leaders, opts, "2-regularity sweep");

    const auto words = enumerate_codewords(code, opts);
    const std::size_t count = words.size() / n;
    const Field& f = code.field();
    std::vector<std::uint32_t> wt(count, 0);
    for (std::size_t c = 0; c < count; ++c) {
        for (std::uint32_t j = 0; j < n; ++j) wt[c] += words[c * n + j] != 0;
    }

    // One histogram per leader; leaders[i] describes histograms[i].
    struct Leader {
        std::uint32_t weight;
        std::vector<FieldElement> vec;
    };
    std::vector<Leader> all;
    all.push_back({0, std::vector<FieldElement>(n, f.zero())});
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t g = 1; g < q; ++g) {
            std::vector<FieldElement> v(n, f.zero());
            v[j] = FieldElement{g};
            all.push_back({1, std::move(v)});
        }
    }
    for (std::uint32_t j1 = 0; j1 < n; ++j1) {
        for (std::uint32_t j2 = j1 + 1; j2 < n; ++j2) {
            for (std::uint32_t g1 = 1; g1 < q; ++g1) {
                for (std::uint32_t g2 = 1; g2 < q; ++g2) {
                    std::vector<FieldElement> v(n, f.zero());
                    v[j1] = FieldElement{g1};
                    v[j2] = FieldElement{g2};
                    all.push_back({2, std::move(v)});
                }
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> hist(all.size(), std::vector<std::uint64_t>(n + 1, 0));
    parallel_for(all.size(), worker_count(all.size(), opts.jobs), [&](std::size_t li, unsigned) {
        std::vector<std::uint32_t> support;
        const auto& v = all[li].vec;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (v[j].value != 0) support.push_back(j);
        }
        auto& h = hist[li];
        for (std::size_t c = 0; c < count; ++c) {
            std::uint32_t w = wt[c];
            for (auto j : support) {
                const std::uint32_t cj = words[c * n + j];
                w = w - (cj != 0) + (f.add(FieldElement{cj}, v[j]).value != 0);
            }
            ++h[w];
        }
    });

    RegularityReport report;
    report.distinct.resize(3);
    report.cosets_checked = all.size();
    std::vector<std::size_t> first_of_weight(3, all.size());
    for (std::size_t li = 0; li < all.size(); ++li) {
        const auto w = all[li].weight;
        auto wd = to_wd(hist[li]);
        auto& seen = report.distinct[w];
        if (std::find(seen.begin(), seen.end(), wd) == seen.end()) {
            if (!seen.empty() && !report.witness) {
                report.witness.emplace(all[first_of_weight[w]].vec, all[li].vec);
            }
            seen.push_back(std::move(wd));
        }
        if (first_of_weight[w] == all.size()) first_of_weight[w] = li;
    }
    report.regular = std::all_of(report.distinct.begin(), report.distinct.end(),
                                 [](const auto& s) { return s.size() == 1; });
    return report;
}

bool check_mds(const GdrsCode& code) {
    const std::uint32_t n = code.n();
    const std::uint32_t r = code.redundancy();
    const auto& H = code.parity_check();
    std::vector<std::uint32_t> cols(r);
    for (std::uint32_t i = 0; i < r; ++i) cols[i] = i;
    do {
        std::vector<std::vector<FieldElement>> m(r, std::vector<FieldElement>(r));
        for (std::uint32_t row = 0; row < r; ++row) {
            for (std::uint32_t c = 0; c < r; ++c) m[row][c] = H[row][cols[c]];
        }
        if (rank(code.field(), std::move(m)) != r) return false;
    } while (next_combination(cols, n));
    return true;
}

}  // namespace gdrs
