#include "gdrs/peculiarity.hpp"

#include <algorithm>
#include <numeric>

#include "gdrs/field.hpp"
#include "gdrs/parallel.hpp"

namespace gdrs {

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::BruteForce: return "brute_force";
        case Method::ProfileEngine: return "profile_engine";
        case Method::ClosedForm: return "closed_form";
    }
    return "unknown";
}

std::string_view status_name(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Warn: return "WARN";
        case CheckStatus::Untested: return "UNTESTED";
    }
    return "UNKNOWN";
}

BigInt PeculiarityTable::total() const {
    BigInt s = 0;
    for (const auto& v : values) s += v;
    return s;
}

BigInt PeculiarityTable::delta(std::uint32_t a, std::uint32_t b) const { return values.at(a) - values.at(b); }

RouteMismatch::RouteMismatch(std::uint32_t lambda, Method a, BigInt value_a, Method b, BigInt value_b)
    : Error(Errc::RouteMismatch, "lambda=" + std::to_string(lambda) + ": " + std::string(method_name(a)) +
                                     "=" + value_a.str() + " vs " + std::string(method_name(b)) + "=" +
                                     value_b.str()),
      lambda_(lambda),
      route_a_(a),
      route_b_(b),
      value_a_(std::move(value_a)),
      value_b_(std::move(value_b)) {}

// --- brute force ---------------------------------------------------------------

bool brute_force_within_budget(std::uint32_t R, std::uint32_t mu, const BruteForceOptions& opts) {
    return opts.override_budget || binomial_u64(R, mu) <= opts.budget;
}

PeculiarityTable sum_peculiarity_table_bruteforce(std::uint32_t R, std::uint32_t mu,
                                                  const BruteForceOptions& opts) {
    const auto ctx = RingContext::make(R, mu);
    if (!brute_force_within_budget(R, mu, opts)) {
        throw Error(Errc::BudgetExceeded, "C(" + std::to_string(R) + "," + std::to_string(mu) +
                                              ") exceeds brute-force budget " + std::to_string(opts.budget));
    }

    // Task i enumerates the combinations whose smallest element is i.
    const std::size_t tasks = R - mu + 1;
    const unsigned workers = worker_count(tasks, opts.jobs);
    std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(R, 0));

    parallel_for(tasks, workers, [&](std::size_t task, unsigned worker) {
        auto& acc = counts[worker];
        const auto first = static_cast<std::uint32_t>(task);
        if (mu == 1) {
            ++acc[first];
            return;
        }
        // pick[k] for k in [1, mu); sum[k] = first + pick[1] + ... + pick[k-1] (mod R).
        std::vector<std::uint32_t> pick(mu, 0);
        std::vector<std::uint32_t> sum(mu + 1, 0);
        pick[0] = first;
        sum[1] = first;
        std::uint32_t depth = 1;
        pick[1] = first + 1;
        while (depth >= 1) {
            const std::uint32_t remaining = mu - depth - 1;
            if (pick[depth] + remaining >= R) {
                --depth;
                if (depth == 0) break;
                ++pick[depth];
                continue;
            }
            if (depth + 1 == mu) {
                // Innermost level: sweep the last element directly.
                std::uint32_t s = sum[depth] + pick[depth];
                if (s >= R) s -= R;
                for (std::uint32_t x = pick[depth]; x < R; ++x) {
                    ++acc[s];
                    if (++s == R) s = 0;
                }
                pick[depth] = R;
                continue;
            }
            std::uint32_t s = sum[depth] + pick[depth];
            if (s >= R) s -= R;
            sum[depth + 1] = s;
            pick[depth + 1] = pick[depth] + 1;
            ++depth;
        }
    });

    PeculiarityTable table{ctx, std::vector<BigInt>(R), Method::BruteForce, std::nullopt};
    for (std::uint32_t lambda = 0; lambda < R; ++lambda) {
        std::uint64_t total = 0;
        for (const auto& acc : counts) total += acc[lambda];
        table.values[lambda] = total;
    }
    return table;
}

BigInt sum_peculiarity_bruteforce(std::uint32_t R, std::uint32_t mu, std::uint32_t lambda,
                                  const BruteForceOptions& opts) {
    auto table = sum_peculiarity_table_bruteforce(R, mu, opts);
    return table.values.at(lambda % R);
}

// --- profile engine ------------------------------------------------------------

namespace {

/// sum over profiles of residue class j of prod C(Phi_R, N_xi); the number of
/// mu-subsets whose sum is == j (mod D).
BigInt class_mass(const RingContext& ctx, std::uint32_t j) {
    BigInt total = 0;
    for (const auto& c : enumerate_profiles(ctx, j)) {
        BigInt prod = 1;
        for (auto n : c.counts) prod *= binomial(ctx.phi_R(), n);
        total += prod;
    }
    return total;
}

BigInt exact_div(const BigInt& num, const BigInt& den, Errc errc, const char* what) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw Error(errc, what);
    return q;
}

}  // namespace

BigInt sum_peculiarity_profile(const RingContext& ctx, std::uint32_t lambda) {
    return exact_div(class_mass(ctx, lambda % ctx.R() % ctx.D()), ctx.phi_R(), Errc::NonIntegralResult,
                     "profile mass not divisible by Phi_R");
}

PeculiarityTable sum_peculiarity_profile_table(const RingContext& ctx) {
    std::vector<BigInt> per_class(ctx.D());
    for (std::uint32_t j = 0; j < ctx.D(); ++j) {
        per_class[j] = exact_div(class_mass(ctx, j), ctx.phi_R(), Errc::NonIntegralResult,
                                 "profile mass not divisible by Phi_R");
    }
    PeculiarityTable table{ctx, std::vector<BigInt>(ctx.R()), Method::ProfileEngine, std::nullopt};
    for (std::uint32_t lambda = 0; lambda < ctx.R(); ++lambda) table.values[lambda] = per_class[lambda % ctx.D()];
    return table;
}

// --- closed forms --------------------------------------------------------------

namespace {

BigInt integral(const BigRational& v, const std::string& tag) {
    if (denominator(v) != 1) throw Error(Errc::NonIntegralResult, "closed form " + tag + " is not integral");
    return numerator(v);
}

BigRational frac(const BigInt& num, std::int64_t den) { return BigRational(num, BigInt(den)); }

}  // namespace

std::optional<PeculiarityTable> sum_peculiarity_closed_form(const RingContext& ctx) {
    const std::uint32_t R = ctx.R();
    const std::uint32_t mu = ctx.mu();
    const std::uint32_t D = ctx.D();
    const BigInt C = binomial(R - 1, mu - 1);
    const auto r = static_cast<std::int64_t>(R);

    std::string tag;
    // Values on the classes lambda == 0 (mod D), lambda != 0 (mod D); the
    // three-orbit case also fills lambda == 2 (mod 4).
    BigRational p0;
    BigRational p1;
    std::optional<BigRational> p2;

    if (D == 1) {
        tag = "coprime";
        p0 = p1 = frac(C, mu);
    } else if (mu == 3 && D == 3) {
        tag = "mu3-D3";
        p1 = frac(C - 1, 3);
        p0 = p1 + 1;
    } else if (mu == 4 && D == 2) {
        tag = "mu4-D2";
        p0 = (BigRational(C) + frac(r - 2, 2)) / 4;
        p1 = (BigRational(C) - frac(r - 2, 2)) / 4;
    } else if (mu == 4 && D == 4) {
        tag = "mu4-D4";
        p0 = (BigRational(C) + frac(r - 6, 2)) / 4;
        p1 = (BigRational(C) - frac(r - 2, 2)) / 4;
        p2 = (BigRational(C) + frac(r + 2, 2)) / 4;
    } else if (mu == 5 && D == 5) {
        tag = "mu5-D5";
        p1 = frac(C - 1, 5);
        p0 = p1 + 1;
    } else if (mu == 6 && D == 2) {
        tag = "mu6-D2";
        const BigInt b = binomial(r / 2 - 1, 2);
        p0 = frac(C - b, 6);
        p1 = frac(C + b, 6);
    } else if (mu == 6 && D == 3) {
        tag = "mu6-D3";
        p0 = (frac(C, 2) + frac(r - 3, 3)) / 3;
        p1 = (BigRational(C) - frac(r - 3, 3)) / 6;
    } else if (mu == 7 && D == 7) {
        tag = "mu7-D7";
        p1 = frac(C - 1, 7);
        p0 = p1 + 1;
    } else if (mu == 8 && D == 2) {
        tag = "mu8-D2";
        const BigInt b = binomial(r / 2 - 1, 3);
        p0 = frac(C + b, 8);
        p1 = frac(C - b, 8);
    } else if (mu == 9 && D == 3) {
        tag = "mu9-D3";
        const BigInt b = binomial(r / 3 - 1, 2);
        p0 = frac(C + 2 * b, 9);
        p1 = frac(C - b, 9);
    } else {
        return std::nullopt;
    }

    const BigInt v0 = integral(p0, tag);
    const BigInt v1 = integral(p1, tag);
    const std::optional<BigInt> v2 = p2 ? std::optional<BigInt>(integral(*p2, tag)) : std::nullopt;

    PeculiarityTable table{ctx, std::vector<BigInt>(R), Method::ClosedForm, tag};
    for (std::uint32_t lambda = 0; lambda < R; ++lambda) {
        if (v2 && lambda % 4 == 2) {
            table.values[lambda] = *v2;
        } else {
            table.values[lambda] = (lambda % D == 0) ? v0 : v1;
        }
    }
    return table;
}

// --- reconciliation ------------------------------------------------------------

namespace {

void require_equal(const PeculiarityTable& a, const PeculiarityTable& b) {
    for (std::uint32_t lambda = 0; lambda < a.values.size(); ++lambda) {
        if (a.values[lambda] != b.values[lambda]) {
            throw RouteMismatch(lambda, a.method, a.values[lambda], b.method, b.values[lambda]);
        }
    }
}

}  // namespace

ReconcileReport reconcile(std::uint32_t R, std::uint32_t mu, const BruteForceOptions& opts) {
    const auto ctx = RingContext::make(R, mu);
    ReconcileReport report{sum_peculiarity_profile_table(ctx), {Method::ProfileEngine}, 0, std::nullopt};
    if (brute_force_within_budget(R, mu, opts)) {
        const auto brute = sum_peculiarity_table_bruteforce(R, mu, opts);
        require_equal(brute, report.table);
        report.routes.push_back(Method::BruteForce);
    }
    if (auto closed = sum_peculiarity_closed_form(ctx)) {
        require_equal(*closed, report.table);
        report.routes.push_back(Method::ClosedForm);
        report.table.closed_form_case = closed->closed_form_case;
    }
    report.delta01 = report.table.delta(0, 1);
    if (R > 2) report.delta02 = report.table.delta(0, 2);
    return report;
}

// --- conjectures ---------------------------------------------------------------

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

/// Profile-engine table, confirmed by brute force when affordable.
/// Returns nullopt (and sets `note`) on a route disagreement.
std::optional<PeculiarityTable> checked_table(std::uint32_t R, std::uint32_t mu, const BruteForceOptions& opts,
                                              std::string& note) {
    try {
        auto r = reconcile(R, mu, opts);
        note = "routes:";
        for (auto m : r.routes) note += " " + std::string(method_name(m));
        return std::move(r.table);
    } catch (const RouteMismatch& e) {
        note = e.what();
        return std::nullopt;
    }
}

std::string two_values(const BigInt& a, const BigInt& b) { return a.str() + "/" + b.str(); }

/// Shared check of P(0) = (C-1)/mu + 1, P(1) = (C-1)/mu on the two classes
/// lambda == 0 and lambda != 0 (mod mu).
ConjectureResult check_two_valued(const std::string& name, std::uint32_t R, std::uint32_t mu, bool proved,
                                  const BruteForceOptions& opts) {
    ConjectureResult res{name, R, mu, CheckStatus::Untested, {}, {}, {}};
    const BigInt C = binomial(R - 1, mu - 1);
    const BigInt expect1 = (C - 1) / mu;
    const BigInt expect0 = expect1 + 1;
    res.expected = "P(0)/P(1)=" + two_values(expect0, expect1) + " Delta01=1";
    if ((C - 1) % mu != 0) {
        res.status = proved ? CheckStatus::Fail : CheckStatus::Warn;
        res.actual = "(C(R-1,mu-1)-1)/mu not integral";
        return res;
    }
    auto table = checked_table(R, mu, opts, res.note);
    if (!table) {
        res.status = CheckStatus::Fail;
        return res;
    }
    bool ok = true;
    for (std::uint32_t lambda = 0; lambda < R; ++lambda) {
        ok = ok && table->values[lambda] == (lambda % mu == 0 ? expect0 : expect1);
    }
    res.actual = "P(0)/P(1)=" + two_values(table->values[0], table->values[1]) +
                 " Delta01=" + table->delta(0, 1).str();
    res.status = ok ? CheckStatus::Pass : (proved ? CheckStatus::Fail : CheckStatus::Warn);
    return res;
}

}  // namespace

std::vector<ConjectureResult> check_uniformity_conjecture(std::uint32_t R_min, std::uint32_t R_max,
                                                          const BruteForceOptions& opts) {
    std::vector<ConjectureResult> out;
    for (std::uint32_t R = std::max<std::uint32_t>(R_min, 3); R <= R_max; ++R) {
        for (std::uint32_t mu = 2; mu < R; ++mu) {
            ConjectureResult res{"uniform-iff-coprime", R, mu, CheckStatus::Untested, {}, {}, {}};
            const bool coprime = std::gcd(R, mu) == 1;
            res.expected = coprime ? "uniform" : "non-uniform";
            auto table = checked_table(R, mu, opts, res.note);
            if (!table) {
                res.status = CheckStatus::Fail;
                out.push_back(std::move(res));
                continue;
            }
            const bool uniform = std::all_of(table->values.begin(), table->values.end(),
                                             [&](const BigInt& v) { return v == table->values[0]; });
            res.actual = uniform ? "uniform" : "non-uniform";
            if (uniform == coprime) {
                res.status = CheckStatus::Pass;
            } else if (coprime) {
                res.status = CheckStatus::Fail;  // contradicts the coprime theorem
            } else {
                res.status = CheckStatus::Warn;  // counterexample to the converse
            }
            out.push_back(std::move(res));
        }
    }
    return out;
}

std::vector<ConjectureResult> check_prime_mu_conjecture(std::uint32_t R_max, const std::vector<std::uint32_t>& mus,
                                                        const BruteForceOptions& opts) {
    std::vector<ConjectureResult> out;
    for (auto mu : mus) {
        if (!is_prime(mu) || mu < 11) {
            throw Error(Errc::InvalidArgument, "prime-mu conjecture needs prime mu >= 11");
        }
        for (std::uint32_t R = 2 * mu; R <= R_max; R += mu) {
            out.push_back(check_two_valued("prime-mu-delta-one", R, mu, false, opts));
        }
    }
    return out;
}

std::vector<ConjectureResult> check_d_p2_conjecture(std::uint32_t q_max, const BruteForceOptions& opts) {
    std::vector<ConjectureResult> out;
    for (std::uint32_t p = 3; p * 2 + 1 <= q_max; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint32_t t = 2; p * t + 1 <= q_max; ++t) {
            const std::uint32_t q = p * t + 1;
            if (!prime_power(q)) continue;
            auto res = check_two_valued("d-equals-p-plus-2", q - 1, p, p <= 7, opts);
            res.note = "q=" + std::to_string(q) + " d=" + std::to_string(p + 2) + "; " + res.note;
            out.push_back(std::move(res));
        }
    }
    return out;
}

std::vector<ConjectureResult> verify_conjectures(std::uint32_t R_min, std::uint32_t R_max,
                                                 const std::vector<std::uint32_t>& prime_mus, std::uint32_t q_max,
                                                 const BruteForceOptions& opts) {
    auto out = check_uniformity_conjecture(R_min, R_max, opts);
    for (auto& r : check_prime_mu_conjecture(R_max, prime_mus, opts)) out.push_back(std::move(r));
    for (auto& r : check_d_p2_conjecture(q_max, opts)) out.push_back(std::move(r));
    return out;
}

}  // namespace gdrs
