#include "gdrs/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gdrs/code.hpp"
#include "gdrs/errors.hpp"

namespace gdrs {

namespace {

BigRational binom_r(std::int64_t n, std::int64_t k) { return BigRational(binomial(n, k)); }

/// (C - 1)/p + 1 on class 0, (C - 1)/p elsewhere, C = C(q-2, p-1).
BigRational prime_two_valued(std::uint32_t q, std::uint32_t p, std::uint32_t cls) {
    const BigRational base = (binom_r(q - 2, p - 1) - 1) / p;
    return cls == 0 ? BigRational(base + 1) : base;
}

std::uint32_t mod2(std::uint32_t l) { return l % 2 == 0 ? 0 : 1; }
std::uint32_t mod3(std::uint32_t l) { return l % 3 == 0 ? 0 : 1; }
std::uint32_t mod5(std::uint32_t l) { return l % 5 == 0 ? 0 : 1; }
std::uint32_t mod7(std::uint32_t l) { return l % 7 == 0 ? 0 : 1; }

std::string rational_str(const BigRational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

template <class T>
std::string join(const std::set<T>& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ",";
        out += v.str();
    }
    return out;
}

Check make_check(std::string name, bool ok, std::string expected, std::string actual, std::string note = {}) {
    return Check{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected), std::move(actual),
                 std::move(note)};
}

std::string wd_str(const WeightDistribution& wd) {
    std::string out;
    for (const auto& c : wd.counts) {
        if (!out.empty()) out += " ";
        out += c.str();
    }
    return out;
}

std::string tag(std::uint32_t q, std::uint32_t d) { return "q=" + std::to_string(q) + " d=" + std::to_string(d); }

}  // namespace

const std::vector<Table4Row>& table4_rows() {
    static const std::vector<Table4Row> rows = {
        {5, "3t+1>=7", [](std::uint32_t q) { return q % 3 == 1 && q >= 7; }, 2, mod3,
         [](std::uint32_t q, std::uint32_t c) -> BigRational { return prime_two_valued(q, 3, c); }},
        {6, "4t+3>=7", [](std::uint32_t q) { return q % 4 == 3 && q >= 7; }, 2, mod2,
         [](std::uint32_t q, std::uint32_t c) -> BigRational {
             const BigRational s = BigRational(q - 3, 2);
             return (binom_r(q - 2, 3) + (c == 0 ? s : BigRational(-s))) / 4;
         }},
        {7, "5t+1>=11", [](std::uint32_t q) { return q % 5 == 1 && q >= 11; }, 2, mod5,
         [](std::uint32_t q, std::uint32_t c) -> BigRational { return prime_two_valued(q, 5, c); }},
        {8, "6t+3>=9, 6t+5>=11", [](std::uint32_t q) { return (q % 6 == 3 && q >= 9) || (q % 6 == 5 && q >= 11); },
         2, mod2,
         [](std::uint32_t q, std::uint32_t c) -> BigRational {
             const BigRational b = binom_r((q - 3) / 2, 2);
             return (binom_r(q - 2, 5) + (c == 0 ? BigRational(-b) : b)) / 6;
         }},
        {8, "6t+4>=10", [](std::uint32_t q) { return q % 6 == 4 && q >= 10; }, 2, mod3,
         [](std::uint32_t q, std::uint32_t c) -> BigRational {
             const BigRational s = BigRational(q - 4, 3);
             if (c == 0) return (binom_r(q - 2, 5) / 2 + s) / 3;
             return (binom_r(q - 2, 5) - s) / 6;
         }},
        {9, "7t+1>=29", [](std::uint32_t q) { return q % 7 == 1 && q >= 29; }, 2, mod7,
         [](std::uint32_t q, std::uint32_t c) -> BigRational { return prime_two_valued(q, 7, c); }},
        {10, "4t+7>=11", [](std::uint32_t q) { return q % 4 == 3 && q >= 11; }, 2, mod2,
         [](std::uint32_t q, std::uint32_t c) -> BigRational {
             const BigRational b = binom_r((q - 3) / 2, 3);
             return (binom_r(q - 2, 7) + (c == 0 ? b : BigRational(-b))) / 8;
         }},
        {11, "9t+4>=13, 9t+7>=16",
         [](std::uint32_t q) { return (q % 9 == 4 && q >= 13) || (q % 9 == 7 && q >= 16); }, 2, mod3,
         [](std::uint32_t q, std::uint32_t c) -> BigRational {
             const BigRational b = binom_r((q - 4) / 3, 2);
             return (binom_r(q - 2, 8) + (c == 0 ? BigRational(2 * b) : BigRational(-b))) / 9;
         }},
        {6, "4t+1>=9", [](std::uint32_t q) { return q % 4 == 1 && q >= 9; }, 3,
         [](std::uint32_t l) -> std::uint32_t { return l % 2 == 1 ? 1 : (l % 4 == 0 ? 0 : 2); },
         [](std::uint32_t q, std::uint32_t c) -> BigRational {
             const BigRational C = binom_r(q - 2, 3);
             if (c == 0) return (C + BigRational(q - 7, 2)) / 4;
             if (c == 1) return (C - BigRational(q - 3, 2)) / 4;
             return (C + BigRational(q + 1, 2)) / 4;
         }},
    };
    return rows;
}

std::vector<Check> verify_table4(std::uint32_t q_max) {
    std::vector<Check> out;
    for (const auto& row : table4_rows()) {
        for (std::uint32_t q = 5; q <= q_max; ++q) {
            if (!prime_power(q) || !row.admits(q)) continue;
            const auto ctx = RingContext::make(q - 1, row.d - 2);
            const auto table = sum_peculiarity_profile_table(ctx);
            const auto code = GdrsCode::make(Field::make(q), row.d);
            const Field& f = code.field();
            for (std::uint32_t cls = 0; cls < row.classes; ++cls) {
                const BigRational expected = row.value(q, cls);
                std::set<BigInt> profile_values;
                std::set<BigInt> coset_values;
                for (std::uint32_t lambda = 0; lambda < q - 1; ++lambda) {
                    if (row.class_of(lambda) != cls) continue;
                    profile_values.insert(table.values[lambda]);
                    // gamma1 = 1, gamma2 = -beta^lambda gives dlog(-gamma2/gamma1) = lambda.
                    const auto leader = CosetLeader2::make(1, 2, f.one(), f.neg(f.exp(lambda)));
                    coset_values.insert(coset_bd2(code, leader));
                }
                const bool ok = denominator(expected) == 1 && profile_values.size() == 1 &&
                                coset_values == profile_values && *profile_values.begin() == numerator(expected);
                out.push_back(make_check("table4 " + tag(q, row.d) + " class=" + std::to_string(cls), ok,
                                         rational_str(expected),
                                         "profile={" + join(profile_values) + "} coset={" + join(coset_values) + "}",
                                         "row " + row.family));
            }
        }
    }
    return out;
}

std::vector<Check> verify_oracle(const SuiteOptions& opts) {
    std::vector<Check> out;
    const std::uint32_t d = opts.oracle_d;
    for (auto q : opts.oracle_qs) {
        const auto code = GdrsCode::make(Field::make(q), d);
        const Field& f = code.field();
        const std::uint32_t n = code.n();
        const std::string t = tag(q, d);

        if (q <= 9) {
            const bool mds = check_mds(code);
            out.push_back(make_check("mds " + t, mds, "true", mds ? "true" : "false"));
        }

        const auto code_wd = oracle_full_coset_wd(code, std::vector<FieldElement>(n, f.zero()), opts.oracle);
        const auto A = mds_code_wd(n, d, q);
        out.push_back(make_check("code-wd " + t, code_wd == A, wd_str(A), wd_str(code_wd)));

        const auto w1 = coset_wd_weight1(code);
        bool w1_ok = true;
        std::string w1_actual = wd_str(w1);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::vector<FieldElement> v(n, f.zero());
            v[j] = f.exp(j);
            const auto got = oracle_full_coset_wd(code, v, opts.oracle);
            if (got != w1) {
                w1_ok = false;
                w1_actual = "position " + std::to_string(j + 1) + ": " + wd_str(got);
                break;
            }
        }
        out.push_back(make_check("weight1 " + t, w1_ok, wd_str(w1), w1_actual));

        const auto buckets = SyndromeBuckets::build(code, d - 2, opts.oracle);
        std::vector<WeightDistribution> class_wds;
        BigInt formula_sum = 0;
        std::uint64_t bucket_sum = 0;
        bool positions_ok = true;
        std::string positions_note;
        for (std::uint32_t g2 = 1; g2 < q; ++g2) {
            const auto leader = CosetLeader2::make(1, 2, f.one(), FieldElement{g2});
            const auto formula = coset_wd_weight2(code, leader);
            const auto enumerated = oracle_full_coset_wd(code, leader, opts.oracle);
            const std::string lt = t + " gamma2=" + f.to_string(leader.gamma2);
            out.push_back(make_check("weight2 " + lt, formula == enumerated, wd_str(formula), wd_str(enumerated)));

            const std::uint64_t bd2 = buckets.count(code.syndrome(leader));
            out.push_back(make_check("bd2 " + lt, formula.counts[d - 2] == bd2, formula.counts[d - 2].str(),
                                     std::to_string(bd2)));

            if (std::find(class_wds.begin(), class_wds.end(), formula) == class_wds.end()) class_wds.push_back(formula);

            for (std::uint32_t g1 = 1; g1 < q; ++g1) {
                // Every gamma1 with this gamma2/gamma1 ratio shares the formula value.
                const auto scaled = CosetLeader2::make(1, 2, FieldElement{g1}, f.mul(FieldElement{g1}, FieldElement{g2}));
                formula_sum += coset_bd2(code, scaled) * binomial(n, 2);
            }
            for (std::uint32_t j1 = 1; j1 <= n; ++j1) {
                for (std::uint32_t j2 = j1 + 1; j2 <= n; ++j2) {
                    for (std::uint32_t g1 = 1; g1 < q; ++g1) {
                        const auto moved = CosetLeader2::make(j1, j2, FieldElement{g1}, FieldElement{g2});
                        const std::uint64_t c = buckets.count(code.syndrome(moved));
                        bucket_sum += c;
                        if (g1 == 1 && c != bd2 && positions_ok) {
                            positions_ok = false;
                            positions_note = "positions (" + std::to_string(j1) + "," + std::to_string(j2) +
                                             ") gamma2=" + f.to_string(FieldElement{g2}) + ": " + std::to_string(c);
                        }
                    }
                }
            }
        }
        out.push_back(make_check("position-independence " + t, positions_ok, "constant over all position pairs",
                                 positions_ok ? "constant" : positions_note));

        const BigInt total = bd2_total(q, d);
        out.push_back(make_check("bd2-total " + t, formula_sum == total && bucket_sum == total, total.str(),
                                 "formula=" + formula_sum.str() + " enumeration=" + std::to_string(bucket_sum)));

        bool sym_ok = true;
        for (std::size_t a = 0; a < class_wds.size(); ++a) {
            for (std::size_t b = a + 1; b < class_wds.size(); ++b) {
                sym_ok = sym_ok && symmetry_residual(class_wds[a], class_wds[b], n, d);
            }
        }
        out.push_back(make_check("symmetry-residual " + t, sym_ok, "equal across classes",
                                 std::to_string(class_wds.size()) + " classes " + (sym_ok ? "equal" : "differ")));

        const auto reg = check_2_regular(code, opts.oracle);
        const bool expect_regular = std::gcd(q - 1, d - 2) == 1;
        out.push_back(make_check("2-regular " + t, reg.regular == expect_regular, expect_regular ? "true" : "false",
                                 reg.regular ? "true" : "false",
                                 std::to_string(reg.distinct[2].size()) + " weight-2 distributions over " +
                                     std::to_string(reg.cosets_checked) + " cosets"));
    }
    return out;
}

Check to_check(const ConjectureResult& r) {
    return Check{r.conjecture + " R=" + std::to_string(r.R) + " mu=" + std::to_string(r.mu), r.status, r.expected,
                 r.actual, r.note};
}

bool all_passed(const std::vector<Check>& checks) {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names = {"table4", "oracle", "conjecture-4a", "conjecture-mu-prime",
                                                        "conjecture-d-p2"};
    return names;
}

std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& opts) {
    auto convert = [](const std::vector<ConjectureResult>& results) {
        std::vector<Check> out;
        out.reserve(results.size());
        for (const auto& r : results) out.push_back(to_check(r));
        return out;
    };
    if (suite == "table4") return verify_table4(opts.q_max);
    if (suite == "oracle") return verify_oracle(opts);
    if (suite == "conjecture-4a") return convert(check_uniformity_conjecture(3, opts.R_max.value_or(20), opts.brute));
    if (suite == "conjecture-mu-prime") {
        return convert(check_prime_mu_conjecture(opts.R_max.value_or(22), opts.prime_mus, opts.brute));
    }
    if (suite == "conjecture-d-p2") return convert(check_d_p2_conjecture(opts.q_max, opts.brute));
    throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace gdrs
