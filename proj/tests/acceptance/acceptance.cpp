// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "gdrs/code.hpp"
#include "gdrs/oracle.hpp"
#include "gdrs/peculiarity.hpp"
#include "gdrs/ring.hpp"
#include "gdrs/verify.hpp"

using namespace gdrs;

namespace {

constexpr double kAc1Seconds = 60.0;
constexpr double kAc4Seconds = 120.0;
constexpr double kAc5Seconds = 60.0;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0) o.expect(secs < limit_s, "runtime " + std::to_string(secs) + "s over " + std::to_string(limit_s) + "s");
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s)";
    if (!o.ok) std::cout << ": " << o.detail.str();
    std::cout << std::endl;
    if (!o.ok) ++failures;
}

BruteForceOptions unlimited() {
    BruteForceOptions opts;
    opts.override_budget = true;
    opts.jobs = 0;
    return opts;
}

std::string pair_tag(std::uint32_t a, std::uint32_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

GdrsCode code(std::uint32_t q, std::uint32_t d) { return GdrsCode::make(Field::make(q), d); }

}  // namespace

int main() {
    criterion("AC1", "brute force equals profile engine, 4<=R<=24, 2<=mu<=min(9,R-1)", kAc1Seconds, [](Outcome& o) {
        int pairs = 0;
        for (std::uint32_t R = 4; R <= 24; ++R) {
            for (std::uint32_t mu = 2; mu <= std::min(9U, R - 1); ++mu) {
                const auto brute = sum_peculiarity_table_bruteforce(R, mu, unlimited());
                const auto profile = sum_peculiarity_profile_table(RingContext::make(R, mu));
                o.expect(brute.values == profile.values, "mismatch at " + pair_tag(R, mu));
                ++pairs;
            }
        }
        o.expect(pairs == 147, "pair count " + std::to_string(pairs));
    });

    criterion("AC2", "closed forms equal brute force, >=3 values of R<=30 per case", 0, [](Outcome& o) {
        std::map<std::string, std::vector<std::uint32_t>> covered;
        for (std::uint32_t R = 3; R <= 30; ++R) {
            for (std::uint32_t mu = 1; mu < R; ++mu) {
                const auto ctx = RingContext::make(R, mu);
                const auto cf = sum_peculiarity_closed_form(ctx);
                if (!cf) continue;
                auto& rs = covered[*cf->closed_form_case];
                if (rs.size() >= 3) continue;
                if (binomial(R, mu) > 20'000'000) continue;
                const auto brute = sum_peculiarity_table_bruteforce(R, mu, unlimited());
                o.expect(cf->values == brute.values, "mismatch at " + pair_tag(R, mu) + " " + *cf->closed_form_case);
                if (rs.empty() || rs.back() != R) rs.push_back(R);
            }
        }
        for (const char* tag : {"coprime", "mu3-D3", "mu4-D2", "mu4-D4", "mu5-D5", "mu6-D2", "mu6-D3", "mu7-D7",
                                "mu8-D2", "mu9-D3"}) {
            o.expect(covered[tag].size() >= 3, std::string(tag) + " has " + std::to_string(covered[tag].size()) + " R");
        }
        const auto p93 = sum_peculiarity_closed_form(RingContext::make(9, 3));
        o.expect(p93 && p93->values[0] == 10 && p93->values[1] == 9 && p93->values[2] == 9, "P(9,3)");
        const auto p104 = sum_peculiarity_closed_form(RingContext::make(10, 4));
        o.expect(p104 && p104->values[0] == 22 && p104->values[1] == 20, "P(10,4)");
        const auto p148 = sum_peculiarity_closed_form(RingContext::make(14, 8));
        o.expect(p148 && p148->delta(0, 1) == 5, "delta01 of P(14,8)");
    });

    criterion("AC3", "three-orbit case mu=4, R in {8,12,16,20}", 0, [](Outcome& o) {
        for (std::uint32_t R : {8U, 12U, 16U, 20U}) {
            const auto ctx = RingContext::make(R, 4);
            const auto cf = sum_peculiarity_closed_form(ctx);
            o.expect(cf.has_value(), "no closed form at R=" + std::to_string(R));
            if (!cf) continue;
            o.expect(orbit_partition(ctx).full_orbits.size() == 3, "orbit count at R=" + std::to_string(R));
            o.expect(cf->values == sum_peculiarity_table_bruteforce(R, 4, unlimited()).values,
                     "closed form vs brute at R=" + std::to_string(R));
            o.expect(cf->total() == binomial(R, 4), "mass at R=" + std::to_string(R));
        }
        const auto t = sum_peculiarity_closed_form(RingContext::make(12, 4));
        o.expect(t && t->values[0] == 42 && t->values[1] == 40 && t->values[2] == 43, "R=12 values");
        o.expect(t && t->total() == 495, "R=12 mass");
    });

    criterion("AC4", "q in {5,8}, d=5 codes are 2-regular with B_3 = 1 and 5", kAc4Seconds, [](Outcome& o) {
        OracleOptions opts;
        opts.jobs = 0;
        for (auto [q, b3] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {8, 5}}) {
            const auto c = code(q, 5);
            const auto rep = check_2_regular(c, opts);
            o.expect(rep.regular, "q=" + std::to_string(q) + " not 2-regular");
            o.expect(rep.distinct[2].size() == 1 && rep.distinct[2][0].counts[3] == b3,
                     "q=" + std::to_string(q) + " B_3");
            o.expect(coset_wd_weight2_uniform(c) == rep.distinct[2][0], "q=" + std::to_string(q) + " uniform formula");
        }
    });

    criterion("AC5", "q=7, d=5 formula equals enumeration, position independence", kAc5Seconds, [](Outcome& o) {
        const auto c = code(7, 5);
        const Field& f = c.field();
        for (auto g2 : f.nonzero_elements()) {
            const auto leader = CosetLeader2::make(1, 2, f.one(), g2);
            const auto formula = coset_wd_weight2(c, leader);
            o.expect(oracle_full_coset_wd(c, leader) == formula, "gamma2=" + std::to_string(g2.value));
            const auto lambda = f.dlog(f.neg(g2));
            o.expect(formula.counts[3] == (lambda % 3 == 0 ? 4 : 3), "B_3 class at gamma2=" + std::to_string(g2.value));
            const auto ref = oracle_bd2(c, leader);
            int pairs = 0;
            for (std::uint32_t j1 = 1; j1 <= 8; ++j1) {
                for (std::uint32_t j2 = j1 + 1; j2 <= 8; ++j2) {
                    o.expect(oracle_bd2(c, CosetLeader2::make(j1, j2, f.one(), g2)) == ref,
                             "position " + pair_tag(j1, j2));
                    ++pairs;
                }
            }
            o.expect(pairs == 28, "pair count");
        }
    });

    criterion("AC6", "integral spectrum 3360 / 240 / 8820", 0, [](Outcome& o) {
        for (auto [q, expected] : std::vector<std::pair<std::uint32_t, int>>{{7, 3360}, {5, 240}, {8, 8820}}) {
            const auto c = code(q, 5);
            const Field& f = c.field();
            const auto orbits = orbit_partition(RingContext::make(q - 1, 3));
            const BigInt per_ratio = binomial(c.n(), 2) * (q - 1);
            BigInt by_class = 0;
            for (const auto& orbit : orbits.full_orbits) {
                const auto g2 = f.neg(f.exp(orbit.front()));
                by_class += coset_bd2(c, CosetLeader2::make(1, 2, f.one(), g2)) * orbit.size() * per_ratio;
            }
            o.expect(bd2_total(q, 5) == expected, "formula at q=" + std::to_string(q));
            o.expect(by_class == expected, "class sum at q=" + std::to_string(q) + " is " + by_class.str());
        }
    });

    criterion("AC7", "q=7, d=5 weight-1 cosets", 0, [](Outcome& o) {
        const auto c = code(7, 5);
        const auto wd = coset_wd_weight1(c);
        o.expect(wd.counts[4] == 35, "B_4");
        const std::vector<std::pair<std::uint32_t, std::uint32_t>> leaders = {{1, 1}, {3, 5}, {6, 2}, {7, 6}, {8, 3}};
        for (auto [pos, val] : leaders) {
            std::vector<FieldElement> v(c.n(), FieldElement{0});
            v[pos - 1] = FieldElement{val};
            o.expect(oracle_full_coset_wd(c, v) == wd, "leader at " + std::to_string(pos));
        }
    });

    criterion("AC8", "prefix (1,0,...) extends to the MDS distribution, q<=31, 5<=d<=9", 0, [](Outcome& o) {
        int cases = 0;
        for (std::uint32_t q = 4; q <= 31; ++q) {
            if (!prime_power(q)) continue;
            for (std::uint32_t d = 5; d <= std::min(9U, q + 1); ++d) {
                std::vector<BigInt> prefix(d - 1, 0);
                prefix[0] = 1;
                const auto wd = bonneau_extend(q + 1, d, q, prefix);
                const auto mass = ipow(q, q + 2 - d);
                o.expect(wd == mds_code_wd(q + 1, d, q), pair_tag(q, d));
                o.expect(wd.total() == mass, "mass at " + pair_tag(q, d));
                if (d <= q) {
                    const auto c = code(q, d);
                    o.expect(coset_wd_weight1(c).total() == mass, "weight-1 mass at " + pair_tag(q, d));
                    for (auto g2 : c.field().nonzero_elements()) {
                        const auto w2 = coset_wd_weight2(c, CosetLeader2::make(1, 2, c.field().one(), g2));
                        o.expect(w2.total() == mass, "weight-2 mass at " + pair_tag(q, d));
                    }
                }
                ++cases;
            }
        }
        o.expect(cases > 0, "no cases");
    });

    criterion("AC9", "symmetry residual across the two q=7, d=5 classes", 0, [](Outcome& o) {
        const auto c = code(7, 5);
        const auto a = coset_wd_weight2(c, CosetLeader2::make(1, 2, FieldElement{1}, FieldElement{6}));
        const auto b = coset_wd_weight2(c, CosetLeader2::make(1, 2, FieldElement{1}, FieldElement{4}));
        o.expect(a != b, "classes coincide");
        o.expect(symmetry_residual(a, b, 8, 5), "residual differs");
        o.expect(symmetry_residual(oracle_full_coset_wd(c, CosetLeader2::make(1, 2, FieldElement{1}, FieldElement{6})),
                                   oracle_full_coset_wd(c, CosetLeader2::make(1, 2, FieldElement{1}, FieldElement{4})),
                                   8, 5),
                 "residual differs on enumerated distributions");
    });

    criterion("AC10", "conjecture sweeps reported, never asserted", 0, [](Outcome& o) {
        for (const char* suite : {"conjecture-mu-prime", "conjecture-4a", "conjecture-d-p2"}) {
            const auto checks = run_suite(suite);
            int counts[4] = {0, 0, 0, 0};
            for (const auto& ch : checks) ++counts[static_cast<int>(ch.status)];
            std::cout << "  " << suite << ": " << checks.size() << " checks, pass=" << counts[0]
                      << " warn=" << counts[2] << " fail=" << counts[1] << " untested=" << counts[3] << "\n";
            o.expect(!checks.empty(), std::string(suite) + " ran nothing");
            o.expect(all_passed(checks), std::string(suite) + " has a FAIL on a proved case");
        }
        const auto mu = check_prime_mu_conjecture(22, {11});
        o.expect(mu.size() == 1 && mu[0].note.find("brute_force") != std::string::npos,
                 "(22,11) not checked by brute force");
        o.expect(check_uniformity_conjecture(3, 20).size() == 171, "converse sweep size");
    });

    criterion("TABLE4", "weight-2 coset table, every instance with q<=31", 0, [](Outcome& o) {
        const auto checks = verify_table4(31);
        o.expect(checks.size() == 79, "instance count " + std::to_string(checks.size()));
        for (const auto& ch : checks) o.expect(ch.status == CheckStatus::Pass, ch.name + " " + ch.actual);
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
