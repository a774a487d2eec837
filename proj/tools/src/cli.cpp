#include "gdrs_cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <sstream>

#include "gdrs/code.hpp"
#include "gdrs/errors.hpp"
#include "gdrs/field.hpp"
#include "gdrs/peculiarity.hpp"
#include "gdrs/ring.hpp"
#include "gdrs/verify.hpp"

namespace gdrs::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Report {
    Json doc = Json::object();
    /// Array-valued row field expanded to one CSV line per entry.
    std::string explode_field;
};

Report new_report(const std::string& command, Json params) {
    Report r;
    r.doc["command"] = command;
    r.doc["params"] = std::move(params);
    r.doc["rows"] = Json::array();
    r.doc["checks"] = Json::array();
    return r;
}

void add_check(Report& r, const Check& c) {
    Json j;
    j["name"] = c.name;
    j["status"] = std::string(status_name(c.status));
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    if (!c.note.empty()) j["note"] = c.note;
    r.doc["checks"].push_back(std::move(j));
}

void add_check(Report& r, const std::string& name, bool ok, const std::string& expected, const std::string& actual) {
    add_check(r, Check{name, ok ? CheckStatus::Pass : CheckStatus::Fail, expected, actual, {}});
}

bool report_passed(const Report& r) {
    for (const auto& c : r.doc["checks"]) {
        if (c["status"] == "FAIL") return false;
    }
    return true;
}

Json wd_json(const WeightDistribution& wd) {
    Json a = Json::array();
    for (const auto& c : wd.counts) a.push_back(c.str());
    return a;
}

std::string scalar_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += " ";
            s += scalar_str(e);
        }
        return s;
    }
    if (v.is_object()) {
        std::string s;
        for (const auto& [k, e] : v.items()) {
            if (!s.empty()) s += " ";
            s += k + "=" + scalar_str(e);
        }
        return s;
    }
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

void write_csv_table(std::ostream& os, const Json& rows, const std::string& explode) {
    if (rows.empty()) return;
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows.front().items()) {
        if (k != explode) cols.push_back(k);
    }
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
    if (!explode.empty()) os << ",w,count";
    os << "\n";
    for (const auto& row : rows) {
        std::string prefix;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            prefix += (i ? "," : "") + csv_field(row.contains(cols[i]) ? scalar_str(row[cols[i]]) : "");
        }
        if (explode.empty() || !row.contains(explode)) {
            os << prefix << "\n";
            continue;
        }
        const auto& arr = row[explode];
        for (std::size_t w = 0; w < arr.size(); ++w) os << prefix << "," << w << "," << scalar_str(arr[w]) << "\n";
    }
}

void write_report(std::ostream& os, const Report& r, const std::string& format) {
    const Json& doc = r.doc;
    if (format == "json") {
        os << doc.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        if (!doc["rows"].empty()) {
            write_csv_table(os, doc["rows"], r.explode_field);
        } else {
            write_csv_table(os, doc["checks"], "");
        }
        return;
    }
    os << doc["command"].get<std::string>() << " " << scalar_str(doc["params"]) << "\n";
    for (const auto& row : doc["rows"]) os << "  " << scalar_str(row) << "\n";
    if (doc.contains("summary")) os << "summary: " << scalar_str(doc["summary"]) << "\n";
    for (const auto& c : doc["checks"]) {
        os << c["status"].get<std::string>() << " " << c["name"].get<std::string>()
           << " expected=" << c["expected"].get<std::string>() << " actual=" << c["actual"].get<std::string>();
        if (c.contains("note")) os << " (" << c["note"].get<std::string>() << ")";
        os << "\n";
    }
}

// --- peculiarity ---------------------------------------------------------------

Report cmd_peculiarity(std::uint32_t R, std::uint32_t mu, const std::string& method, const BruteForceOptions& opts) {
    const auto ctx = RingContext::make(R, mu);
    Report rep = new_report("peculiarity", Json{{"R", R}, {"mu", mu}, {"method", method}});

    PeculiarityTable table{ctx, {}, Method::ProfileEngine, std::nullopt};
    Json routes = Json::array();
    if (method == "brute") {
        table = sum_peculiarity_table_bruteforce(R, mu, opts);
    } else if (method == "profile") {
        table = sum_peculiarity_profile_table(ctx);
    } else if (method == "closed") {
        auto closed = sum_peculiarity_closed_form(ctx);
        if (!closed) {
            throw Error(Errc::InvalidArgument, "no closed form covers R=" + std::to_string(R) +
                                                   ", mu=" + std::to_string(mu));
        }
        table = std::move(*closed);
    } else {
        auto rec = reconcile(R, mu, opts);
        for (auto m : rec.routes) {
            routes.push_back(std::string(method_name(m)));
            add_check(rep, "route " + std::string(method_name(m)), true, "agree", "agree");
        }
        table = std::move(rec.table);
    }
    if (routes.empty()) routes.push_back(std::string(method_name(table.method)));

    const auto orbits = orbit_partition(ctx);
    for (std::uint32_t lambda = 0; lambda < R; ++lambda) {
        rep.doc["rows"].push_back(Json{{"lambda", lambda},
                                       {"value", table.values[lambda].str()},
                                       {"orbit", orbits.orbit_of[lambda]},
                                       {"oplus_orbit", lambda % ctx.D()}});
    }

    const BigInt expected_total = binomial(R, mu);
    add_check(rep, "mass", table.total() == expected_total, expected_total.str(), table.total().str());
    bool symmetric = true;
    for (std::uint32_t lambda = 0; lambda < R; ++lambda) {
        symmetric = symmetric && table.values[lambda] == table.values[(R - lambda) % R];
    }
    add_check(rep, "negation-symmetry", symmetric, "P(l)=P(-l)", symmetric ? "holds" : "violated");

    // Whether distinct orbits carry distinct values is open; report it.
    std::vector<BigInt> orbit_values;
    for (const auto& orbit : orbits.full_orbits) orbit_values.push_back(table.values[orbit.front()]);
    bool distinct = true;
    for (std::size_t a = 0; a < orbit_values.size(); ++a) {
        for (std::size_t b = a + 1; b < orbit_values.size(); ++b) distinct = distinct && orbit_values[a] != orbit_values[b];
    }

    Json summary;
    summary["method"] = std::string(method_name(table.method));
    summary["routes"] = routes;
    if (table.closed_form_case) summary["closed_form_case"] = *table.closed_form_case;
    summary["D"] = ctx.D();
    summary["orbits"] = orbits.full_orbits.size();
    summary["orbit_values_distinct"] = distinct;
    summary["total"] = table.total().str();
    summary["delta01"] = table.delta(0, 1).str();
    if (R > 2) summary["delta02"] = table.delta(0, 2).str();
    rep.doc["summary"] = std::move(summary);
    return rep;
}

// --- coset-wd ------------------------------------------------------------------

Report cmd_coset_wd(std::uint32_t q, std::uint32_t d, std::optional<std::uint32_t> gamma2, bool all_leaders) {
    if (d < 5) throw Error(Errc::DistanceTooSmall, "coset-wd needs d >= 5, got d=" + std::to_string(d));
    if (d > q) throw Error(Errc::InvalidArgument, "coset-wd needs d <= q, got q=" + std::to_string(q));
    Json params{{"q", q}, {"d", d}, {"all_leaders", all_leaders}};
    if (gamma2) params["gamma2"] = *gamma2;
    Report rep = new_report("coset-wd", std::move(params));
    rep.explode_field = "wd";

    const auto code = GdrsCode::make(Field::make(q), d);
    const Field& f = code.field();
    const std::uint32_t n = code.n();
    const BigInt mass = ipow(q, code.k());
    const auto ctx = RingContext::make(q - 1, d - 2);
    const auto orbits = orbit_partition(ctx);
    const BigInt per_ratio = binomial(n, 2) * (q - 1);  // cosets sharing one gamma2/gamma1

    auto leader_for = [&](std::uint32_t g2) { return CosetLeader2::make(1, 2, f.one(), f.element(g2)); };
    auto lambda_of = [&](std::uint32_t g2) { return f.dlog(f.neg(f.element(g2))); };

    const auto A = mds_code_wd(n, d, q);
    rep.doc["rows"].push_back(Json{{"kind", "code"}, {"class", ""}, {"gamma2", ""}, {"lambda", ""},
                                   {"cosets", "1"}, {"wd", wd_json(A)}});
    const auto w1 = coset_wd_weight1(code);
    rep.doc["rows"].push_back(Json{{"kind", "weight1"}, {"class", ""}, {"gamma2", ""}, {"lambda", ""},
                                   {"cosets", (BigInt(n) * (q - 1)).str()}, {"wd", wd_json(w1)}});

    std::vector<WeightDistribution> class_wds;
    BigInt bd2_sum = 0;
    bool mass_ok = A.total() == mass && w1.total() == mass;
    if (gamma2 || all_leaders) {
        for (std::uint32_t g2 = 1; g2 < q; ++g2) {
            if (gamma2 && g2 != *gamma2) continue;
            const auto wd = coset_wd_weight2(code, leader_for(g2));
            const auto lambda = lambda_of(g2);
            mass_ok = mass_ok && wd.total() == mass;
            bd2_sum += wd.counts[d - 2] * per_ratio;
            if (std::find(class_wds.begin(), class_wds.end(), wd) == class_wds.end()) class_wds.push_back(wd);
            rep.doc["rows"].push_back(Json{{"kind", "weight2"},
                                           {"class", orbits.orbit_of[lambda]},
                                           {"gamma2", f.to_string(f.element(g2))},
                                           {"lambda", lambda},
                                           {"cosets", per_ratio.str()},
                                           {"wd", wd_json(wd)}});
        }
        if (gamma2 && class_wds.empty()) {
            throw Error(Errc::InvalidArgument, "gamma2 must be a nonzero element value below q");
        }
    } else {
        for (std::size_t c = 0; c < orbits.full_orbits.size(); ++c) {
            const auto& lambdas = orbits.full_orbits[c];
            // gamma2 = -beta^lambda puts the leader in class c.
            const auto g2 = f.neg(f.exp(lambdas.front())).value;
            const auto wd = coset_wd_weight2(code, leader_for(g2));
            const BigInt cosets = per_ratio * lambdas.size();
            mass_ok = mass_ok && wd.total() == mass;
            bd2_sum += wd.counts[d - 2] * cosets;
            class_wds.push_back(wd);
            Json lam = Json::array();
            for (auto l : lambdas) lam.push_back(l);
            rep.doc["rows"].push_back(Json{{"kind", "weight2"},
                                           {"class", c},
                                           {"gamma2", f.to_string(f.element(g2))},
                                           {"lambda", std::move(lam)},
                                           {"cosets", cosets.str()},
                                           {"wd", wd_json(wd)}});
        }
    }

    add_check(rep, "mass", mass_ok, mass.str(), mass_ok ? mass.str() : "mismatch");
    if (!gamma2 && !all_leaders) {
        const BigInt total = bd2_total(q, d);
        add_check(rep, "bd2-total", bd2_sum == total, total.str(), bd2_sum.str());
    }
    bool sym = true;
    for (std::size_t a = 0; a < class_wds.size(); ++a) {
        for (std::size_t b = a + 1; b < class_wds.size(); ++b) sym = sym && symmetry_residual(class_wds[a], class_wds[b], n, d);
    }
    add_check(rep, "symmetry-residual", sym, "equal", sym ? "equal" : "differ");
    const bool uniform = std::gcd(q - 1, d - 2) == 1;
    if (uniform) {
        const auto u = coset_wd_weight2_uniform(code);
        const bool same = std::all_of(class_wds.begin(), class_wds.end(), [&](const auto& wd) { return wd == u; });
        add_check(rep, "uniform-formula", same, "all classes equal uniform formula", same ? "equal" : "differ");
    }

    Json summary;
    summary["n"] = n;
    summary["k"] = code.k();
    summary["beta"] = f.to_string(f.primitive());
    summary["uniform"] = uniform;
    summary["necessary_condition"] = necessary_condition(q, d);
    summary["distinct_weight2_wds"] = class_wds.size();
    rep.doc["summary"] = std::move(summary);
    return rep;
}

// --- verify --------------------------------------------------------------------

Report cmd_verify(const std::string& suite, const SuiteOptions& opts) {
    Json params{{"suite", suite}, {"q_max", opts.q_max}};
    if (opts.R_max) params["R_max"] = *opts.R_max;
    Report rep = new_report("verify", std::move(params));
    const auto checks = run_suite(suite, opts);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& c : checks) {
        add_check(rep, c);
        ++counts[static_cast<int>(c.status)];
    }
    rep.doc["summary"] = Json{{"pass", counts[0]}, {"fail", counts[1]}, {"warn", counts[2]}, {"untested", counts[3]}};
    return rep;
}

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::BudgetExceeded: return kBudgetExceeded;
        case Errc::NotPrimePower:
        case Errc::NoModulusAvailable:
        case Errc::InvalidModulus:
        case Errc::MuOutOfRange:
        case Errc::DistanceTooSmall:
        case Errc::NotUniformCase:
        case Errc::InvalidArgument:
        case Errc::LogOfZero: return kUsageError;
        default: return kCheckFailure;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coset weight distributions of GDRS codes and subset-sum peculiarity counts", "gdrs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::optional<std::uint64_t> budget;
    bool override_budget = false;
    unsigned jobs = 1;
    std::string out_file;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--budget", budget, "Brute-force budget on C(R, mu); default 1e8 or $GDRS_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_flag("--override-budget", override_budget, "Run brute force regardless of budget");
    app.add_option("--jobs", jobs, "Worker threads, 0 = all cores");
    app.add_option("--out", out_file, "Write the report to FILE instead of stdout");

    auto* pec = app.add_subcommand("peculiarity", "P^+_{R,mu}(lambda) for every lambda");
    std::uint32_t R = 0;
    std::uint32_t mu = 0;
    std::string method = "profile";
    pec->add_option("R", R)->required();
    pec->add_option("MU", mu)->required();
    pec->add_option("--method", method)->check(CLI::IsMember({"brute", "profile", "closed", "reconcile"}));

    auto* cwd = app.add_subcommand("coset-wd", "Weight distributions of the weight-2 cosets of a GDRS code");
    std::uint32_t q = 0;
    std::uint32_t d = 0;
    std::optional<std::uint32_t> gamma2;
    bool all_leaders = false;
    cwd->add_option("Q", q)->required();
    cwd->add_option("D", d)->required();
    cwd->add_option("--gamma2", gamma2, "Only the leader (1,2;1,gamma2), element value");
    cwd->add_flag("--all-leaders", all_leaders, "One row per gamma2 instead of per class");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    SuiteOptions sopts;
    std::optional<std::uint32_t> R_max;
    std::vector<std::uint32_t> prime_mus;
    ver->add_option("--suite", suite)->required()->check(CLI::IsMember(
        std::vector<std::string>(suite_names().begin(), suite_names().end())));
    ver->add_option("--q-max", sopts.q_max)->check(CLI::Range(5U, 256U));
    ver->add_option("--R-max", R_max)->check(CLI::Range(3U, 64U));
    ver->add_option("--mu", prime_mus, "Primes for conjecture-mu-prime (default 11)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    BruteForceOptions bopts;
    if (const char* env = std::getenv("GDRS_BUDGET")) {
        try {
            bopts.budget = std::stoull(env);
        } catch (const std::exception&) {
            err << "usage error: GDRS_BUDGET must be a positive integer\n";
            return kUsageError;
        }
    }
    if (budget) bopts.budget = *budget;
    bopts.override_budget = override_budget;
    bopts.jobs = jobs;

    try {
        Report rep;
        if (*pec) {
            rep = cmd_peculiarity(R, mu, method, bopts);
        } else if (*cwd) {
            rep = cmd_coset_wd(q, d, gamma2, all_leaders);
        } else {
            sopts.R_max = R_max;
            if (!prime_mus.empty()) sopts.prime_mus = prime_mus;
            sopts.brute = bopts;
            sopts.oracle.jobs = jobs;
            sopts.oracle.override_budget = override_budget;
            rep = cmd_verify(suite, sopts);
        }
        if (out_file.empty()) {
            write_report(out, rep, format);
        } else {
            std::ofstream file(out_file);
            if (!file) {
                err << "cannot open " << out_file << "\n";
                return kUsageError;
            }
            write_report(file, rep, format);
        }
        return report_passed(rep) ? kOk : kCheckFailure;
    } catch (const RouteMismatch& e) {
        err << "route mismatch at lambda=" << e.lambda() << ": " << method_name(e.route_a()) << "="
            << e.value_a().str() << ", " << method_name(e.route_b()) << "=" << e.value_b().str() << "\n";
        return kCheckFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace gdrs::cli
