#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gdrs_cli/cli.hpp"

namespace {

using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gdrs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, PeculiarityJson) {
    const auto r = run({"peculiarity", "10", "4"});
    ASSERT_EQ(r.code, gdrs::cli::kOk) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["command"], "peculiarity");
    ASSERT_EQ(doc["rows"].size(), 10U);
    EXPECT_EQ(doc["rows"][0]["lambda"], 0);
    EXPECT_EQ(doc["rows"][0]["value"], "22");
    EXPECT_EQ(doc["rows"][1]["value"], "20");
    EXPECT_EQ(doc["summary"]["total"], "210");
    EXPECT_EQ(doc["summary"]["delta01"], "2");
    for (const auto& c : doc["checks"]) EXPECT_EQ(c["status"], "PASS") << c.dump();
}

TEST(Cli, ReconcileClosedForm) {
    const auto r = run({"peculiarity", "12", "4", "--method", "reconcile"});
    ASSERT_EQ(r.code, gdrs::cli::kOk) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["summary"]["closed_form_case"], "mu4-D4");
    EXPECT_EQ(doc["summary"]["routes"].size(), 3U);
    EXPECT_EQ(doc["rows"][2]["value"], "43");
}

TEST(Cli, CosetWdQ7) {
    const auto r = run({"coset-wd", "7", "5"});
    ASSERT_EQ(r.code, gdrs::cli::kOk) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["summary"]["uniform"], false);
    EXPECT_EQ(doc["summary"]["distinct_weight2_wds"], 2);
    const auto u = json::parse(run({"coset-wd", "5", "5"}).out);
    EXPECT_EQ(u["summary"]["uniform"], true);
}

TEST(Cli, CsvHasHeader) {
    const auto r = run({"peculiarity", "9", "3", "--format", "csv"});
    ASSERT_EQ(r.code, gdrs::cli::kOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')).rfind("lambda,value", 0), 0U) << r.out;
    const auto w = run({"coset-wd", "7", "5", "--format", "csv"});
    EXPECT_NE(w.out.substr(0, w.out.find('\n')).find("w,count"), std::string::npos) << w.out;
}

TEST(Cli, Deterministic) {
    for (auto args : std::vector<std::vector<std::string>>{{"peculiarity", "14", "8", "--method", "reconcile"},
                                                           {"coset-wd", "8", "5", "--all-leaders"},
                                                           {"verify", "--suite", "conjecture-4a", "--R-max", "12"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"peculiarity", "10", "11"}).code, gdrs::cli::kUsageError);
    EXPECT_EQ(run({"peculiarity", "10", "0"}).code, gdrs::cli::kUsageError);
    EXPECT_EQ(run({"coset-wd", "6", "5"}).code, gdrs::cli::kUsageError);
    EXPECT_EQ(run({"coset-wd", "7", "4"}).code, gdrs::cli::kUsageError);
    EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, gdrs::cli::kUsageError);
    EXPECT_EQ(run({}).code, gdrs::cli::kUsageError);
}

TEST(Cli, BudgetExceeded) {
    EXPECT_EQ(run({"peculiarity", "30", "9", "--method", "brute", "--budget", "1000"}).code,
              gdrs::cli::kBudgetExceeded);
    EXPECT_EQ(run({"peculiarity", "12", "4", "--method", "brute", "--budget", "10", "--override-budget"}).code,
              gdrs::cli::kOk);
    ::setenv("GDRS_BUDGET", "10", 1);
    EXPECT_EQ(run({"peculiarity", "12", "4", "--method", "brute"}).code, gdrs::cli::kBudgetExceeded);
    EXPECT_EQ(run({"peculiarity", "12", "4", "--method", "brute", "--budget", "1000"}).code, gdrs::cli::kOk);
    ::unsetenv("GDRS_BUDGET");
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "gdrs_cli_test.json";
    const auto r = run({"peculiarity", "6", "3", "--out", path.string()});
    ASSERT_EQ(r.code, gdrs::cli::kOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const auto doc = json::parse(in);
    EXPECT_EQ(doc["rows"][0]["value"], "4");
    std::filesystem::remove(path);
}

}  // namespace
