#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <unistd.h>

#include "kuga/kuga.hpp"
#include "run_cmd.hpp"

using testutil::CmdResult;

namespace {

std::string cli() { return std::string(KUGA_CLI_PATH); }
std::string fixtures() { return std::string(KUGA_FIXTURES_DIR); }

CmdResult run(const std::string& args) {
    return testutil::run_cmd(cli() + " " + args);
}

CmdResult run_quiet(const std::string& args) {
    return testutil::run_cmd(cli() + " " + args + " 2>/dev/null");
}

/// Temp file that cleans up after itself; unique per test process.
class TempFile {
  public:
    explicit TempFile(const std::string& stem, const std::string& content = "") {
        path_ = "/tmp/kuga_" + stem + "_" + std::to_string(getpid());
        if (!content.empty()) {
            std::ofstream out(path_, std::ios::binary);
            out << content;
        }
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }
    std::string read() const {
        std::ifstream in(path_, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

  private:
    std::string path_;
};

int expected_code(const std::string& preset, int n) {
    kuga::Verdict v = kuga::analyze(*kuga::preset_scenario(preset, n, true));
    switch (v.status) {
    case kuga::VerdictStatus::canonical:
        return 0;
    case kuga::VerdictStatus::not_canonical:
        return 10;
    case kuga::VerdictStatus::indeterminate_quasi_reflection:
        return 11;
    }
    return -1;
}

} // namespace

TEST(CliRstTest, ExitCodesReflectVerdicts) {
    CmdResult bad = run("rst --preset C2 --n 2 --with-sigma");
    EXPECT_EQ(bad.exit_code, 10);
    EXPECT_NE(bad.output.find("not-canonical"), std::string::npos);
    EXPECT_NE(bad.output.find("witness: k1=5 k2=0"), std::string::npos);
    EXPECT_NE(bad.output.find("rst_sum=5/6"), std::string::npos);

    EXPECT_EQ(run("rst --preset C2 --n 3 --with-sigma").exit_code, 0);
    EXPECT_EQ(run("rst --preset Q1 --n 1").exit_code, 0);
    EXPECT_EQ(run("rst --preset Q2 --n 1 --with-sigma").exit_code, 0);
    EXPECT_EQ(run("rst --preset C1 --n 1").exit_code, 0);
    EXPECT_EQ(run("rst --preset C2 --n 0 --with-sigma").exit_code, 11);
}

TEST(CliRstTest, ExitCodesMatchLibraryAcrossPresets) {
    for (const std::string preset : {"C1", "C2", "Q1", "Q2"})
        for (int n = 1; n <= 5; ++n) {
            CmdResult r = run("rst --preset " + preset + " --n " +
                              std::to_string(n) + " --with-sigma");
            EXPECT_EQ(r.exit_code, expected_code(preset, n))
                << preset << " n=" << n;
        }
}

TEST(CliRstTest, InputErrorsExitTwo) {
    EXPECT_EQ(run_quiet("rst --preset Z3").exit_code, 2);
    EXPECT_EQ(run_quiet("rst").exit_code, 2);
    EXPECT_EQ(run_quiet("rst --file /nonexistent/scenario.json").exit_code, 2);
    EXPECT_EQ(run_quiet("rst --preset C2 --file x.json").exit_code, 2);
    EXPECT_EQ(run_quiet("rst --preset C2 --n -1").exit_code, 2);
    EXPECT_EQ(run_quiet("rst --preset C2 --format yaml").exit_code, 2);
    EXPECT_EQ(run_quiet("bogus-subcommand").exit_code, 2);

    TempFile garbage("garbage", "{ not json at all");
    EXPECT_EQ(run_quiet("rst --file " + garbage.path()).exit_code, 2);

    TempFile nonsp("nonsp", R"({
      "locus": "interior", "n": 1,
      "gamma": [[1,1,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
      "tau": {"tau1": "rho"}
    })");
    EXPECT_EQ(run_quiet("rst --file " + nonsp.path()).exit_code, 2);

    TempFile wrongpt("wrongpt", R"({
      "locus": "interior", "n": 1, "gamma": "C2",
      "tau": {"tau1": "i"}
    })");
    EXPECT_EQ(run_quiet("rst --file " + wrongpt.path()).exit_code, 2);
}

TEST(CliRstTest, FileScenarioMatchesPreset) {
    TempFile scen("scenario", R"({
      "locus": "interior", "n": 2, "include_sigma": true,
      "gamma": "C2",
      "tau": {"tau1": "rho", "tau3": [0.0, 2.0]}
    })");
    CmdResult from_file = run("rst --file " + scen.path() + " --format json");
    CmdResult from_preset = run("rst --preset C2 --n 2 --with-sigma --format json");
    EXPECT_EQ(from_file.exit_code, 10);
    EXPECT_EQ(from_file.output, from_preset.output);
}

TEST(CliRstTest, JsonOutputIsWellFormedAndDeterministic) {
    std::string cmd = "rst --preset C2 --n 1 --with-sigma --format json";
    CmdResult a = run(cmd);
    CmdResult b = run(cmd);
    EXPECT_EQ(a.exit_code, 10);
    EXPECT_EQ(a.output, b.output);
    kuga::json j = kuga::json::parse(a.output);
    EXPECT_EQ(j["status"], "not-canonical");
    EXPECT_EQ(j["witness"]["rst_sum"], "2/3");
    EXPECT_EQ(j["table"].size(), 12u);
}

TEST(CliRstTest, HelpExitsZero) {
    EXPECT_EQ(run("--help >/dev/null").exit_code, 0);
    EXPECT_EQ(run("rst --help >/dev/null").exit_code, 0);
}

TEST(CliTablesTest, DefaultRenderMatchesFixtures) {
    for (const std::string name : {"C2", "Q1", "Q2"}) {
        std::string fix = fixtures() + "/table_" + name + "_n1.txt";
        std::ifstream in(fix, std::ios::binary);
        ASSERT_TRUE(in.good()) << fix;
        std::ostringstream buf;
        buf << in.rdbuf();
        CmdResult r = run("tables --preset " + name + " --n 1");
        EXPECT_EQ(r.exit_code, 0) << name;
        EXPECT_EQ(r.output, buf.str()) << name;
    }
}

TEST(CliTablesTest, CheckModeComparesBytes) {
    CmdResult ok =
        run("tables --preset C2 --n 1 --check " + fixtures() + "/table_C2_n1.txt");
    EXPECT_EQ(ok.exit_code, 0);
    EXPECT_NE(ok.output.find("match:"), std::string::npos);

    CmdResult wrong = run_quiet("tables --preset C2 --n 1 --check " + fixtures() +
                                "/table_Q1_n1.txt");
    EXPECT_EQ(wrong.exit_code, 1);

    EXPECT_EQ(run_quiet("tables --preset C2 --n 1 --check /nonexistent.txt")
                  .exit_code,
              2);
}

TEST(CliTablesTest, JsonRowsAndSigmaFlag) {
    CmdResult with = run("tables --preset C2 --n 1 --format json");
    EXPECT_EQ(with.exit_code, 0);
    kuga::json jw = kuga::json::parse(with.output);
    EXPECT_EQ(jw.size(), 12u);
    EXPECT_TRUE(jw[0]["type"].is_null());
    EXPECT_EQ(jw[2]["type"], "1/6(4, 5, 0, 5, 0)");

    CmdResult without = run("tables --preset C2 --n 1 --no-sigma --format json");
    kuga::json jo = kuga::json::parse(without.output);
    EXPECT_EQ(jo.size(), 6u);
}

TEST(CliDimsTest, PrintsPlainNumbers) {
    EXPECT_EQ(run("dims mr --r 12").output, "2\n");
    EXPECT_EQ(run("dims mr --r 2").output, "0\n");
    EXPECT_EQ(run("dims mr --r 0").output, "1\n");
    EXPECT_EQ(run("dims jacobi --k 6 --p 3").output, "1\n");
    EXPECT_EQ(run("dims jacobi --k 5 --p 5").output, "1\n");
    EXPECT_EQ(run("dims jacobi --k 5 --p 3").output, "0\n");
    EXPECT_EQ(run("dims min-prime --k 5").output, "5\n");
    EXPECT_EQ(run("dims min-prime --k 6").output, "3\n");
    EXPECT_EQ(run("dims min-prime --k 2 --p-max 3").output, "none\n");
}

TEST(CliDimsTest, ErrorsExitTwo) {
    EXPECT_EQ(run_quiet("dims jacobi --k 5 --p 0").exit_code, 2);
    EXPECT_EQ(run_quiet("dims jacobi --k 5").exit_code, 2); // missing --p
    EXPECT_EQ(run_quiet("dims").exit_code, 2);              // missing subcommand
}

TEST(CliRegionTest, CsvToStdout) {
    CmdResult r = run("region");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output.rfind("p,n,status\n", 0), 0u);
    EXPECT_NE(r.output.find("3,4,rgt\n"), std::string::npos);
    EXPECT_NE(r.output.find("5,3,rgt\n"), std::string::npos);
    EXPECT_NE(r.output.find("3,3,unknown\n"), std::string::npos);
    EXPECT_NE(r.output.find("31,2,unknown\n"), std::string::npos);
    EXPECT_NE(r.output.find("37,0,rgt\n"), std::string::npos);
    EXPECT_EQ(r.output.find("\n2,"), std::string::npos); // no even prime rows
}

TEST(CliRegionTest, WritesFilesAtomically) {
    TempFile out("region_out");
    TempFile plot("region_plot");
    CmdResult r = run("region --p-max 7 --n-max 4 --out " + out.path() +
                      " --plot-data " + plot.path());
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.output.empty());
    EXPECT_EQ(out.read(), kuga::region_csv(kuga::region_grid(7, 4)));

    std::string plot_text = plot.read();
    EXPECT_EQ(plot_text.rfind("# p n rgt(1)/unknown(0)\n", 0), 0u);
    EXPECT_NE(plot_text.find("3 4 1\n"), std::string::npos);
    EXPECT_NE(plot_text.find("3 0 0\n"), std::string::npos);

    // no leftover temp file from the atomic write
    std::ifstream tmp(out.path() + ".tmp");
    EXPECT_FALSE(tmp.good());
}

TEST(CliRegionTest, JsonFormat) {
    CmdResult r = run("region --p-max 5 --n-max 1 --format json");
    EXPECT_EQ(r.exit_code, 0);
    kuga::json j = kuga::json::parse(r.output);
    ASSERT_EQ(j.size(), 4u);
    EXPECT_EQ(j[0]["p"], 3);
    EXPECT_EQ(j[0]["n"], 0);
    EXPECT_EQ(j[0]["status"], "unknown");
}

TEST(CliRegionTest, FilesystemErrorsExitThree) {
    EXPECT_EQ(run_quiet("region --out /nonexistent/dir/region.csv").exit_code, 3);
    EXPECT_EQ(
        run_quiet("region --plot-data /nonexistent/dir/plot.dat").exit_code, 3);
}

TEST(CliEnvTest, SnapToleranceOverride) {
    std::string base = " rst --preset C2 --n 2 --with-sigma";
    EXPECT_EQ(testutil::run_cmd("KUGA_RST_TOL=abc " + cli() + base +
                                " 2>/dev/null")
                  .exit_code,
              2);
    EXPECT_EQ(testutil::run_cmd("KUGA_RST_TOL=-1 " + cli() + base +
                                " 2>/dev/null")
                  .exit_code,
              2);
    // a sane override still reaches the verdict
    EXPECT_EQ(testutil::run_cmd("KUGA_RST_TOL=1e-3 " + cli() + base).exit_code,
              10);
    // too tight: numerical eigenvalues no longer match any root of unity
    EXPECT_EQ(testutil::run_cmd("KUGA_RST_TOL=1e-300 " + cli() + base +
                                " 2>/dev/null")
                  .exit_code,
              2);
    // too loose: a nearby root with a foreign denominator wins the snap
    EXPECT_EQ(testutil::run_cmd("KUGA_RST_TOL=0.5 " + cli() + base +
                                " 2>/dev/null")
                  .exit_code,
              2);
}
