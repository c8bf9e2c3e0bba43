#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

CliRun run(const std::string& args) {
    static int serial = 0;
    const std::string tag = "cli_" + std::to_string(++serial);
    const std::string cmd =
        std::string(LLIKE_CLI_PATH) + " " + args + " >" + tag + ".out 2>" + tag + ".err";
    const int status = std::system(cmd.c_str());
    CliRun r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(tag + ".out"), slurp(tag + ".err")};
    std::remove((tag + ".out").c_str());
    std::remove((tag + ".err").c_str());
    return r;
}

} // namespace

TEST(Cli, MeanOfLiouvilleAtTen) {
    const CliRun r = run("mean --family all-primes --variant big-omega --x 10");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("M(10) = 0.0"), std::string::npos) << r.out;
}

TEST(Cli, ConsecutiveCorrelationAtEight) {
    const CliRun r = run("correlate --family all-primes --k 2 --a 1,1 --h 1,2 --x 8");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("-0.25"), std::string::npos) << r.out;
}

TEST(Cli, Errors) {
    std::ofstream("bad_set.txt") << "# not coprime\n6\n10\n";
    CliRun r = run("decompose --set file:bad_set.txt --xmax 100");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("NotCoprime(6,10)"), std::string::npos) << r.err;
    std::remove("bad_set.txt");

    r = run("correlate --family all-primes --k 2 --a 1,2 --h 1,2 --x 100");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("DegenerateSpec"), std::string::npos) << r.err;

    r = run("semigroup --family all-primes --x 100 --l 5");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ArityTooLarge"), std::string::npos) << r.err;

    r = run("mean --family no-such-family --x 10");
    EXPECT_EQ(r.code, 2);
    r = run("mean --x 10 --bogus");
    EXPECT_EQ(r.code, 2);
    r = run("");
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Verify) {
    const CliRun r = run("verify --seed 3 --nmax 2000 --sets 3");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("all identities hold"), std::string::npos) << r.out;
}

TEST(Cli, OutputIsIndependentOfWorkers) {
    std::string first;
    for (int w : {1, 4, 8}) {
        const std::string path = "grid_run.json";  // the path is part of the embedded config
        const CliRun r = run("grid --family sparse-primes --grid 100,1000,100000 --a 1,1 --h 0,1 --format json "
                          "--segment-len 1024 --workers " +
                          std::to_string(w) + " --out " + path);
        ASSERT_EQ(r.code, 0) << r.err;
        const std::string bytes = slurp(path);
        std::remove(path.c_str());
        ASSERT_FALSE(bytes.empty());
        if (first.empty())
            first = bytes;
        else
            EXPECT_EQ(bytes, first) << "workers=" << w;
    }
    std::string bin;
    for (int w : {1, 4, 8}) {
        const std::string path = "dump_run.bin";
        const CliRun r = run("sieve-dump --family all-primes --lo 1 --hi 300000 --format bin --segment-len 4096 --workers " +
                          std::to_string(w) + " --out " + path);
        ASSERT_EQ(r.code, 0) << r.err;
        const std::string bytes = slurp(path);
        std::remove(path.c_str());
        if (bin.empty())
            bin = bytes;
        else
            EXPECT_EQ(bytes, bin) << "workers=" << w;
    }
}

TEST(Cli, JsonEmbedsConfig) {
    const CliRun r = run("bounds --family all-primes --x 10 --K 1 --y 3 --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.contains("config"));
    EXPECT_EQ(j["config"]["command"], "bounds");
    EXPECT_EQ(j["config"]["family"], "all-primes");
    EXPECT_FALSE(j["config"].contains("workers"));
    EXPECT_NE(r.out.find("247/210"), std::string::npos);
    EXPECT_NE(r.out.find("24/35"), std::string::npos);
}

TEST(Cli, SieveDumpCsv) {
    const CliRun r = run("sieve-dump --family augmented-primes --inject 6 --lo 10 --hi 12 --n-c --format csv");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "n,omega,big_omega,lambda,n_C\n10,1,1,-1,1\n11,1,1,-1,1\n12,1,1,-1,6\n");
}

TEST(Cli, ConfigFile) {
    std::ofstream("run.toml") << "[mean]\nfamily = \"all-primes\"\nx = 8\n";
    const CliRun r = run("--config run.toml mean");
    std::remove("run.toml");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("M(8)"), std::string::npos) << r.out;
}

TEST(Cli, SvgChart) {
    const CliRun r = run("grid --family all-primes --grid 10,100,1000 --svg chart.svg");
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string svg = slurp("chart.svg");
    std::remove("chart.svg");
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
}
