#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sds/cli.hpp"
#include "sds/stgc.hpp"

using namespace sds;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/sds_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ccr verb lists cycles shortest first") {
    RunResult r = run_cli({"ccr", "--n", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "01\n000111\n");
}

TEST_CASE("mccr verb") {
    RunResult r = run_cli({"mccr", "--m", "3", "--n", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.substr(0, 6) == "# m=3\n");
    CHECK(r.out.find("021\n") != std::string::npos);
    CHECK(r.out.find("001122\n") != std::string::npos);
}

TEST_CASE("counts identity") {
    RunResult r = run_cli({"counts", "--identity", "--n", "6"});
    CHECK(r.status == 0);
    CHECK(r.out.find("Z*(n)=6") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    RunResult r3 = run_cli({"counts", "--identity", "--m", "3", "--n", "3"});
    CHECK(r3.out.find("cycles=3") != std::string::npos);
}

TEST_CASE("counts period buckets and formula/brute cross-check") {
    RunResult r = run_cli({"counts", "--i", "1", "--p", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "m=2 n=6 total=6 periods={4:1,12:5} source=formula\n");

    RunResult c = run_cli({"counts", "--n", "6"});
    CHECK(c.status == 0);
    CHECK(c.out.find("source=brute") != std::string::npos);
    CHECK(c.out.find("(match)") != std::string::npos);
}

TEST_CASE("delta and dinv roundtrip through files") {
    TempFile in("dinv_in.txt"), mid("dinv_mid.txt"), back("dinv_back.txt");
    {
        std::ofstream f(in.path);
        f << "000111\n";
    }
    RunResult r1 = run_cli({"dinv", "--block", "3", "--y", "001", "--in", in.path, "--out", mid.path});
    REQUIRE(r1.status == 0);
    {
        std::ifstream f(mid.path);
        std::string header, line;
        std::getline(f, header);
        std::getline(f, line);
        CHECK(line == "001001110110");
    }
    RunResult r2 = run_cli({"delta", "--block", "3", "--in", mid.path, "--out", back.path});
    REQUIRE(r2.status == 0);
    std::ifstream f(back.path);
    std::string header, line;
    std::getline(f, header);
    std::getline(f, line);
    CHECK(line == "000111000111");  // the doubled source, blockwise
}

TEST_CASE("recurse verb climbs CCR_3 to CCR_6") {
    TempFile in("rec_in.txt"), out("rec_out.txt");
    {
        std::ofstream f(in.path);
        f << "01\n000111\n";
    }
    RunResult r = run_cli({"recurse", "--n", "3", "--in", in.path, "--out", out.path});
    REQUIRE(r.status == 0);
    std::ifstream f(out.path);
    std::string line;
    int rows = 0;
    std::getline(f, line);  // header
    while (std::getline(f, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == 6);
}

TEST_CASE("build-rec then verify end to end") {
    TempFile code("rec31.stgc");
    RunResult b = run_cli({"build-rec", "--p", "3", "--t", "1", "--out", code.path});
    REQUIRE(b.status == 0);
    RunResult v = run_cli({"verify", code.path});
    CHECK(v.status == 0);
    CHECK(v.out.find("P=27") != std::string::npos);
    CHECK(v.out.find("PASS") != std::string::npos);
}

TEST_CASE("build-diff emits a parseable verified code") {
    TempFile code("diff3.stgc");
    RunResult b = run_cli({"build-diff", "--m", "3", "--out", code.path});
    REQUIRE(b.status == 0);
    std::ifstream f(code.path);
    Stgc parsed = read_stgc(f);
    CHECK(parsed.period() == 27);
    CHECK(verify_stgc(parsed).pass());
}

TEST_CASE("build-thm dispatches on the consecutive difference pattern") {
    TempFile in3("thm3_in.txt"), in4("thm4_in.txt"), out("thm_out.stgc");
    {
        std::ofstream f(in3.path);
        f << "001\n011\n";
    }
    RunResult r3 = run_cli({"build-thm", "--ell", "1", "--in", in3.path, "--out", out.path});
    REQUIRE(r3.status == 0);
    {
        std::ifstream f(out.path);
        CHECK(read_stgc(f).period() == 6);
    }
    {
        std::ofstream f(in4.path);
        f << "0011\n";
    }
    RunResult r4 = run_cli({"build-thm", "--ell", "1", "--in", in4.path, "--out", out.path});
    REQUIRE(r4.status == 0);
    std::ifstream f(out.path);
    CHECK(read_stgc(f).period() == 4);
}

TEST_CASE("search-thm3 verb") {
    TempFile code("s5.stgc");
    RunResult r = run_cli({"search-thm3", "--p", "5", "--out", code.path});
    REQUIRE(r.status == 0);
    std::ifstream f(code.path);
    CHECK(read_stgc(f).period() == 30);
}

TEST_CASE("verify flags a broken file") {
    TempFile code("broken.stgc");
    {
        std::ofstream f(code.path);
        f << "STGC m=2 n=2 P=4\n00\n01\n11\n11\n";
    }
    RunResult r = run_cli({"verify", code.path});
    CHECK(r.status == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("examples pipelines pass") {
    for (int id : {1, 3, 4}) {
        RunResult r = run_cli({"examples", "--id", std::to_string(id)});
        CHECK(r.status == 0);
        CHECK(r.err.empty());
        CHECK(r.out.find("MISMATCH") == std::string::npos);
    }
}

TEST_CASE("deterministic output") {
    RunResult a = run_cli({"build-diff", "--m", "3"});
    RunResult b = run_cli({"build-diff", "--m", "3"});
    CHECK(a.out == b.out);
}

TEST_CASE("error paths use distinct nonzero statuses") {
    CHECK(run_cli({"frobnicate"}).status != 0);
    CHECK(run_cli({"ccr"}).status != 0);  // missing --n
    RunResult guard = run_cli({"build-rec", "--p", "5", "--t", "2"});
    CHECK(guard.status == 2);
    CHECK(guard.err.find("guard") != std::string::npos);
    RunResult nofile = run_cli({"verify", "/tmp/definitely_missing.stgc"});
    CHECK(nofile.status == 2);
    RunResult badm = run_cli({"mccr", "--m", "4", "--n", "2", "--r", "2"});
    CHECK(badm.status == 2);
    CHECK(badm.err.find("relatively prime") != std::string::npos);
}
