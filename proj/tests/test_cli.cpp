#include "golden.hpp"

#include <rootfield/cli.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = rootfield::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden transcripts") {
    for (const auto& c : golden::cases()) {
        CAPTURE(c.file);
        const std::string expected = golden::read(c);
        REQUIRE_FALSE(expected.empty());
        CHECK(golden::run(c) == expected);
        CHECK(golden::run(c) == golden::run(c));
    }
}

TEST_CASE("square root example lands on a square root of 4") {
    const Run r = call({"root", "--p", "13", "--m", "1", "--r", "2", "--delta", "4", "--seed", "0"});
    CHECK(r.code == 0);
    const bool ok = r.out.find("root=2 ") != std::string::npos || r.out.find("root=11 ") != std::string::npos;
    CHECK(ok);
}

TEST_CASE("field and residue subcommands") {
    CHECK(call({"field", "--p", "2", "--m", "3"}).out == "p=2 m=3 modulus=1,1,0,1\n");
    CHECK(call({"field", "--p", "2", "--m", "3", "--modulus", "1,1,1,1"}).code == rootfield::cli::exit_error);
    CHECK(call({"residue", "--p", "13", "--m", "1", "--r", "3", "--delta", "5"}).out == "residue=true\n");
    const Run no = call({"residue", "--p", "13", "--m", "1", "--r", "3", "--delta", "2"});
    CHECK(no.out == "residue=false\n");
    CHECK(no.code == rootfield::cli::exit_non_residue);
}

TEST_CASE("decompose variants") {
    CHECK(call({"decompose", "--p", "3", "--m", "9", "--r", "5"}).out ==
          "case=coprime k=4 u=2 v=7873 a=1 b=96 period=4 n=2 modulus=19682\n");
    const Run q = call({"decompose", "--q", "4", "--m", "5", "--r", "7"});
    CHECK(q.code == 0);
    CHECK(q.out.find(" n=1 ") != std::string::npos);
    CHECK(q.out.find(" n_prime=3 ") != std::string::npos);
    const Run bad = call({"decompose", "--p", "3", "--m", "4", "--r", "5"});
    CHECK(bad.code == rootfield::cli::exit_error);
    CHECK(bad.err.find("PeriodTooLong") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
    const Run r = call({"oracle", "--p", "7", "--m", "1", "--r", "3", "--delta", "6"});
    CHECK(r.out == "count=3 residue_count=2 group_order=6\nroot=3\nroot=5\nroot=6\n");
    CHECK(call({"oracle", "--p", "7", "--m", "1", "--r", "3", "--delta", "2"}).code ==
          rootfield::cli::exit_non_residue);
}

TEST_CASE("bench subcommand writes csv to a file") {
    const auto path = std::filesystem::temp_directory_path() / "rootfield_bench_test.csv";
    const Run r = call({"bench", "--sweep", "p=7 m=5 r=2", "--out", path.string(), "--check"});
    CHECK(r.code == 0);
    CHECK(r.err == "rows=2 skipped=0\n");
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,d,m,r,case,path,mults,squarings,frobenius,n,n_prime,k,period,verified,wall_ns");
    std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == rootfield::cli::exit_error);
    CHECK(call({"root", "--p", "13"}).code == rootfield::cli::exit_error);
    CHECK(call({"root", "--p", "x", "--m", "1", "--r", "2", "--delta", "1"}).code == rootfield::cli::exit_error);
    CHECK(call({"root", "--help"}).code == rootfield::cli::exit_ok);
}
