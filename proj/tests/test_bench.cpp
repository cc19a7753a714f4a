#include "support.hpp"

#include <rootfield/bench.hpp>
#include <rootfield/error.hpp>

#include <doctest.h>

#include <sstream>

using namespace rootfield;

namespace {

std::string csv(const bench::SweepResult& result) {
    std::ostringstream out;
    bench::write_csv(out, result.rows);
    return out.str();
}

// Drops the trailing wall-clock column, the only nondeterministic field.
std::string without_timing(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        out += line.substr(0, line.rfind(',')) + "\n";
    return out;
}

}  // namespace

TEST_CASE("sweep parsing") {
    const auto spec = bench::SweepSpec::parse("p=3 m=9..11 r=5,7 # comment\np=7 m=5 r=2");
    REQUIRE(spec.entries.size() == 7);
    CHECK(spec.entries.back().p == 7);
    CHECK(spec.entries[1].m == 9);
    CHECK(spec.entries[1].r == 7);
    CHECK(bench::SweepSpec::parse("").entries.empty());
    CHECK_THROWS_AS(bench::SweepSpec::parse("p=3 m=9"), Error);
    CHECK_THROWS_AS(bench::SweepSpec::parse("p=3 m=9 r=5 x=1"), Error);
    CHECK_THROWS_AS(bench::SweepSpec::parse("p=3 m=9..2 r=5"), Error);
}

TEST_CASE("empty sweep gives the header only") {
    CHECK(csv(bench::run_sweep({}, 0)) == std::string(bench::csv_header) + "\n");
}

TEST_CASE("ramified instance") {
    const auto result = bench::run_sweep(bench::SweepSpec::parse("p=7 m=5 r=2"), 0);
    REQUIRE(result.rows.size() == 2);
    const auto& fast = result.rows[0];
    CHECK(fast.case_tag == "ramified");
    CHECK(fast.path_tag == "ramified_fast");
    CHECK(fast.period == 2);
    CHECK(fast.n == 2);
    CHECK(fast.verified);
    CHECK(result.rows[1].path_tag == "naive_fallback");
    CHECK(bench::check_row_invariants(result.rows).empty());
}

TEST_CASE("skips and non-periodic rows") {
    const auto result = bench::run_sweep(bench::SweepSpec::parse("p=4 m=2 r=3; p=13 m=1 r=2"), 0);
    CHECK(result.skipped.size() == 1);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].case_tag == "higher_power");
    CHECK(result.rows[0].path_tag == "amm");
    CHECK_FALSE(result.rows[0].period.has_value());
}

TEST_CASE("property: sweep output is reproducible and within bounds") {
    const auto spec = bench::SweepSpec::parse("p=3 m=9..40 r=5; p=2 m=8..30 r=3,7; p=5 d=1,2 m=6..20 r=3,7,11");
    const auto a = bench::run_sweep(spec, 42);
    const auto b = bench::run_sweep(spec, 42);
    CHECK(without_timing(csv(a)) == without_timing(csv(b)));
    const auto violations = bench::check_row_invariants(a.rows);
    for (const auto& v : violations)
        MESSAGE(v);
    CHECK(violations.empty());
    for (const auto& row : a.rows) {
        CHECK(row.verified);
        if (row.n && row.n_prime)
            CHECK(*row.n_prime >= *row.n);
    }
}

TEST_CASE("row seeds differ per triple") {
    CHECK(bench::row_seed(0, 3, 9, 5) != bench::row_seed(0, 3, 10, 5));
    CHECK(bench::row_seed(1, 3, 9, 5) != bench::row_seed(0, 3, 9, 5));
    CHECK(bench::naive_exponent(3, 9, 5) == 7873);
    CHECK(bench::naive_exponent(7, 5, 2) == 4202);
}
