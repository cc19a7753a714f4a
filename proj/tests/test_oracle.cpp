#include "support.hpp"

#include <rootfield/error.hpp>
#include <rootfield/field.hpp>
#include <rootfield/oracle.hpp>

#include <doctest.h>

#include <numeric>

using namespace rootfield;
using support::u64;

namespace {

std::vector<std::string> formatted(const FieldCtx& ctx, const std::vector<Elem>& xs) {
    std::vector<std::string> out;
    for (const Elem& x : xs)
        out.push_back(ctx.format(x));
    return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("brute roots in F_7") {
    const FieldCtx f7 = FieldCtx::make(7, 1);
    CHECK(formatted(f7, oracle::brute_root(f7, f7.from_int(6), 3).all_roots) == Strings{"3", "5", "6"});
    CHECK(oracle::brute_root(f7, f7.from_int(2), 3).all_roots.empty());
    CHECK(formatted(f7, oracle::brute_root(f7, f7.zero(), 4).all_roots) == Strings{"0"});
    const auto report = oracle::brute_root(f7, f7.from_int(2), 3);
    CHECK(report.residue_count == 2);
    CHECK(report.group_order == 6);
}

TEST_CASE("residue sets") {
    const FieldCtx f13 = FieldCtx::make(13, 1);
    CHECK(formatted(f13, oracle::enumerate_residues(f13, 3)) == Strings{"1", "5", "8", "12"});
    CHECK(oracle::enumerate_residues(f13, 5).size() == 12);
    const FieldCtx f7 = FieldCtx::make(7, 1);
    CHECK(formatted(f7, oracle::enumerate_residues(f7, 2)) == Strings{"1", "2", "4"});
}

TEST_CASE("limits") {
    const FieldCtx big = FieldCtx::make(2, 21);
    CHECK_THROWS_AS(oracle::enumerate_residues(big, 3), Error);
    try {
        oracle::RootTable(big, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldTooLarge);
    }
}

TEST_CASE("property: residue count equals (q - 1) / gcd(r, q - 1)") {
    for (const auto& [p, m] : {std::pair<u64, u64>{2, 4}, {3, 3}, {5, 2}, {7, 2}, {13, 1}, {2, 6}}) {
        const FieldCtx ctx = FieldCtx::make(p, m);
        const u64 order = support::ipow(p, m) - 1;
        for (u64 r = 1; r <= 20; ++r) {
            const oracle::RootTable table(ctx, r);
            CAPTURE(p);
            CAPTURE(m);
            CAPTURE(r);
            CHECK(table.residue_count() == order / std::gcd(r, order));
            CHECK(oracle::enumerate_residues(ctx, r).size() == table.residue_count());
            u64 total = 0;
            for (u64 i = 0; i < table.size(); ++i)
                total += table.roots_of(i).size();
            CHECK(total == table.size());
        }
    }
}

TEST_CASE("property: roots returned by the oracle are roots") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Elem delta = random_element(ctx, rng);
        const u64 r = support::draw(rng, 1, 16);
        const auto report = oracle::brute_root(ctx, delta, r);
        for (const Elem& x : report.all_roots)
            CHECK(ctx.pow(x, Int(static_cast<unsigned long>(r))) == delta);
        for (std::size_t i = 1; i < report.all_roots.size(); ++i)
            CHECK(ctx.index_of(report.all_roots[i - 1]) < ctx.index_of(report.all_roots[i]));
    }
}
