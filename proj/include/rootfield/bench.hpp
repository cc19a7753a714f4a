#pragma once

#include "rootfield/integer.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rootfield::bench {

/// One parameter triple. The field is F_{p^m} (m counts degrees over F_p); d selects the
/// subfield F_q, q = p^d, used for the base-q length comparison.
struct SweepEntry {
    Int p;
    std::uint64_t d = 1;
    std::uint64_t m = 0;
    std::uint64_t r = 0;
};

/// Entries separated by ';' or newlines, '#' starts a comment. Each entry is whitespace
/// separated key=value pairs over p, d, m, r; a value is an integer, an inclusive range
/// `lo..hi`, or a comma list. Entries expand to the cartesian product.
///   p=3 m=9..60 r=5; p=7 m=5 r=2; p=2 d=2 m=10 r=7
struct SweepSpec {
    std::vector<SweepEntry> entries;

    static SweepSpec parse(std::string_view text);
};

inline constexpr std::string_view csv_header =
    "p,d,m,r,case,path,mults,squarings,frobenius,n,n_prime,k,period,verified,wall_ns";

struct BenchRow {
    Int p;
    std::uint64_t d = 1;
    std::uint64_t m = 0;
    std::uint64_t r = 0;
    std::string case_tag;
    std::string path_tag;
    std::uint64_t mults = 0;
    std::uint64_t squarings = 0;
    std::uint64_t frobenius = 0;
    /// Base-q periodic length (absent when the base-q conditions fail).
    std::optional<std::uint64_t> n;
    /// Base-p periodic length floor(m / period) (absent without a period).
    std::optional<std::uint64_t> n_prime;
    std::uint64_t k = 0;
    std::optional<std::uint64_t> period;
    bool verified = false;
    std::uint64_t wall_ns = 0;
};

struct SkippedRow {
    SweepEntry entry;
    std::string reason;
};

struct SweepResult {
    std::vector<BenchRow> rows;
    std::vector<SkippedRow> skipped;
};

/// Runs the dispatcher's path and, for coprime/ramified triples whose dispatcher path is
/// periodic, the full-width exponent path on the same delta. delta is derived from
/// seed ^ FNV-1a("p:m:r"); outside the coprime case it is gamma^r for such a gamma so that a
/// root exists. Rows are sorted by (p, m, r, d); a failed verification throws.
SweepResult run_sweep(const SweepSpec& spec, std::uint64_t seed);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Operation-count bounds per row and per fast/naive pair; returns human-readable violations.
std::vector<std::string> check_row_invariants(const std::vector<BenchRow>& rows);

/// The full-width exponent the naive path raises to (r^{-1} modulo p^m - 1 or (p^m - 1) / r).
Int naive_exponent(const Int& p, std::uint64_t m, std::uint64_t r);

std::uint64_t row_seed(std::uint64_t seed, const Int& p, std::uint64_t m, std::uint64_t r);

}  // namespace rootfield::bench
