#include "rootfield/bench.hpp"

#include "rootfield/error.hpp"
#include "rootfield/field.hpp"
#include "rootfield/periodic.hpp"
#include "rootfield/root.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rootfield::bench {

namespace {

Int big(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

std::vector<std::string> split(std::string_view text, std::string_view separators) {
    std::vector<std::string> out;
    std::string current;
    for (const char ch : text) {
        if (separators.find(ch) != std::string_view::npos) {
            out.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    out.push_back(current);
    return out;
}

std::string strip(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<Int> parse_values(std::string_view text) {
    std::vector<Int> out;
    for (const auto& piece : split(text, ",")) {
        const auto dots = piece.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(piece));
            continue;
        }
        const Int lo = parse_int(std::string_view(piece).substr(0, dots));
        const Int hi = parse_int(std::string_view(piece).substr(dots + 2));
        if (hi < lo)
            throw Error(ErrorCode::ParseError, "empty range '" + piece + "'");
        for (Int v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

std::uint64_t small(const Int& v, const char* what) {
    if (!fits_u64(v))
        throw Error(ErrorCode::ParseError, std::string(what) + " out of range");
    return to_u64(v);
}

std::string csv_opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

SweepSpec SweepSpec::parse(std::string_view text) {
    SweepSpec spec;
    std::string cleaned;
    for (const auto& line : split(text, "\n")) {
        const auto hash = line.find('#');
        cleaned += line.substr(0, hash);
        cleaned += ';';
    }
    for (const auto& raw : split(cleaned, ";")) {
        const std::string entry = strip(raw);
        if (entry.empty())
            continue;
        std::map<std::string, std::vector<Int>> values;
        std::istringstream in(entry);
        std::string token;
        while (in >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorCode::ParseError, "expected key=value in sweep entry, got '" + token + "'");
            const std::string key = token.substr(0, eq);
            if (key != "p" && key != "d" && key != "m" && key != "r")
                throw Error(ErrorCode::ParseError, "unknown sweep key '" + key + "'");
            values[key] = parse_values(std::string_view(token).substr(eq + 1));
        }
        if (!values.count("p") || !values.count("m") || !values.count("r"))
            throw Error(ErrorCode::ParseError, "sweep entry needs p, m and r: '" + entry + "'");
        if (!values.count("d"))
            values["d"] = {Int(1)};
        for (const Int& p : values["p"])
            for (const Int& d : values["d"])
                for (const Int& m : values["m"])
                    for (const Int& r : values["r"])
                        spec.entries.push_back({p, small(d, "d"), small(m, "m"), small(r, "r")});
    }
    return spec;
}

std::uint64_t row_seed(std::uint64_t seed, const Int& p, std::uint64_t m, std::uint64_t r) {
    const std::string key = to_string(p) + ":" + std::to_string(m) + ":" + std::to_string(r);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : key) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return seed ^ h;
}

Int naive_exponent(const Int& p, std::uint64_t m, std::uint64_t r) {
    const CaseAnalysis info = analyze_case(p, m, r);
    const Int order = rootfield::pow(p, m) - 1;
    if (info.tag == GcdTag::Coprime)
        return mod_inverse(big(r), order);
    if (info.tag == GcdTag::RamifiedExact)
        return mod_inverse(big(r), order / big(r));
    throw Error(ErrorCode::UnsupportedPath, "no single-exponent root formula for this case");
}

SweepResult run_sweep(const SweepSpec& spec, std::uint64_t seed) {
    SweepResult result;
    std::map<std::pair<Int, std::uint64_t>, FieldCtx> fields;

    for (const SweepEntry& entry : spec.entries) {
        try {
            auto key = std::make_pair(entry.p, entry.m);
            auto it = fields.find(key);
            if (it == fields.end())
                it = fields.emplace(key, FieldCtx::make(entry.p, entry.m)).first;
            const FieldCtx& ctx = it->second;
            const CaseAnalysis info = analyze_case(entry.p, entry.m, entry.r);

            BenchRow base;
            base.p = entry.p;
            base.d = entry.d;
            base.m = entry.m;
            base.r = entry.r;
            base.k = info.k;
            switch (info.tag) {
            case GcdTag::Coprime:
                base.case_tag = "coprime";
                base.period = info.k;
                break;
            case GcdTag::RamifiedExact:
                base.case_tag = "ramified";
                base.period = info.k * entry.r;
                break;
            case GcdTag::HigherPower: base.case_tag = "higher_power"; break;
            case GcdTag::Partial: base.case_tag = "partial"; break;
            }
            if (base.period)
                base.n_prime = entry.m / *base.period;
            if (entry.d >= 1 && entry.m % entry.d == 0) {
                try {
                    base.n = decompose_base_q(rootfield::pow(entry.p, entry.d), entry.m / entry.d, entry.r).n;
                } catch (const Error&) {
                }
            }

            std::mt19937_64 rng(row_seed(seed, entry.p, entry.m, entry.r));
            Elem gamma;
            do {
                gamma = random_element(ctx, rng);
            } while (ctx.is_zero(gamma));
            const Elem delta = info.tag == GcdTag::Coprime ? gamma : ctx.pow(gamma, big(entry.r));

            auto run = [&](PathPolicy policy) {
                const auto start = std::chrono::steady_clock::now();
                const RootOutcome outcome = rth_root(ctx, delta, entry.r, seed, policy);
                const auto stop = std::chrono::steady_clock::now();
                if (!outcome.verified || (outcome.found() && ctx.pow(*outcome.root, big(entry.r)) != delta))
                    throw std::logic_error("verification failed for p=" + to_string(entry.p) +
                                           " m=" + std::to_string(entry.m) + " r=" + std::to_string(entry.r));
                BenchRow row = base;
                row.path_tag = std::string(path_name(outcome.path));
                row.mults = outcome.counters.mults;
                row.squarings = outcome.counters.squarings;
                row.frobenius = outcome.counters.frobenius;
                row.verified = true;
                row.wall_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
                result.rows.push_back(std::move(row));
                return outcome.path;
            };

            const PathTag first = run(PathPolicy::Auto);
            if ((info.tag == GcdTag::Coprime || info.tag == GcdTag::RamifiedExact) &&
                (first == PathTag::CoprimeFast || first == PathTag::RamifiedFast))
                run(PathPolicy::Naive);
        } catch (const Error& e) {
            result.skipped.push_back({entry, e.what()});
        }
    }

    std::stable_sort(result.rows.begin(), result.rows.end(), [](const BenchRow& a, const BenchRow& b) {
        if (a.p != b.p)
            return a.p < b.p;
        if (a.m != b.m)
            return a.m < b.m;
        if (a.r != b.r)
            return a.r < b.r;
        return a.d < b.d;
    });
    return result;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << csv_header << '\n';
    for (const BenchRow& row : rows) {
        out << to_string(row.p) << ',' << row.d << ',' << row.m << ',' << row.r << ',' << row.case_tag << ','
            << row.path_tag << ',' << row.mults << ',' << row.squarings << ',' << row.frobenius << ','
            << csv_opt(row.n) << ',' << csv_opt(row.n_prime) << ',' << row.k << ',' << csv_opt(row.period) << ','
            << (row.verified ? "true" : "false") << ',' << row.wall_ns << '\n';
    }
}

std::vector<std::string> check_row_invariants(const std::vector<BenchRow>& rows) {
    std::vector<std::string> violations;
    auto where = [](const BenchRow& row) {
        return "p=" + to_string(row.p) + " d=" + std::to_string(row.d) + " m=" + std::to_string(row.m) +
               " r=" + std::to_string(row.r) + " path=" + row.path_tag + ": ";
    };
    const BenchRow* pending_fast = nullptr;
    for (const BenchRow& row : rows) {
        if (!row.verified)
            violations.push_back(where(row) + "row not verified");
        if (row.n && row.n_prime && *row.n_prime < *row.n)
            violations.push_back(where(row) + "n' < n");
        const bool fast = row.path_tag == "coprime_fast" || row.path_tag == "ramified_fast";
        if (fast && row.period && row.n_prime) {
            const std::uint64_t bound =
                2 * ceil_log2(*row.n_prime) + 4 * *row.period * ceil_log2(row.p) + row.r + 2;
            if (row.mults > bound)
                violations.push_back(where(row) + "fast-path mults " + std::to_string(row.mults) +
                                     " exceed bound " + std::to_string(bound));
            pending_fast = &row;
        } else if (row.path_tag == "naive_fallback" && row.period) {
            const Int v = naive_exponent(row.p, row.m, row.r);
            if (v > 0 && row.squarings + row.mults < floor_log2(v))
                violations.push_back(where(row) + "naive path cheaper than floor(log2 v)");
            if (pending_fast != nullptr && pending_fast->p == row.p && pending_fast->m == row.m &&
                pending_fast->r == row.r && row.m >= 4 * *row.period) {
                const std::uint64_t fast_total = pending_fast->mults + pending_fast->squarings;
                const std::uint64_t naive_total = row.mults + row.squarings;
                if (fast_total >= naive_total)
                    violations.push_back(where(row) + "fast path (" + std::to_string(fast_total) +
                                         ") not cheaper than naive (" + std::to_string(naive_total) + ")");
            }
            pending_fast = nullptr;
        } else {
            pending_fast = nullptr;
        }
    }
    return violations;
}

}  // namespace rootfield::bench
