#include "rootfield/cli.hpp"

#include "rootfield/bench.hpp"
#include "rootfield/error.hpp"
#include "rootfield/field.hpp"
#include "rootfield/oracle.hpp"
#include "rootfield/periodic.hpp"
#include "rootfield/root.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rootfield::cli {

namespace {

struct FieldArgs {
    std::string p;
    std::uint64_t m = 0;
    std::string modulus;

    void attach(CLI::App* sub) {
        sub->add_option("--p", p, "Prime characteristic (decimal)")->required();
        sub->add_option("--m", m, "Extension degree over F_p")->required();
        sub->add_option("--modulus", modulus, "Monic modulus coefficients c0,...,cm (default: canonical)");
    }

    FieldCtx build() const {
        std::optional<std::vector<Int>> mod;
        if (!modulus.empty())
            mod = parse_coeff_list(modulus);
        return FieldCtx::make(parse_int(p), m, mod);
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ROOTFIELD_SEED"); env != nullptr && *env != '\0')
        return parse_u64(env);
    return 0;
}

std::string describe_record(const PeriodicExponent& pe) {
    std::ostringstream line;
    line << "case=" << case_name(pe.case_tag) << " k=" << pe.k << " u=" << pe.u << " v=" << to_string(pe.v)
         << " a=" << to_string(pe.a) << " b=" << to_string(pe.b) << " period=" << pe.period << " n=" << pe.n
         << " modulus=" << to_string(pe.congruence_modulus);
    return line.str();
}

std::string counters_text(const OpCounter& c) {
    return "mults=" + std::to_string(c.mults) + " squarings=" + std::to_string(c.squarings) +
           " frobenius=" + std::to_string(c.frobenius);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"r-th roots in finite fields F_{p^m} with periodic-exponent fast paths", "rootfield"};
    app.require_subcommand(1);

    FieldArgs field_args;
    auto* field_cmd = app.add_subcommand("field", "Construct a field and print its description");
    field_args.attach(field_cmd);

    FieldArgs root_field;
    std::uint64_t root_r = 0;
    std::string root_delta;
    std::optional<std::uint64_t> root_seed;
    std::string root_path = "auto";
    auto* root_cmd = app.add_subcommand("root", "Compute an r-th root of delta");
    root_field.attach(root_cmd);
    root_cmd->add_option("--r", root_r, "Root degree r >= 2")->required();
    root_cmd->add_option("--delta", root_delta, "Element coefficients c0,...,c_{m-1}")->required();
    root_cmd->add_option("--seed", root_seed, "Seed for the non-residue search (default ROOTFIELD_SEED or 0)");
    root_cmd->add_option("--path", root_path, "auto|amm|periodic|naive")
        ->check(CLI::IsMember({"auto", "amm", "periodic", "naive"}));

    FieldArgs residue_field;
    std::uint64_t residue_r = 0;
    std::string residue_delta;
    auto* residue_cmd = app.add_subcommand("residue", "Test whether delta is an r-th power (r | p^m - 1)");
    residue_field.attach(residue_cmd);
    residue_cmd->add_option("--r", residue_r, "Prime r dividing p^m - 1")->required();
    residue_cmd->add_option("--delta", residue_delta, "Element coefficients")->required();

    std::string dec_p, dec_q;
    std::uint64_t dec_m = 0, dec_r = 0;
    auto* decompose_cmd = app.add_subcommand("decompose", "Print the periodic decomposition of r^{-1}");
    auto* dec_p_opt = decompose_cmd->add_option("--p", dec_p, "Prime base p");
    decompose_cmd->add_option("--q", dec_q, "Prime-power base q = p^d (base-q variant)")->excludes(dec_p_opt);
    decompose_cmd->add_option("--m", dec_m, "Degree over the base field")->required();
    decompose_cmd->add_option("--r", dec_r, "Root degree r >= 2")->required();

    FieldArgs oracle_field;
    std::uint64_t oracle_r = 0;
    std::string oracle_delta;
    std::optional<std::uint64_t> oracle_seed;
    std::string oracle_path = "auto";
    auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate every r-th root of delta by brute force");
    oracle_field.attach(oracle_cmd);
    oracle_cmd->add_option("--r", oracle_r, "Root degree r >= 1")->required();
    oracle_cmd->add_option("--delta", oracle_delta, "Element coefficients")->required();
    oracle_cmd->add_option("--seed", oracle_seed, "Accepted for symmetry with root; unused");
    oracle_cmd->add_option("--path", oracle_path, "Accepted for symmetry with root; unused");

    std::string bench_sweep;
    std::string bench_out = "-";
    std::optional<std::uint64_t> bench_seed;
    bool bench_check = false;
    auto* bench_cmd = app.add_subcommand("bench", "Run a parameter sweep and write operation counts as CSV");
    bench_cmd->add_option("--sweep", bench_sweep, "Sweep file, or an inline spec such as 'p=3 m=9..60 r=5'")
        ->required();
    bench_cmd->add_option("--out", bench_out, "CSV output path ('-' for stdout)");
    bench_cmd->add_option("--seed", bench_seed, "Base seed (default ROOTFIELD_SEED or 0)");
    bench_cmd->add_flag("--check", bench_check, "Exit 1 if any operation-count bound is violated");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (field_cmd->parsed()) {
            out << field_args.build().describe() << '\n';
            return exit_ok;
        }

        if (root_cmd->parsed()) {
            const FieldCtx ctx = root_field.build();
            const Elem delta = ctx.parse_element(root_delta);
            const auto policy = parse_policy(root_path);
            const RootOutcome outcome = rth_root(ctx, delta, root_r, root_seed.value_or(default_seed()), *policy);
            out << "status=" << status_name(outcome.status)
                << " root=" << (outcome.root ? ctx.format(*outcome.root) : std::string("none"))
                << " path=" << path_name(outcome.path) << ' ' << counters_text(outcome.counters) << '\n';
            return outcome.found() ? exit_ok : exit_non_residue;
        }

        if (residue_cmd->parsed()) {
            const FieldCtx ctx = residue_field.build();
            const bool residue = is_rth_residue(ctx, ctx.parse_element(residue_delta), residue_r);
            out << "residue=" << (residue ? "true" : "false") << '\n';
            return residue ? exit_ok : exit_non_residue;
        }

        if (decompose_cmd->parsed()) {
            if (!dec_q.empty()) {
                const BaseQDecomposition dq = decompose_base_q(parse_int(dec_q), dec_m, dec_r);
                out << describe_record(dq.exponent) << " n_prime=" << dq.n_prime << " k_prime=" << dq.k_prime << '\n';
                return exit_ok;
            }
            if (dec_p.empty())
                throw Error(ErrorCode::InvalidArgument, "decompose needs --p or --q");
            const Int p = parse_int(dec_p);
            const CaseAnalysis info = analyze_case(p, dec_m, dec_r);
            if (info.tag == GcdTag::Coprime) {
                out << describe_record(decompose_coprime(p, dec_m, dec_r)) << '\n';
            } else if (info.tag == GcdTag::RamifiedExact) {
                out << describe_record(decompose_ramified(p, dec_m, dec_r)) << '\n';
            } else {
                throw Error(ErrorCode::UnsupportedPath, std::string("no periodic decomposition in the ") +
                                                            std::string(tag_name(info.tag)) + " case");
            }
            return exit_ok;
        }

        if (oracle_cmd->parsed()) {
            const FieldCtx ctx = oracle_field.build();
            const oracle::OracleReport report = oracle::brute_root(ctx, ctx.parse_element(oracle_delta), oracle_r);
            out << "count=" << report.all_roots.size() << " residue_count=" << report.residue_count
                << " group_order=" << report.group_order << '\n';
            for (const Elem& root : report.all_roots)
                out << "root=" << ctx.format(root) << '\n';
            return report.all_roots.empty() ? exit_non_residue : exit_ok;
        }

        if (bench_cmd->parsed()) {
            std::string text = bench_sweep;
            if (std::filesystem::is_regular_file(bench_sweep)) {
                std::ifstream in(bench_sweep);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            const bench::SweepResult result =
                bench::run_sweep(bench::SweepSpec::parse(text), bench_seed.value_or(default_seed()));
            if (bench_out == "-") {
                bench::write_csv(out, result.rows);
            } else {
                std::ofstream file(bench_out);
                if (!file)
                    throw Error(ErrorCode::InvalidArgument, "cannot open " + bench_out + " for writing");
                bench::write_csv(file, result.rows);
            }
            for (const auto& skip : result.skipped)
                err << "skipped p=" << to_string(skip.entry.p) << " d=" << skip.entry.d << " m=" << skip.entry.m
                    << " r=" << skip.entry.r << ": " << skip.reason << '\n';
            err << "rows=" << result.rows.size() << " skipped=" << result.skipped.size() << '\n';
            if (bench_check) {
                const auto violations = bench::check_row_invariants(result.rows);
                for (const auto& v : violations)
                    err << "violation: " << v << '\n';
                if (!violations.empty())
                    return exit_error;
            }
            return exit_ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

}  // namespace rootfield::cli
