#include "rootfield/oracle.hpp"

#include "rootfield/error.hpp"

namespace rootfield::oracle {

namespace {

std::uint64_t checked_size(const FieldCtx& ctx) {
    const Int size = ctx.cardinality();
    if (size > Int(static_cast<unsigned long>(max_field_size)))
        throw Error(ErrorCode::FieldTooLarge, "field has " + to_string(size) + " elements; oracle limit is 2^20");
    return size.get_ui();
}

// Right-to-left binary powering, independent of FieldCtx::pow's left-to-right ladder.
Elem power_rtl(const FieldCtx& ctx, Elem base, std::uint64_t r) {
    Elem acc = ctx.one();
    while (r > 0) {
        if ((r & 1U) != 0)
            acc = ctx.mul(acc, base);
        base = ctx.mul(base, base);
        r >>= 1;
    }
    return acc;
}

}  // namespace

RootTable::RootTable(const FieldCtx& ctx, std::uint64_t r) {
    const std::uint64_t size = checked_size(ctx);
    roots_.resize(size);
    for (std::uint64_t g = 0; g < size; ++g) {
        const Elem gamma = ctx.from_index(Int(static_cast<unsigned long>(g)));
        const std::uint64_t image = ctx.index_of(power_rtl(ctx, gamma, r)).get_ui();
        auto& bucket = roots_[image];
        if (bucket.empty() && image != 0)
            ++residue_count_;
        bucket.push_back(g);
    }
}

OracleReport brute_root(const FieldCtx& ctx, const Elem& delta, std::uint64_t r) {
    const RootTable table(ctx, r);
    OracleReport report;
    report.group_order = table.size() - 1;
    report.residue_count = table.residue_count();
    for (const std::uint64_t g : table.roots_of(ctx.index_of(delta).get_ui()))
        report.all_roots.push_back(ctx.from_index(Int(static_cast<unsigned long>(g))));
    return report;
}

std::vector<Elem> enumerate_residues(const FieldCtx& ctx, std::uint64_t r) {
    const RootTable table(ctx, r);
    std::vector<Elem> out;
    for (std::uint64_t i = 1; i < table.size(); ++i)
        if (!table.roots_of(i).empty())
            out.push_back(ctx.from_index(Int(static_cast<unsigned long>(i))));
    return out;
}

}  // namespace rootfield::oracle
