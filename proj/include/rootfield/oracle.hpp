#pragma once

#include "rootfield/field.hpp"

#include <cstdint>
#include <vector>

namespace rootfield::oracle {

/// Largest field (p^m elements) the enumerators accept.
inline constexpr std::uint64_t max_field_size = std::uint64_t{1} << 20;

struct OracleReport {
    /// Every gamma with gamma^r = delta, in base-p counting order.
    std::vector<Elem> all_roots;
    /// Number of distinct nonzero r-th powers.
    std::uint64_t residue_count = 0;
    /// p^m - 1.
    std::uint64_t group_order = 0;
};

/// Full enumeration of gamma^r for every gamma, with gamma^r computed by repeated
/// multiplication. Throws FieldTooLarge above max_field_size.
OracleReport brute_root(const FieldCtx& ctx, const Elem& delta, std::uint64_t r);

/// Image of x -> x^r on nonzero elements, in base-p counting order.
std::vector<Elem> enumerate_residues(const FieldCtx& ctx, std::uint64_t r);

/// One enumeration answering every delta at once: roots_of[index(delta)] lists the indices of
/// all gamma with gamma^r = delta, ascending.
class RootTable {
public:
    RootTable(const FieldCtx& ctx, std::uint64_t r);

    const std::vector<std::uint64_t>& roots_of(std::uint64_t delta_index) const { return roots_[delta_index]; }
    std::uint64_t residue_count() const noexcept { return residue_count_; }
    std::uint64_t size() const noexcept { return roots_.size(); }

private:
    std::vector<std::vector<std::uint64_t>> roots_;
    std::uint64_t residue_count_ = 0;
};

}  // namespace rootfield::oracle
