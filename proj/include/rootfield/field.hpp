#pragma once

#include "rootfield/integer.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rootfield {

/// Operation tallies for one computation. One unit per full extension-field product;
/// prime-subfield scalar work, additions and Frobenius matrix work are not multiplications.
struct OpCounter {
    std::uint64_t mults = 0;
    std::uint64_t squarings = 0;
    std::uint64_t frobenius = 0;
    std::uint64_t inversions = 0;

    /// Every extension-field product, general or squaring.
    std::uint64_t products() const noexcept { return mults + squarings; }

    OpCounter& operator+=(const OpCounter& other) noexcept {
        mults += other.mults;
        squarings += other.squarings;
        frobenius += other.frobenius;
        inversions += other.inversions;
        return *this;
    }

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

class FieldCtx;

/// Element of F_{p^m} in the polynomial basis: m residues in [0, p), constant term first.
/// Only a FieldCtx can mint one, so every Elem in circulation is reduced and zero-padded.
class Elem {
public:
    Elem() = default;

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    friend bool operator==(const Elem& a, const Elem& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator<(const Elem& a, const Elem& b) { return a.coeffs_ < b.coeffs_; }

private:
    friend class FieldCtx;
    explicit Elem(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<Int> coeffs_;
};

/// Immutable description of F_{p^m} = Z_p[x]/(f) with f monic irreducible of degree m.
/// Copies share the same underlying tables and are safe to use from several threads.
class FieldCtx {
public:
    /// Checks primality of p and irreducibility of the modulus. When no modulus is given the
    /// canonical one is chosen: the irreducible monic f whose lower coefficients, read as the
    /// base-p integer sum c_i p^i, are smallest.
    static FieldCtx make(const Int& p, std::uint64_t m,
                         const std::optional<std::vector<Int>>& modulus = std::nullopt);

    const Int& p() const noexcept;
    std::uint64_t m() const noexcept;
    /// Monic modulus, m + 1 coefficients, constant term first.
    const std::vector<Int>& modulus() const noexcept;
    /// Column j holds the coefficients of x^{j p} mod f.
    const std::vector<std::vector<Int>>& frobenius_matrix() const noexcept;
    /// p^m - 1, the order of the multiplicative group.
    const Int& order_minus_one() const noexcept;
    Int cardinality() const;

    Elem zero() const;
    Elem one() const;
    /// The class of x (equals the constant root of f when m = 1).
    Elem generator() const;
    Elem from_int(const Int& value) const;
    /// Validates range and length; shorter vectors are zero-padded.
    Elem element(const std::vector<Int>& coeffs) const;
    Elem parse_element(std::string_view text) const;
    std::string format(const Elem& a) const;
    /// `p=<p> m=<m> modulus=<c0,...,cm>`
    std::string describe() const;

    /// Base-p counting order: index = sum c_i p^i.
    Int index_of(const Elem& a) const;
    Elem from_index(const Int& index) const;

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;

    Elem mul(const Elem& a, const Elem& b, OpCounter& counter) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem sqr(const Elem& a, OpCounter& counter) const;

    /// Extended Euclid on polynomials; throws ZeroInverse for a = 0.
    Elem inv(const Elem& a, OpCounter& counter) const;
    Elem inv(const Elem& a) const;

    /// Left-to-right square-and-multiply over the full exponent (no reduction mod p^m - 1,
    /// so the counters reflect the exponent actually supplied). 0^0 = 1.
    Elem pow(const Elem& a, const Int& e, OpCounter& counter) const;
    Elem pow(const Elem& a, const Int& e) const;

    /// a^{p^j}: j is reduced mod m, then the Frobenius matrix is applied that many times.
    Elem frobenius(const Elem& a, std::uint64_t j, OpCounter& counter) const;
    Elem frobenius(const Elem& a, std::uint64_t j) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b);

    struct Impl;

private:
    explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    Elem wrap(std::vector<Int> coeffs) const { return Elem(std::move(coeffs)); }

    std::shared_ptr<const Impl> impl_;
};

/// Parses `p=<decimal> m=<decimal> [modulus=<c0,...,cm>]`.
FieldCtx parse_field(std::string_view text);

/// Comma-separated decimal list, e.g. "1,0,1".
std::vector<Int> parse_coeff_list(std::string_view text);

/// Uniform-ish coefficients drawn from the engine; deterministic for a given engine state.
Elem random_element(const FieldCtx& ctx, std::mt19937_64& rng);

/// Polynomial-level irreducibility check over Z_p (Rabin's test). Exposed for tests.
bool is_irreducible(const Int& p, const std::vector<Int>& monic_modulus);

}  // namespace rootfield
