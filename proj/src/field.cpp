#include "rootfield/field.hpp"

#include "rootfield/error.hpp"
#include "zp_poly.hpp"

#include <sstream>

namespace rootfield {

using detail::BigRing;
using detail::Poly;
using detail::WordRing;

struct FieldCtx::Impl {
    Int p;
    std::uint64_t m = 0;
    std::vector<Int> modulus;
    std::vector<std::vector<Int>> frob;
    Int order_minus_one;

    BigRing big;
    std::optional<WordRing> word;
    Poly<WordRing> word_modulus;
    std::vector<Poly<WordRing>> word_frob;

    Poly<WordRing> to_word(const Elem& a) const {
        Poly<WordRing> out(m);
        for (std::size_t i = 0; i < m; ++i)
            out[i] = a.coeffs()[i].get_ui();
        return out;
    }
};

namespace {

std::vector<Int> to_ints(const Poly<WordRing>& a) {
    std::vector<Int> out;
    out.reserve(a.size());
    for (const auto c : a)
        out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

Poly<WordRing> to_words(const std::vector<Int>& a) {
    Poly<WordRing> out;
    out.reserve(a.size());
    for (const auto& c : a)
        out.push_back(c.get_ui());
    return out;
}

struct Candidate {
    bool irreducible;
    std::vector<std::vector<Int>> frob;
};

Candidate test_candidate(const Int& p, const std::vector<Int>& f) {
    if (WordRing::accepts(p)) {
        const WordRing ring{p.get_ui()};
        const auto fw = to_words(f);
        const auto cols = detail::frobenius_columns(ring, fw);
        if (!detail::rabin_irreducible(ring, fw, cols))
            return {false, {}};
        std::vector<std::vector<Int>> out;
        for (const auto& col : cols)
            out.push_back(to_ints(col));
        return {true, std::move(out)};
    }
    const BigRing ring{p};
    auto cols = detail::frobenius_columns(ring, f);
    if (!detail::rabin_irreducible(ring, f, cols))
        return {false, {}};
    return {true, std::move(cols)};
}

}  // namespace

bool is_irreducible(const Int& p, const std::vector<Int>& monic_modulus) {
    if (monic_modulus.size() < 2 || monic_modulus.back() != 1)
        throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree >= 1");
    return test_candidate(p, monic_modulus).irreducible;
}

FieldCtx FieldCtx::make(const Int& p, std::uint64_t m, const std::optional<std::vector<Int>>& modulus) {
    if (!is_prime(p))
        throw Error(ErrorCode::NonPrimeP, to_string(p) + " is not prime");
    if (m < 1)
        throw Error(ErrorCode::DegreeMismatch, "degree must be at least 1");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->big = BigRing{p};
    impl->order_minus_one = rootfield::pow(p, m) - 1;

    if (modulus) {
        if (modulus->size() != m + 1)
            throw Error(ErrorCode::DegreeMismatch, "modulus has " + std::to_string(modulus->size()) +
                                                       " coefficients, expected " + std::to_string(m + 1));
        std::vector<Int> f;
        for (const auto& c : *modulus)
            f.push_back(impl->big.from(c));
        if (f.back() != 1)
            throw Error(ErrorCode::DegreeMismatch, "modulus is not monic");
        auto result = test_candidate(p, f);
        if (!result.irreducible)
            throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over Z_" + to_string(p));
        impl->modulus = std::move(f);
        impl->frob = std::move(result.frob);
    } else {
        // Walk lower-coefficient vectors in base-p counting order; the first irreducible wins.
        const Int limit = rootfield::pow(p, m);
        for (Int index = 0; index < limit; ++index) {
            std::vector<Int> f(m + 1);
            Int rest = index;
            for (std::uint64_t i = 0; i < m; ++i) {
                mpz_fdiv_qr(rest.get_mpz_t(), f[i].get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
            }
            f[m] = 1;
            if (m >= 2 && f[0] == 0)
                continue;
            auto result = test_candidate(p, f);
            if (result.irreducible) {
                impl->modulus = std::move(f);
                impl->frob = std::move(result.frob);
                break;
            }
        }
        if (impl->modulus.empty())
            throw Error(ErrorCode::ReducibleModulus, "no irreducible modulus found");
    }

    if (WordRing::accepts(p)) {
        impl->word = WordRing{p.get_ui()};
        impl->word_modulus = to_words(impl->modulus);
        for (const auto& col : impl->frob)
            impl->word_frob.push_back(to_words(col));
    }
    return FieldCtx(std::move(impl));
}

const Int& FieldCtx::p() const noexcept { return impl_->p; }
std::uint64_t FieldCtx::m() const noexcept { return impl_->m; }
const std::vector<Int>& FieldCtx::modulus() const noexcept { return impl_->modulus; }
const std::vector<std::vector<Int>>& FieldCtx::frobenius_matrix() const noexcept { return impl_->frob; }
const Int& FieldCtx::order_minus_one() const noexcept { return impl_->order_minus_one; }
Int FieldCtx::cardinality() const { return impl_->order_minus_one + 1; }

bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus() &&
           a.frobenius_matrix() == b.frobenius_matrix();
}

Elem FieldCtx::zero() const { return wrap(std::vector<Int>(impl_->m, Int(0))); }

Elem FieldCtx::one() const {
    std::vector<Int> c(impl_->m, Int(0));
    c[0] = 1;
    return wrap(std::move(c));
}

Elem FieldCtx::generator() const { return wrap(detail::x_residue(impl_->big, impl_->modulus)); }

Elem FieldCtx::from_int(const Int& value) const {
    std::vector<Int> c(impl_->m, Int(0));
    c[0] = impl_->big.from(value);
    return wrap(std::move(c));
}

Elem FieldCtx::element(const std::vector<Int>& coeffs) const {
    if (coeffs.size() > impl_->m)
        throw Error(ErrorCode::ParseError, "element has " + std::to_string(coeffs.size()) +
                                               " coefficients, field degree is " + std::to_string(impl_->m));
    std::vector<Int> c(impl_->m, Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= impl_->p)
            throw Error(ErrorCode::ParseError, "coefficient " + to_string(coeffs[i]) + " not in [0, p)");
        c[i] = coeffs[i];
    }
    return wrap(std::move(c));
}

Elem FieldCtx::parse_element(std::string_view text) const { return element(parse_coeff_list(text)); }

std::string FieldCtx::format(const Elem& a) const {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0)
            out += ',';
        out += to_string(a.coeffs()[i]);
    }
    return out;
}

std::string FieldCtx::describe() const {
    std::string mod;
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
        if (i > 0)
            mod += ',';
        mod += to_string(impl_->modulus[i]);
    }
    return "p=" + to_string(impl_->p) + " m=" + std::to_string(impl_->m) + " modulus=" + mod;
}

Int FieldCtx::index_of(const Elem& a) const {
    Int index = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        index = index * impl_->p + a.coeffs()[i];
    return index;
}

Elem FieldCtx::from_index(const Int& index) const {
    if (index < 0 || index >= cardinality())
        throw Error(ErrorCode::InvalidArgument, "element index out of range");
    std::vector<Int> c(impl_->m);
    Int rest = index;
    for (std::uint64_t i = 0; i < impl_->m; ++i)
        mpz_fdiv_qr(rest.get_mpz_t(), c[i].get_mpz_t(), rest.get_mpz_t(), impl_->p.get_mpz_t());
    return wrap(std::move(c));
}

bool FieldCtx::is_zero(const Elem& a) const {
    for (const auto& c : a.coeffs())
        if (c != 0)
            return false;
    return true;
}

bool FieldCtx::is_one(const Elem& a) const {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.coeffs()[i] != (i == 0 ? 1 : 0))
            return false;
    return true;
}

Elem FieldCtx::add(const Elem& a, const Elem& b) const {
    std::vector<Int> c(impl_->m);
    for (std::size_t i = 0; i < impl_->m; ++i)
        c[i] = impl_->big.add(a.coeffs()[i], b.coeffs()[i]);
    return wrap(std::move(c));
}

Elem FieldCtx::sub(const Elem& a, const Elem& b) const {
    std::vector<Int> c(impl_->m);
    for (std::size_t i = 0; i < impl_->m; ++i)
        c[i] = impl_->big.sub(a.coeffs()[i], b.coeffs()[i]);
    return wrap(std::move(c));
}

Elem FieldCtx::neg(const Elem& a) const {
    std::vector<Int> c(impl_->m);
    for (std::size_t i = 0; i < impl_->m; ++i)
        c[i] = impl_->big.neg(a.coeffs()[i]);
    return wrap(std::move(c));
}

Elem FieldCtx::mul(const Elem& a, const Elem& b, OpCounter& counter) const {
    ++counter.mults;
    return mul(a, b);
}

Elem FieldCtx::mul(const Elem& a, const Elem& b) const {
    if (impl_->word)
        return wrap(to_ints(detail::mulmod(*impl_->word, impl_->to_word(a), impl_->to_word(b),
                                           impl_->word_modulus)));
    return wrap(detail::mulmod(impl_->big, a.coeffs(), b.coeffs(), impl_->modulus));
}

Elem FieldCtx::sqr(const Elem& a, OpCounter& counter) const {
    ++counter.squarings;
    return mul(a, a);
}

Elem FieldCtx::inv(const Elem& a, OpCounter& counter) const {
    ++counter.inversions;
    return inv(a);
}

Elem FieldCtx::inv(const Elem& a) const {
    if (is_zero(a))
        throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
    if (impl_->word) {
        auto out = detail::poly_inv_mod(*impl_->word, impl_->to_word(a), impl_->word_modulus);
        return wrap(to_ints(*out));
    }
    auto out = detail::poly_inv_mod(impl_->big, a.coeffs(), impl_->modulus);
    return wrap(std::move(*out));
}

namespace {

template <class R>
Poly<R> pow_counted(const R& ring, const Poly<R>& a, const Int& e, const Poly<R>& f, OpCounter& counter) {
    Poly<R> acc(a.size(), ring.zero());
    acc[0] = ring.one();
    if (e == 0)
        return acc;
    acc = a;
    for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit-- > 0;) {
        acc = detail::mulmod(ring, acc, acc, f);
        ++counter.squarings;
        if (mpz_tstbit(e.get_mpz_t(), bit)) {
            acc = detail::mulmod(ring, acc, a, f);
            ++counter.mults;
        }
    }
    return acc;
}

}  // namespace

Elem FieldCtx::pow(const Elem& a, const Int& e, OpCounter& counter) const {
    if (e < 0)
        throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (impl_->word)
        return wrap(to_ints(pow_counted(*impl_->word, impl_->to_word(a), e, impl_->word_modulus, counter)));
    return wrap(pow_counted(impl_->big, a.coeffs(), e, impl_->modulus, counter));
}

Elem FieldCtx::pow(const Elem& a, const Int& e) const {
    OpCounter scratch;
    return pow(a, e, scratch);
}

Elem FieldCtx::frobenius(const Elem& a, std::uint64_t j, OpCounter& counter) const {
    const std::uint64_t steps = j % impl_->m;
    counter.frobenius += steps;
    if (steps == 0)
        return a;
    if (impl_->word) {
        auto w = impl_->to_word(a);
        for (std::uint64_t s = 0; s < steps; ++s)
            w = detail::apply_columns(*impl_->word, impl_->word_frob, w);
        return wrap(to_ints(w));
    }
    std::vector<Int> c = a.coeffs();
    for (std::uint64_t s = 0; s < steps; ++s)
        c = detail::apply_columns(impl_->big, impl_->frob, c);
    return wrap(std::move(c));
}

Elem FieldCtx::frobenius(const Elem& a, std::uint64_t j) const {
    OpCounter scratch;
    return frobenius(a, j, scratch);
}

std::vector<Int> parse_coeff_list(std::string_view text) {
    std::vector<Int> out;
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty coefficient list");
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

FieldCtx parse_field(std::string_view text) {
    std::optional<Int> p;
    std::optional<std::uint64_t> m;
    std::optional<std::vector<Int>> modulus;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ParseError, "expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string_view value = std::string_view(token).substr(eq + 1);
        if (key == "p")
            p = parse_int(value);
        else if (key == "m")
            m = parse_u64(value);
        else if (key == "modulus")
            modulus = parse_coeff_list(value);
        else
            throw Error(ErrorCode::ParseError, "unknown field key '" + key + "'");
    }
    if (!p || !m)
        throw Error(ErrorCode::ParseError, "field description needs p= and m=");
    return FieldCtx::make(*p, *m, modulus);
}

Elem random_element(const FieldCtx& ctx, std::mt19937_64& rng) {
    const std::size_t words = mpz_sizeinbase(ctx.p().get_mpz_t(), 2) / 64 + 2;
    std::vector<Int> c(ctx.m());
    for (auto& coeff : c) {
        Int acc = 0;
        for (std::size_t w = 0; w < words; ++w) {
            acc <<= 64;
            acc += Int(static_cast<unsigned long>(rng()));
        }
        coeff = acc % ctx.p();
    }
    return ctx.element(c);
}

}  // namespace rootfield
