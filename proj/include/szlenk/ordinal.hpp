#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <szlenk/errors.hpp>

namespace szlenk {

using Coefficient = std::uint64_t;

struct Term;

namespace detail {
struct OrdinalAccess;
}

/// An ordinal in Cantor normal form.
///
/// A value is exactly one of
///   - zero,
///   - an epsilon atom W_k (k >= 1), a symbolic epsilon number standing for
///     the k-th uncountable initial ordinal, so that w^W_k = W_k,
///   - a sum w^e1*c1 + ... + w^en*cn with e1 > ... > en and every ci >= 1.
///
/// The representation is canonical: the single term (W_k, 1) is always stored
/// as the atom itself, so structural equality is ordinal equality. Values are
/// immutable and share their term storage, so copies are cheap and safe to use
/// from any thread.
class Ordinal {
public:
    enum class Kind { zero, atom, cnf };

    /// Zero.
    Ordinal() = default;

    static Ordinal finite(Coefficient n);
    static Ordinal omega();
    static Ordinal epsilon_atom(std::uint32_t k);

    /// Builds a value from terms in decreasing exponent order. Throws
    /// std::invalid_argument when the terms are not in Cantor normal form;
    /// the lone term (W_k, 1) is folded into the atom.
    static Ordinal from_terms(std::vector<Term> terms);

    Kind kind() const noexcept;
    bool is_zero() const noexcept { return node_ == nullptr; }
    bool is_atom() const noexcept { return kind() == Kind::atom; }

    /// Index k of an epsilon atom; 0 for every other value.
    std::uint32_t atom_index() const noexcept;

    /// Stored CNF terms. Empty for zero and for atoms (see `view_terms`).
    std::span<const Term> terms() const noexcept;

    bool is_finite() const noexcept;
    /// The value as a machine integer; only meaningful when is_finite().
    Coefficient finite_value() const noexcept;

    /// True when the stored representation satisfies every canonical-form
    /// invariant, recursively. Values produced by this library always do.
    bool is_canonical() const;

    friend bool operator==(const Ordinal& a, const Ordinal& b);
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

private:
    struct Node;
    explicit Ordinal(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Ordinal make_unchecked(std::vector<Term> terms);

    std::shared_ptr<const Node> node_;

    friend struct detail::OrdinalAccess;
};

struct Term {
    Ordinal exponent;
    Coefficient coefficient = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Terms of `a` with an atom viewed as the single term (a, 1). `scratch` holds
/// that term and must outlive the returned span.
std::span<const Term> view_terms(const Ordinal& a, Term& scratch);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
/// a^b with 0^0 = 1.
Ordinal pow(const Ordinal& a, const Ordinal& b);
/// w^e; fixes every epsilon atom.
Ordinal omega_pow(const Ordinal& e);

/// Leading exponent. Throws DomainError for zero.
Ordinal deg(const Ordinal& a);

/// Exponent of the last (smallest) term; 0 for zero and for finite values.
Ordinal trailing_exponent(const Ordinal& a);

/// The unique x with a + x = b. Throws DomainError when a > b.
Ordinal left_difference(const Ordinal& a, const Ordinal& b);

struct DivMod {
    Ordinal quotient;
    Ordinal remainder;
};

/// Left division: a = d*q + r with r < d. Throws DomainError for d = 0.
DivMod divmod(const Ordinal& a, const Ordinal& d);

/// True when no epsilon atom occurs anywhere in `a`.
bool is_countable(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

} // namespace szlenk
