#include <szlenk/ordinal.hpp>

#include <stdexcept>

namespace szlenk {

struct Ordinal::Node {
    std::uint32_t atom = 0;
    std::vector<Term> terms;
};

namespace detail {
struct OrdinalAccess {
    static Ordinal make(std::vector<Term> terms) { return Ordinal::make_unchecked(std::move(terms)); }
};
} // namespace detail

namespace {

using detail::OrdinalAccess;

Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("coefficient overflow in addition");
    }
    return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("coefficient overflow in multiplication");
    }
    return r;
}

// Exponentiation of a non-trivial infinite base by a finite exponent produces
// roughly (n-1)*(terms-1) terms; refuse anything beyond this.
constexpr std::uint64_t max_power_terms = 1'000'000;

const Ordinal& one() {
    static const Ordinal value = Ordinal::finite(1);
    return value;
}

} // namespace

Ordinal Ordinal::make_unchecked(std::vector<Term> terms) {
    if (terms.empty()) {
        return Ordinal{};
    }
    if (terms.size() == 1 && terms.front().coefficient == 1 && terms.front().exponent.is_atom()) {
        return terms.front().exponent;
    }
    auto node = std::make_shared<Node>();
    node->terms = std::move(terms);
    return Ordinal{std::shared_ptr<const Node>(std::move(node))};
}

Ordinal Ordinal::finite(Coefficient n) {
    if (n == 0) {
        return Ordinal{};
    }
    return make_unchecked({Term{Ordinal{}, n}});
}

Ordinal Ordinal::omega() {
    return make_unchecked({Term{finite(1), 1}});
}

Ordinal Ordinal::epsilon_atom(std::uint32_t k) {
    if (k == 0) {
        throw DomainError("epsilon atoms are indexed from 1");
    }
    auto node = std::make_shared<Node>();
    node->atom = k;
    return Ordinal{std::shared_ptr<const Node>(std::move(node))};
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0) {
            throw std::invalid_argument("CNF coefficients must be positive");
        }
        if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater) {
            throw std::invalid_argument("CNF exponents must be strictly decreasing");
        }
    }
    return make_unchecked(std::move(terms));
}

Ordinal::Kind Ordinal::kind() const noexcept {
    if (!node_) {
        return Kind::zero;
    }
    return node_->atom != 0 ? Kind::atom : Kind::cnf;
}

std::uint32_t Ordinal::atom_index() const noexcept {
    return node_ ? node_->atom : 0;
}

std::span<const Term> Ordinal::terms() const noexcept {
    if (!node_) {
        return {};
    }
    return node_->terms;
}

bool Ordinal::is_finite() const noexcept {
    if (!node_) {
        return true;
    }
    return node_->atom == 0 && node_->terms.size() == 1 && node_->terms.front().exponent.is_zero();
}

Coefficient Ordinal::finite_value() const noexcept {
    return is_finite() && node_ ? node_->terms.front().coefficient : 0;
}

bool Ordinal::is_canonical() const {
    if (!node_) {
        return true;
    }
    if (node_->atom != 0) {
        return node_->terms.empty();
    }
    const auto& ts = node_->terms;
    if (ts.empty()) {
        return false;
    }
    if (ts.size() == 1 && ts.front().coefficient == 1 && ts.front().exponent.is_atom()) {
        return false;
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].coefficient == 0 || !ts[i].exponent.is_canonical()) {
            return false;
        }
        if (i > 0 && compare(ts[i - 1].exponent, ts[i].exponent) != std::strong_ordering::greater) {
            return false;
        }
    }
    return true;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
    return compare(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    return compare(a, b);
}

std::span<const Term> view_terms(const Ordinal& a, Term& scratch) {
    if (a.is_atom()) {
        scratch = Term{a, 1};
        return {&scratch, 1};
    }
    return a.terms();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) {
        return !a.is_zero() <=> !b.is_zero();
    }
    if (a.is_atom() && b.is_atom()) {
        return a.atom_index() <=> b.atom_index();
    }
    Term sa, sb;
    const auto ta = view_terms(a, sa);
    const auto tb = view_terms(b, sb);
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(ta[i].exponent, tb[i].exponent); c != 0) {
            return c;
        }
        if (auto c = ta[i].coefficient <=> tb[i].coefficient; c != 0) {
            return c;
        }
    }
    return ta.size() <=> tb.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) {
        return a;
    }
    if (a.is_zero()) {
        return b;
    }
    Term sa, sb;
    const auto ta = view_terms(a, sa);
    const auto tb = view_terms(b, sb);
    const Ordinal& lead = tb.front().exponent;

    std::vector<Term> out;
    out.reserve(ta.size() + tb.size());
    std::size_t i = 0;
    while (i < ta.size() && compare(ta[i].exponent, lead) > 0) {
        out.push_back(ta[i++]);
    }
    std::size_t j = 0;
    if (i < ta.size() && compare(ta[i].exponent, lead) == 0) {
        out.push_back(Term{lead, checked_add(ta[i].coefficient, tb.front().coefficient)});
        j = 1;
    }
    out.insert(out.end(), tb.begin() + static_cast<std::ptrdiff_t>(j), tb.end());
    return OrdinalAccess::make(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) {
        return Ordinal{};
    }
    Term sa, sb;
    const auto ta = view_terms(a, sa);
    const auto tb = view_terms(b, sb);
    const Ordinal& lead = ta.front().exponent;

    // a * (w^e1*c1 + ... + w^ek*ck + m) = w^(lead+e1)*c1 + ... + w^(lead+ek)*ck + a*m,
    // and the pieces are already in strictly decreasing exponent order.
    std::vector<Term> out;
    out.reserve(tb.size() + ta.size());
    for (const Term& t : tb) {
        if (t.exponent.is_zero()) {
            out.push_back(Term{lead, checked_mul(ta.front().coefficient, t.coefficient)});
            out.insert(out.end(), ta.begin() + 1, ta.end());
        } else {
            out.push_back(Term{add(lead, t.exponent), t.coefficient});
        }
    }
    return OrdinalAccess::make(std::move(out));
}

Ordinal omega_pow(const Ordinal& e) {
    if (e.is_atom()) {
        return e;
    }
    return OrdinalAccess::make({Term{e, 1}});
}

namespace {

Coefficient finite_pow(Coefficient base, Coefficient exp) {
    Coefficient result = 1;
    while (exp > 0) {
        if (exp & 1) {
            result = checked_mul(result, base);
        }
        exp >>= 1;
        if (exp > 0) {
            base = checked_mul(base, base);
        }
    }
    return result;
}

// a^m for infinite a and finite m >= 1.
Ordinal infinite_base_finite_pow(const Ordinal& a, Coefficient m) {
    Term scratch;
    const auto ta = view_terms(a, scratch);
    if (ta.size() == 1) {
        // (w^d*c)^m = w^(d*m)*c
        return OrdinalAccess::make({Term{mul(ta.front().exponent, Ordinal::finite(m)), ta.front().coefficient}});
    }
    if ((m - 1) > max_power_terms / (ta.size() - 1)) {
        throw OverflowError("power too large to represent");
    }
    Ordinal result = one();
    Ordinal base = a;
    while (m > 0) {
        if (m & 1) {
            result = mul(result, base);
        }
        m >>= 1;
        if (m > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

} // namespace

Ordinal pow(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) {
        return one();
    }
    if (a.is_zero()) {
        return Ordinal{};
    }
    if (a == one()) {
        return a;
    }

    Term sb;
    const auto tb = view_terms(b, sb);
    Coefficient finite_part = 0;
    Ordinal exponent_sum;
    bool has_infinite_part = false;
    for (const Term& t : tb) {
        if (t.exponent.is_zero()) {
            finite_part = t.coefficient;
            continue;
        }
        has_infinite_part = true;
        // a^(w^e) = w^x
        Ordinal x;
        if (a.is_finite()) {
            x = omega_pow(left_difference(one(), t.exponent));
        } else {
            x = mul(deg(a), omega_pow(t.exponent));
        }
        exponent_sum = add(exponent_sum, mul(x, Ordinal::finite(t.coefficient)));
    }

    Ordinal head = has_infinite_part ? omega_pow(exponent_sum) : one();
    if (finite_part == 0) {
        return head;
    }
    Ordinal tail = a.is_finite() ? Ordinal::finite(finite_pow(a.finite_value(), finite_part))
                                 : infinite_base_finite_pow(a, finite_part);
    return mul(head, tail);
}

Ordinal deg(const Ordinal& a) {
    if (a.is_zero()) {
        throw DomainError("deg is undefined for 0");
    }
    if (a.is_atom()) {
        return a;
    }
    return a.terms().front().exponent;
}

Ordinal trailing_exponent(const Ordinal& a) {
    if (a.is_zero()) {
        return {};
    }
    if (a.is_atom()) {
        return a;
    }
    return a.terms().back().exponent;
}

Ordinal left_difference(const Ordinal& a, const Ordinal& b) {
    if (compare(a, b) > 0) {
        throw DomainError("left difference requires a <= b");
    }
    if (a.is_zero()) {
        return b;
    }
    Term sa, sb;
    const auto ta = view_terms(a, sa);
    const auto tb = view_terms(b, sb);
    std::size_t i = 0;
    while (i < ta.size() && ta[i] == tb[i]) {
        ++i;
    }
    if (i == ta.size()) {
        return OrdinalAccess::make({tb.begin() + static_cast<std::ptrdiff_t>(i), tb.end()});
    }
    std::vector<Term> out;
    std::size_t rest = i;
    if (ta[i].exponent == tb[i].exponent) {
        out.push_back(Term{tb[i].exponent, tb[i].coefficient - ta[i].coefficient});
        rest = i + 1;
    }
    out.insert(out.end(), tb.begin() + static_cast<std::ptrdiff_t>(rest), tb.end());
    return OrdinalAccess::make(std::move(out));
}

DivMod divmod(const Ordinal& a, const Ordinal& d) {
    if (d.is_zero()) {
        throw DomainError("division by 0");
    }
    if (compare(a, d) < 0) {
        return {Ordinal{}, a};
    }
    Term sd, sa;
    const auto td = view_terms(d, sd);
    const auto ta = view_terms(a, sa);
    const Ordinal& delta = td.front().exponent;

    // Terms of a above w^(delta+1) divide exactly: d * w^x = w^(delta+x) for x > 0.
    std::vector<Term> high;
    std::size_t i = 0;
    while (i < ta.size() && compare(ta[i].exponent, delta) > 0) {
        high.push_back(Term{left_difference(delta, ta[i].exponent), ta[i].coefficient});
        ++i;
    }
    const Ordinal low = OrdinalAccess::make({ta.begin() + static_cast<std::ptrdiff_t>(i), ta.end()});

    // low < w^(delta+1); find the largest finite n with d*n <= low.
    Coefficient lead = 0;
    if (i < ta.size() && ta[i].exponent == delta) {
        lead = ta[i].coefficient;
    }
    Coefficient n = lead / td.front().coefficient;
    Ordinal dn = mul(d, Ordinal::finite(n));
    if (n > 0 && compare(dn, low) > 0) {
        --n;
        dn = mul(d, Ordinal::finite(n));
    }
    return {add(OrdinalAccess::make(std::move(high)), Ordinal::finite(n)), left_difference(dn, low)};
}

bool is_countable(const Ordinal& a) {
    if (a.is_atom()) {
        return false;
    }
    for (const Term& t : a.terms()) {
        if (!is_countable(t.exponent)) {
            return false;
        }
    }
    return true;
}

} // namespace szlenk
