#ifndef SGB_ORDER_HPP
#define SGB_ORDER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "sgb/power_product.hpp"

namespace sgb {

/// Admissible orders on power-products.
///
/// lex      — variable 0 has the highest priority.
/// deglex   — total degree first, then lex.
/// degrevlex — total degree first; ties are broken by scanning variables from
///             index 0 upward: at the first variable where the exponents
///             differ, the power-product with the SMALLER exponent is the
///             larger one. This is the tie-break the pinned reference outputs
///             in the test suite were produced with.
struct MonomialOrder {
    enum class Kind { lex, deglex, degrevlex };
    Kind kind = Kind::degrevlex;

    std::strong_ordering compare(const PowerProduct& a, const PowerProduct& b) const;
    bool less(const PowerProduct& a, const PowerProduct& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    std::string name() const;
};

/// A module term: a power-product attached to a component index (0-based).
struct Term {
    PowerProduct pp;
    std::uint32_t component = 0;

    friend bool operator==(const Term& a, const Term& b) {
        return a.component == b.component && a.pp == b.pp;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

    std::string str() const;
};

inline Term unit_term(std::uint32_t component) { return Term{PowerProduct{}, component}; }

/// t ⊗ u: multiplies the power-product, keeps the component.
inline Term operator*(const PowerProduct& t, const Term& u) {
    return Term{t * u.pp, u.component};
}

/// u / v: present iff the components agree and v.pp divides u.pp.
std::optional<PowerProduct> term_divide(const Term& u, const Term& v);

inline bool term_divides(const Term& divisor, const Term& multiple) {
    return divisor.component == multiple.component && divisor.pp.divides(multiple.pp);
}

/// Compatible extensions of a monomial order to module terms.
struct TermOrder {
    enum class Kind { pot, top };
    Kind kind = Kind::pot;
    MonomialOrder mono;

    std::strong_ordering compare(const Term& u, const Term& v) const;
    bool less(const Term& u, const Term& v) const {
        return compare(u, v) == std::strong_ordering::less;
    }
    bool less_eq(const Term& u, const Term& v) const {
        return compare(u, v) != std::strong_ordering::greater;
    }
    const Term& max(const Term& u, const Term& v) const { return less(u, v) ? v : u; }
    std::string name() const;
};

inline TermOrder pot(MonomialOrder mo) { return TermOrder{TermOrder::Kind::pot, mo}; }
inline TermOrder top(MonomialOrder mo) { return TermOrder{TermOrder::Kind::top, mo}; }

}  // namespace sgb

#endif
