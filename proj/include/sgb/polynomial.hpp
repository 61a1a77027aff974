#ifndef SGB_POLYNOMIAL_HPP
#define SGB_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sgb/order.hpp"
#include "sgb/power_product.hpp"
#include "sgb/rational.hpp"

namespace sgb {

struct Monomial {
    PowerProduct pp;
    Rational coeff;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.pp == b.pp && a.coeff == b.coeff;
    }
};

/// Sparse multivariate polynomial: monomials with nonzero coefficients,
/// strictly descending under the ambient monomial order. The empty list is 0.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(Rational c);

    /// Sorts descending under `mo`, merges equal power-products, drops zeros.
    static Polynomial from_monomials(const MonomialOrder& mo, std::vector<Monomial> monomials);

    /// Takes a list that is already strictly descending with nonzero coefficients.
    static Polynomial from_sorted(std::vector<Monomial> monomials) {
        Polynomial p;
        p.terms_ = std::move(monomials);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Monomial>& monomials() const { return terms_; }
    std::vector<Monomial> take_monomials() && { return std::move(terms_); }

    /// Leading monomial; the zero polynomial has none.
    const Monomial& leading() const;
    const PowerProduct& leading_pp() const { return leading().pp; }
    /// lc, total on all inputs: the leading coefficient, or 0 for the zero polynomial.
    Rational leading_coeff_or_zero() const {
        return terms_.empty() ? Rational() : terms_.front().coeff;
    }

    Rational coeff(const PowerProduct& pp) const;

    /// Checks the representation invariants under `mo`.
    bool is_canonical(const MonomialOrder& mo) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::vector<Monomial> terms_;
};

Polynomial poly_add(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q);
Polynomial poly_neg(const Polynomial& p);

/// p - c·t·q in one merge pass; the reduction-step primitive. Consumes p.
Polynomial poly_sub_scaled(const MonomialOrder& mo, Polynomial p, const Rational& c,
                           const PowerProduct& t, const Polynomial& q);

/// c · t · p. Preserves the term order, so no order parameter is needed.
Polynomial monom_mult(const Rational& c, const PowerProduct& t, const Polynomial& p);

Polynomial poly_mul(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q);

/// p scaled so that the leading coefficient is 1; zero stays zero.
Polynomial monic(const Polynomial& p);

/// Classical normal form of p modulo G: repeatedly cancels the largest
/// reducible monomial, using the earliest eligible reducer in G.
Polynomial normal_form(const MonomialOrder& mo, std::span<const Polynomial> G,
                       const Polynomial& p);

/// The usual S-polynomial; both arguments must be nonzero.
Polynomial spoly(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q);

/// Mutually reduces the set: every element monic, no monomial of any element
/// divisible by the leading power-product of another, sorted descending by
/// leading power-product. On a Groebner basis this yields the reduced basis.
std::vector<Polynomial> autoreduce(const MonomialOrder& mo, std::span<const Polynomial> G);

}  // namespace sgb

#endif
