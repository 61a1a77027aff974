#include "sgb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sgb {

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back(Monomial{PowerProduct{}, std::move(c)});
    return p;
}

Polynomial Polynomial::from_monomials(const MonomialOrder& mo, std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end(), [&](const Monomial& a, const Monomial& b) {
        return mo.compare(a.pp, b.pp) == std::strong_ordering::greater;
    });
    Polynomial p;
    for (auto& m : monomials) {
        if (!p.terms_.empty() && p.terms_.back().pp == m.pp) {
            p.terms_.back().coeff += m.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!m.coeff.is_zero()) {
            p.terms_.push_back(std::move(m));
        }
    }
    return p;
}

const Monomial& Polynomial::leading() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    return terms_.front();
}

Rational Polynomial::coeff(const PowerProduct& pp) const {
    for (const auto& m : terms_) {
        if (m.pp == pp) return m.coeff;
    }
    return Rational();
}

bool Polynomial::is_canonical(const MonomialOrder& mo) const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff.is_zero()) return false;
        if (i > 0 && mo.compare(terms_[i - 1].pp, terms_[i].pp) != std::strong_ordering::greater) {
            return false;
        }
    }
    return true;
}

namespace {

// r = p + c·t·q, merging two descending monomial lists. Consumes p, moving
// untouched coefficients straight into the result.
Polynomial merge_scaled(const MonomialOrder& mo, Polynomial p, const Rational& c,
                        const PowerProduct& t, const Polynomial& q) {
    std::vector<Monomial> pa = std::move(p).take_monomials();
    const auto& qa = q.monomials();
    std::vector<Monomial> out;
    out.reserve(pa.size() + qa.size());
    std::size_t ia = 0, ib = 0;
    while (ia < pa.size() && ib < qa.size()) {
        PowerProduct qpp = t * qa[ib].pp;
        auto cmp = mo.compare(pa[ia].pp, qpp);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(std::move(pa[ia++]));
        } else if (cmp == std::strong_ordering::less) {
            out.push_back(Monomial{std::move(qpp), c * qa[ib++].coeff});
        } else {
            Rational sum = std::move(pa[ia].coeff);
            sum += c * qa[ib].coeff;
            if (!sum.is_zero()) out.push_back(Monomial{std::move(qpp), std::move(sum)});
            ++ia;
            ++ib;
        }
    }
    for (; ia < pa.size(); ++ia) out.push_back(std::move(pa[ia]));
    for (; ib < qa.size(); ++ib) out.push_back(Monomial{t * qa[ib].pp, c * qa[ib].coeff});
    return Polynomial::from_sorted(std::move(out));
}

}  // namespace

Polynomial poly_sub_scaled(const MonomialOrder& mo, Polynomial p, const Rational& c,
                           const PowerProduct& t, const Polynomial& q) {
    return merge_scaled(mo, std::move(p), -c, t, q);
}

Polynomial poly_add(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q) {
    return merge_scaled(mo, p, Rational(1), PowerProduct{}, q);
}

Polynomial poly_sub(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q) {
    return merge_scaled(mo, p, Rational(-1), PowerProduct{}, q);
}

Polynomial poly_neg(const Polynomial& p) {
    std::vector<Monomial> out;
    out.reserve(p.size());
    for (const auto& m : p.monomials()) out.push_back(Monomial{m.pp, -m.coeff});
    return Polynomial::from_sorted(std::move(out));
}

Polynomial monom_mult(const Rational& c, const PowerProduct& t, const Polynomial& p) {
    if (c.is_zero()) return Polynomial();
    std::vector<Monomial> out;
    out.reserve(p.size());
    for (const auto& m : p.monomials()) out.push_back(Monomial{t * m.pp, c * m.coeff});
    return Polynomial::from_sorted(std::move(out));
}

Polynomial poly_mul(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    for (const auto& m : p.monomials()) acc = merge_scaled(mo, acc, m.coeff, m.pp, q);
    return acc;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero() || p.leading().coeff.is_one()) return p;
    return monom_mult(p.leading().coeff.inv(), PowerProduct{}, p);
}

Polynomial normal_form(const MonomialOrder& mo, std::span<const Polynomial> G,
                       const Polynomial& p) {
    Polynomial r = p;
    std::size_t idx = 0;
    // Monomials before idx are irreducible; reduction steps only introduce
    // power-products below the cancelled one, so the scan never backs up.
    while (idx < r.size()) {
        const PowerProduct& pp = r.monomials()[idx].pp;
        bool reduced = false;
        for (const Polynomial& g : G) {
            if (g.is_zero()) continue;
            if (auto t = PowerProduct::divide(pp, g.leading_pp())) {
                Rational c = r.monomials()[idx].coeff / g.leading().coeff;
                r = poly_sub_scaled(mo, std::move(r), c, *t, g);
                reduced = true;
                break;
            }
        }
        if (!reduced) ++idx;
    }
    return r;
}

Polynomial spoly(const MonomialOrder& mo, const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("spoly of a zero polynomial");
    PowerProduct t = PowerProduct::lcm(p.leading_pp(), q.leading_pp());
    Polynomial left =
        monom_mult(p.leading().coeff.inv(), *PowerProduct::divide(t, p.leading_pp()), p);
    Rational qc = q.leading().coeff.inv();
    return poly_sub_scaled(mo, std::move(left), qc, *PowerProduct::divide(t, q.leading_pp()), q);
}

std::vector<Polynomial> autoreduce(const MonomialOrder& mo, std::span<const Polynomial> G) {
    std::vector<Polynomial> H;
    for (const auto& g : G) {
        if (!g.is_zero()) H.push_back(monic(g));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < H.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(H.size() - 1);
            for (std::size_t j = 0; j < H.size(); ++j) {
                if (j != i) others.push_back(H[j]);
            }
            Polynomial r = normal_form(mo, others, H[i]);
            if (r == H[i]) continue;
            changed = true;
            if (r.is_zero()) {
                H.erase(H.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                H[i] = monic(r);
            }
            break;
        }
    }
    std::sort(H.begin(), H.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mo.compare(a.leading_pp(), b.leading_pp()) == std::strong_ordering::greater;
    });
    return H;
}

}  // namespace sgb
