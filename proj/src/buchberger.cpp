#include "sgb/buchberger.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <set>
#include <utility>

namespace sgb {

namespace {

// Reductions run fraction-free over integer polynomials: scaling the running
// polynomial by a nonzero constant changes neither the power-product
// trajectory of the reduction nor zero-ness of the result, and basis elements
// are stored content-free with positive leading coefficient anyway.
struct IntMonomial {
    PowerProduct pp;
    mpz_class coeff;
};
using IntPoly = std::vector<IntMonomial>;

IntPoly to_integer(const Polynomial& p) {
    mpz_class den_lcm = 1;
    for (const auto& m : p.monomials()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), m.coeff.denom().get_mpz_t());
        den_lcm = den_lcm / g * m.coeff.denom();
    }
    IntPoly out;
    out.reserve(p.size());
    for (const auto& m : p.monomials()) {
        out.push_back(IntMonomial{m.pp, m.coeff.numer() * (den_lcm / m.coeff.denom())});
    }
    return out;
}

void strip_content(IntPoly& p) {
    if (p.empty()) return;
    mpz_class content = 0;
    for (const auto& m : p) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m.coeff.get_mpz_t());
        if (content == 1) break;
    }
    if (p.front().coeff < 0) content = -content;
    if (content != 1) {
        for (auto& m : p) m.coeff /= content;
    }
}

Polynomial from_integer(IntPoly p) {
    strip_content(p);
    std::vector<Monomial> out;
    out.reserve(p.size());
    for (auto& m : p) {
        out.push_back(Monomial{std::move(m.pp), Rational(mpq_class(std::move(m.coeff)))});
    }
    return Polynomial::from_sorted(std::move(out));
}

// r := (b/g)·r - (a/g)·t·q with a = coeff of r at index idx, b = lc(q),
// g = gcd(a, b); the term at idx cancels exactly.
IntPoly combine_step(const MonomialOrder& mo, IntPoly r, std::size_t idx, const PowerProduct& t,
                     const IntPoly& q) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r[idx].coeff.get_mpz_t(), q.front().coeff.get_mpz_t());
    mpz_class rscale = q.front().coeff / g;
    mpz_class qscale = r[idx].coeff / g;
    IntPoly out;
    out.reserve(r.size() + q.size());
    std::size_t ia = 0, ib = 0;
    while (ia < r.size() && ib < q.size()) {
        PowerProduct qpp = t * q[ib].pp;
        auto cmp = mo.compare(r[ia].pp, qpp);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(IntMonomial{std::move(r[ia].pp), r[ia].coeff * rscale});
            ++ia;
        } else if (cmp == std::strong_ordering::less) {
            out.push_back(IntMonomial{std::move(qpp), q[ib].coeff * -qscale});
            ++ib;
        } else {
            mpz_class sum = r[ia].coeff * rscale - q[ib].coeff * qscale;
            if (sum != 0) out.push_back(IntMonomial{std::move(qpp), std::move(sum)});
            ++ia;
            ++ib;
        }
    }
    for (; ia < r.size(); ++ia) {
        out.push_back(IntMonomial{std::move(r[ia].pp), r[ia].coeff * rscale});
    }
    for (; ib < q.size(); ++ib) {
        out.push_back(IntMonomial{t * q[ib].pp, q[ib].coeff * -qscale});
    }
    return out;
}

// Fraction-free S-polynomial of two integer polynomials.
IntPoly int_spoly(const MonomialOrder& mo, const IntPoly& p, const IntPoly& q) {
    PowerProduct t = PowerProduct::lcm(p.front().pp, q.front().pp);
    PowerProduct tp = *PowerProduct::divide(t, p.front().pp);
    IntPoly left;
    left.reserve(p.size());
    for (const auto& m : p) left.push_back(IntMonomial{tp * m.pp, m.coeff});
    return combine_step(mo, std::move(left), 0, *PowerProduct::divide(t, q.front().pp), q);
}

// Full normal form by pseudo-reduction: cancel the largest reducible
// power-product, earliest eligible reducer first.
IntPoly pseudo_reduce(const MonomialOrder& mo, const std::vector<IntPoly>& G, IntPoly r) {
    std::size_t idx = 0;
    int steps = 0;
    while (idx < r.size()) {
        bool reduced = false;
        for (const IntPoly& g : G) {
            if (auto t = PowerProduct::divide(r[idx].pp, g.front().pp)) {
                r = combine_step(mo, std::move(r), idx, *t, g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            ++idx;
        } else if (++steps % 8 == 0) {
            strip_content(r);
        }
    }
    return r;
}

struct Pair {
    std::size_t i, j;
    PowerProduct lcm;
    std::uint64_t degree;
};

// Normal selection strategy: (deg lcm, lex on lcm, i, j).
bool pair_before(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    MonomialOrder lex{MonomialOrder::Kind::lex};
    if (auto c = lex.compare(a.lcm, b.lcm); c != 0) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

BuchbergerResult buchberger(const MonomialOrder& mo, std::span<const Polynomial> fs) {
    std::vector<IntPoly> basis;
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_index;

    auto push_pairs = [&](IntPoly h) {
        std::size_t j = basis.size();
        for (std::size_t i = 0; i < j; ++i) {
            PowerProduct t = PowerProduct::lcm(basis[i].front().pp, h.front().pp);
            pending.push_back(Pair{i, j, t, t.degree()});
            pending_index.insert({i, j});
        }
        basis.push_back(std::move(h));
    };

    for (const Polynomial& f : fs) {
        if (f.is_zero()) continue;
        IntPoly g = to_integer(f);
        strip_content(g);
        push_pairs(std::move(g));
    }

    unsigned long zero_reductions = 0;
    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_before);
        Pair pick = std::move(*it);
        pending.erase(it);
        pending_index.erase({pick.i, pick.j});

        const PowerProduct& li = basis[pick.i].front().pp;
        const PowerProduct& lj = basis[pick.j].front().pp;

        // Product criterion: coprime leading power-products.
        if (pick.degree == li.degree() + lj.degree()) continue;

        // Chain criterion: some treated middle element k with lp(k) | lcm and
        // both supporting lcms proper.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pick.i || k == pick.j) continue;
            if (!basis[k].front().pp.divides(pick.lcm)) continue;
            auto a = std::minmax(pick.i, k);
            auto b = std::minmax(pick.j, k);
            if (pending_index.count({a.first, a.second})) continue;
            if (pending_index.count({b.first, b.second})) continue;
            if (PowerProduct::lcm(li, basis[k].front().pp) == pick.lcm) continue;
            if (PowerProduct::lcm(lj, basis[k].front().pp) == pick.lcm) continue;
            chained = true;
        }
        if (chained) continue;

        IntPoly h = pseudo_reduce(mo, basis, int_spoly(mo, basis[pick.i], basis[pick.j]));
        if (h.empty()) {
            ++zero_reductions;
        } else {
            strip_content(h);
            push_pairs(std::move(h));
        }
    }

    BuchbergerResult result;
    result.zero_reductions = zero_reductions;
    result.basis.reserve(basis.size());
    for (auto& g : basis) result.basis.push_back(from_integer(std::move(g)));
    return result;
}

}  // namespace sgb
