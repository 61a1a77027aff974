// Shared helpers for the test suites: independent comparison oracles,
// cofactor-tracking reducers, and seeded random generators.
#ifndef SGB_TEST_UTIL_HPP
#define SGB_TEST_UTIL_HPP

#include <compare>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sgb/buchberger.hpp"
#include "sgb/order.hpp"
#include "sgb/polynomial.hpp"
#include "sgb/sigcore.hpp"
#include "sgb/system_io.hpp"

namespace sgbt {

using namespace sgb;

// --- construction shorthands -------------------------------------------------

inline const std::vector<std::string>& xyz() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

inline Polynomial P(const MonomialOrder& mo, const std::string& expr,
                    const std::vector<std::string>& vars = xyz()) {
    return parse_poly(expr, vars, mo);
}

inline PowerProduct ppv(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> fs) {
    PowerProduct p;
    for (const auto& [v, e] : fs) p = p * PowerProduct::variable(v, e);
    return p;
}

// --- independent order oracles ----------------------------------------------
// Dense-vector transcriptions of the pinned order definitions, structured
// differently from the sparse-merge implementations they check.

inline std::vector<std::uint32_t> dense(const PowerProduct& p, std::size_t nvars) {
    std::vector<std::uint32_t> out(nvars, 0);
    for (const auto& [v, e] : p.factors()) out[v] = e;
    return out;
}

inline std::size_t var_span(const PowerProduct& a, const PowerProduct& b) {
    std::size_t n = 1;
    for (const auto& [v, e] : a.factors()) n = std::max<std::size_t>(n, v + 1);
    for (const auto& [v, e] : b.factors()) n = std::max<std::size_t>(n, v + 1);
    return n;
}

inline std::strong_ordering oracle_pp_cmp(MonomialOrder::Kind kind, const PowerProduct& a,
                                          const PowerProduct& b) {
    std::size_t n = var_span(a, b);
    auto da = dense(a, n), db = dense(b, n);
    long long dega = 0, degb = 0;
    for (auto e : da) dega += e;
    for (auto e : db) degb += e;
    auto lex = [&]() -> std::strong_ordering {
        for (std::size_t i = 0; i < n; ++i) {
            if (da[i] != db[i]) {
                return da[i] < db[i] ? std::strong_ordering::less : std::strong_ordering::greater;
            }
        }
        return std::strong_ordering::equal;
    };
    switch (kind) {
        case MonomialOrder::Kind::lex:
            return lex();
        case MonomialOrder::Kind::deglex:
            if (dega != degb) return dega <=> degb;
            return lex();
        case MonomialOrder::Kind::degrevlex:
            if (dega != degb) return dega <=> degb;
            // Pinned tie-break: smaller exponent at the first differing
            // variable makes the larger power-product.
            for (std::size_t i = 0; i < n; ++i) {
                if (da[i] != db[i]) {
                    return da[i] < db[i] ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
                }
            }
            return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering oracle_term_cmp(TermOrder::Kind kind, MonomialOrder::Kind mo,
                                            const Term& u, const Term& v) {
    if (kind == TermOrder::Kind::pot) {
        if (u.component != v.component) return u.component <=> v.component;
        return oracle_pp_cmp(mo, u.pp, v.pp);
    }
    if (auto c = oracle_pp_cmp(mo, u.pp, v.pp); c != 0) return c;
    return u.component <=> v.component;
}

// --- cofactor-tracking reducers ----------------------------------------------
// Reduction replayed through public ops only, recording the combination; used
// to certify p - result ∈ <G>.

struct ReductionTrace {
    Polynomial result;
    std::vector<Polynomial> cofactors;  // one per element of G
};

inline ReductionTrace traced_normal_form(const MonomialOrder& mo, std::span<const Polynomial> G,
                                         const Polynomial& p) {
    ReductionTrace tr;
    tr.result = p;
    tr.cofactors.assign(G.size(), Polynomial{});
    while (true) {
        bool stepped = false;
        // Find the largest reducible monomial by scanning the whole support.
        for (const auto& m : tr.result.monomials()) {
            for (std::size_t gi = 0; gi < G.size() && !stepped; ++gi) {
                if (G[gi].is_zero()) continue;
                if (auto t = PowerProduct::divide(m.pp, G[gi].leading_pp())) {
                    Rational c = m.coeff / G[gi].leading().coeff;
                    tr.cofactors[gi] =
                        poly_add(mo, tr.cofactors[gi],
                                 Polynomial::from_monomials(mo, {Monomial{*t, c}}));
                    tr.result = poly_sub(mo, tr.result, monom_mult(c, *t, G[gi]));
                    stepped = true;
                }
            }
            if (stepped) break;
        }
        if (!stepped) return tr;
    }
}

inline ReductionTrace traced_sig_trd(const TermOrder& to, std::span<const SigPoly> G,
                                     const SigPoly& a) {
    ReductionTrace tr;
    tr.result = a.poly;
    tr.cofactors.assign(G.size(), Polynomial{});
    const MonomialOrder& mo = to.mono;
    while (true) {
        bool stepped = false;
        for (const auto& m : tr.result.monomials()) {
            for (std::size_t gi = 0; gi < G.size() && !stepped; ++gi) {
                if (G[gi].poly.is_zero()) continue;
                auto t = PowerProduct::divide(m.pp, G[gi].poly.leading_pp());
                if (!t || !to.less(*t * G[gi].sig, a.sig)) continue;
                Rational c = m.coeff / G[gi].poly.leading().coeff;
                tr.cofactors[gi] = poly_add(mo, tr.cofactors[gi],
                                            Polynomial::from_monomials(mo, {Monomial{*t, c}}));
                tr.result = poly_sub(mo, tr.result, monom_mult(c, *t, G[gi].poly));
                stepped = true;
            }
            if (stepped) break;
        }
        if (!stepped) return tr;
    }
}

// Checks that p - trace.result equals the recorded combination of G.
inline bool trace_is_sound(const MonomialOrder& mo, std::span<const Polynomial> G,
                           const Polynomial& p, const ReductionTrace& tr) {
    Polynomial combo;
    for (std::size_t i = 0; i < G.size(); ++i) {
        combo = poly_add(mo, combo, poly_mul(mo, tr.cofactors[i], G[i]));
    }
    return poly_add(mo, combo, tr.result) == p;
}

// --- seeded random data -------------------------------------------------------

inline PowerProduct random_pp(std::mt19937& rng, unsigned nvars = 3, unsigned max_exp = 4) {
    PowerProduct p;
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    for (unsigned v = 0; v < nvars; ++v) {
        unsigned e = exp(rng);
        if (e > 0) p = p * PowerProduct::variable(v, e);
    }
    return p;
}

inline Term random_term(std::mt19937& rng, unsigned max_component = 2) {
    std::uniform_int_distribution<unsigned> comp(0, max_component);
    return Term{random_pp(rng), comp(rng)};
}

inline Rational random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline Rational random_rat_nonzero(std::mt19937& rng) {
    Rational r = random_rat(rng);
    return r.is_zero() ? Rational(1) : r;
}

inline Polynomial random_poly(std::mt19937& rng, const MonomialOrder& mo, unsigned nvars = 3,
                              unsigned max_terms = 4) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::vector<Monomial> terms;
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i) {
        terms.push_back(Monomial{random_pp(rng, nvars, 3), random_rat(rng)});
    }
    return Polynomial::from_monomials(mo, std::move(terms));
}

inline Polynomial random_poly_nonzero(std::mt19937& rng, const MonomialOrder& mo,
                                      unsigned nvars = 3) {
    while (true) {
        Polynomial p = random_poly(rng, mo, nvars);
        if (!p.is_zero()) return p;
    }
}

// The pinned random-system generator of the oracle-equivalence suite:
// seed s -> mt19937(1000+s); 1..3 variables, 1..3 polynomials, each built
// from 1..4 draws of (monomial of total degree <= 3, coefficient in [-5,5],
// zero coefficient dropping the draw).
inline std::vector<Polynomial> random_system(unsigned seed, const MonomialOrder& mo) {
    std::mt19937 rng(1000 + seed);
    std::uniform_int_distribution<unsigned> small(1, 3);
    std::uniform_int_distribution<unsigned> terms(1, 4);
    std::uniform_int_distribution<unsigned> exp(0, 3);
    std::uniform_int_distribution<long> coeff(-5, 5);
    unsigned nvars = small(rng);
    unsigned npolys = small(rng);
    std::vector<Polynomial> fs;
    for (unsigned p = 0; p < npolys; ++p) {
        std::vector<Monomial> ms;
        unsigned nterms = terms(rng);
        for (unsigned t = 0; t < nterms; ++t) {
            PowerProduct pp;
            do {
                pp = PowerProduct{};
                for (unsigned v = 0; v < nvars; ++v) {
                    unsigned e = exp(rng);
                    if (e > 0) pp = pp * PowerProduct::variable(v, e);
                }
            } while (pp.degree() > 3);
            long c = coeff(rng);
            if (c != 0) ms.push_back(Monomial{std::move(pp), Rational(c)});
        }
        fs.push_back(Polynomial::from_monomials(mo, std::move(ms)));
    }
    return fs;
}

inline std::vector<MonomialOrder> all_monomial_orders() {
    return {{MonomialOrder::Kind::lex}, {MonomialOrder::Kind::deglex},
            {MonomialOrder::Kind::degrevlex}};
}

}  // namespace sgbt

#endif
