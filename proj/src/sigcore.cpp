#include "sgb/sigcore.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sgb {

std::strong_ordering spp_compare(RewriteOrder rw, const TermOrder& to, const SigPoly& a,
                                 const SigPoly& b) {
    if (rw == RewriteOrder::add) return to.compare(a.sig, b.sig);
    if (a.poly.is_zero() || b.poly.is_zero()) {
        throw std::invalid_argument("spp_compare(rat): zero polynomial part");
    }
    Term pa = b.poly.leading_pp() * a.sig;
    Term pb = a.poly.leading_pp() * b.sig;
    if (auto c = to.compare(pa, pb); c != 0) return c;
    return to.compare(a.sig, b.sig);
}

bool is_canon_rewriter(RewriteOrder rw, const TermOrder& to, std::span<const SigPoly> basis,
                       const Term& u, const SigPoly& a) {
    if (a.poly.is_zero() || !term_divides(a.sig, u)) return false;
    for (const SigPoly& g : basis) {
        if (g.poly.is_zero() || !term_divides(g.sig, u)) continue;
        if (spp_compare(rw, to, g, a) == std::strong_ordering::greater) return false;
    }
    return true;
}

SigPoly sig_trd(const TermOrder& to, std::span<const SigPoly> basis, const SigPoly& a) {
    const MonomialOrder& mo = to.mono;
    Polynomial p = a.poly;
    std::size_t idx = 0;
    while (idx < p.size()) {
        const PowerProduct& pp = p.monomials()[idx].pp;
        bool reduced = false;
        for (const SigPoly& g : basis) {
            if (g.poly.is_zero()) continue;
            auto t = PowerProduct::divide(pp, g.poly.leading_pp());
            if (!t) continue;
            if (!to.less(*t * g.sig, a.sig)) continue;  // step must be regular
            Rational c = p.monomials()[idx].coeff / g.poly.leading().coeff;
            p = poly_sub_scaled(mo, std::move(p), c, *t, g.poly);
            reduced = true;
            break;
        }
        if (!reduced) ++idx;
    }
    return SigPoly{a.sig, std::move(p)};
}

bool is_sig_red(SigRel r1, TopRel r2, const TermOrder& to, std::span<const SigPoly> basis,
                const SigPoly& a) {
    if (a.poly.is_zero()) return false;
    const auto& monomials = a.poly.monomials();
    // r2 constrains t·lp(g) against lp(a): equality means the lead monomial,
    // strict means any other one.
    std::size_t begin = (r2 == TopRel::lt) ? 1 : 0;
    std::size_t end = (r2 == TopRel::eq) ? 1 : monomials.size();
    for (const SigPoly& g : basis) {
        if (g.poly.is_zero()) continue;
        for (std::size_t k = begin; k < end; ++k) {
            auto t = PowerProduct::divide(monomials[k].pp, g.poly.leading_pp());
            if (!t) continue;
            auto c = to.compare(*t * g.sig, a.sig);
            bool ok = (r1 == SigRel::lt)    ? c == std::strong_ordering::less
                      : (r1 == SigRel::leq) ? c != std::strong_ordering::greater
                                            : c == std::strong_ordering::equal;
            if (ok) return true;
        }
    }
    return false;
}

const Term& SPairParts::sig() const {
    if (!sig_opt) throw std::invalid_argument("signature of a singular S-pair");
    return *sig_opt;
}

SPairParts spair_parts(const TermOrder& to, const SigPoly& a, const SigPoly& b) {
    if (a.poly.is_zero() || b.poly.is_zero()) {
        throw std::invalid_argument("spair_parts: zero polynomial part");
    }
    PowerProduct t = PowerProduct::lcm(a.poly.leading_pp(), b.poly.leading_pp());
    SPairParts out;
    out.u_a = *PowerProduct::divide(t, a.poly.leading_pp()) * a.sig;
    out.u_b = *PowerProduct::divide(t, b.poly.leading_pp()) * b.sig;
    out.regular = !(out.u_a == out.u_b);
    if (out.regular) out.sig_opt = to.max(out.u_a, out.u_b);
    out.poly = spoly(to.mono, a.poly, b.poly);
    return out;
}

bool pair_entry_less(const TermOrder& to, const PairEntry& a, const PairEntry& b) {
    if (auto c = to.compare(a.sig, b.sig); c != 0) return c == std::strong_ordering::less;
    if (a.kind != b.kind) return a.kind == PairEntry::Kind::unit;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

namespace {

bool some_divides(std::span<const Term> ss, const Term& u) {
    for (const Term& s : ss) {
        if (term_divides(s, u)) return true;
    }
    return false;
}

// Adds t unless a kept element divides it; drops kept elements t divides.
void insert_min_div(std::vector<Term>& ss, Term t) {
    for (const Term& s : ss) {
        if (term_divides(s, t)) return;
    }
    std::erase_if(ss, [&](const Term& s) { return term_divides(t, s); });
    ss.push_back(std::move(t));
}

}  // namespace

std::vector<Term> koszul_syz_sigs(const TermOrder& to, std::span<const Polynomial> fs) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_zero()) continue;
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (fs[j].is_zero()) continue;
            Term c1{fs[j].leading_pp(), static_cast<std::uint32_t>(i)};
            Term c2{fs[i].leading_pp(), static_cast<std::uint32_t>(j)};
            insert_min_div(out, to.max(c1, c2));
        }
    }
    return out;
}

std::vector<Term> new_syz_sigs(const TermOrder& to, std::vector<Term> ss,
                               std::span<const SigPoly> basis, const PairEntry& e,
                               std::span<const Polynomial> fs) {
    if (e.kind != PairEntry::Kind::unit) return ss;
    const Polynomial& fk = fs[e.i];
    if (fk.is_zero()) return ss;
    auto k = static_cast<std::uint32_t>(e.i);
    for (const SigPoly& g : basis) {
        Term c1 = fk.leading_pp() * g.sig;
        Term c2{g.poly.leading_pp(), k};
        // Colliding lead terms: the true signature is not computable from
        // sig-poly data, so the candidate is skipped.
        if (c1 == c2) continue;
        insert_min_div(ss, to.max(c1, c2));
    }
    return ss;
}

bool sig_crit(RewriteOrder rw, const TermOrder& to, std::span<const SigPoly> basis,
              std::span<const Term> ss, const PairEntry& e) {
    if (e.kind == PairEntry::Kind::unit) {
        return some_divides(ss, unit_term(static_cast<std::uint32_t>(e.i)));
    }
    const SigPoly& older = basis[e.i];
    const SigPoly& newer = basis[e.j];
    SPairParts parts = spair_parts(to, newer, older);
    if (!parts.regular) throw std::invalid_argument("sig_crit: singular S-pair");
    const Term& u_newer = parts.u_a;
    const Term& u_older = parts.u_b;
    if (some_divides(ss, u_newer) || !is_canon_rewriter(rw, to, basis, u_newer, newer)) return true;
    if (some_divides(ss, u_older) || !is_canon_rewriter(rw, to, basis, u_older, older)) return true;
    return false;
}

SigPoly poly_of_pair(const TermOrder& to, const PairEntry& e, std::span<const SigPoly> basis,
                     std::span<const Polynomial> fs) {
    if (e.kind == PairEntry::Kind::unit) {
        if (e.i >= fs.size()) throw std::out_of_range("poly_of_pair: component out of range");
        return SigPoly{unit_term(static_cast<std::uint32_t>(e.i)), fs[e.i]};
    }
    if (e.i >= basis.size() || e.j >= basis.size()) {
        throw std::out_of_range("poly_of_pair: basis index out of range");
    }
    SPairParts parts = spair_parts(to, basis[e.j], basis[e.i]);
    return SigPoly{parts.sig(), std::move(parts.poly)};
}

std::vector<PairEntry> add_spairs(const TermOrder& to, std::vector<PairEntry> ps,
                                  std::span<const SigPoly> basis, const SigPoly& b) {
    std::vector<PairEntry> fresh;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        SPairParts parts = spair_parts(to, b, basis[i]);
        if (parts.regular) fresh.push_back(PairEntry::spair(i, basis.size(), parts.sig()));
    }
    auto less = [&](const PairEntry& x, const PairEntry& y) { return pair_entry_less(to, x, y); };
    std::sort(fresh.begin(), fresh.end(), less);
    std::vector<PairEntry> merged;
    merged.reserve(ps.size() + fresh.size());
    std::merge(std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()),
               std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()),
               std::back_inserter(merged), less);
    return merged;
}

RBResult rb(std::span<const Polynomial> fs, const TermOrder& to, RewriteOrder rw,
            const RBHook& hook) {
    std::vector<SigPoly> basis;
    std::vector<Term> ss = koszul_syz_sigs(to, fs);
    std::vector<PairEntry> ps;
    ps.reserve(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) ps.push_back(PairEntry::unit(k));
    std::sort(ps.begin(), ps.end(),
              [&](const PairEntry& x, const PairEntry& y) { return pair_entry_less(to, x, y); });

    unsigned long zero_reductions = 0;
    unsigned long iterations = 0;
    std::size_t head = 0;
    while (head < ps.size()) {
        PairEntry e = std::move(ps[head++]);
        ss = new_syz_sigs(to, std::move(ss), basis, e, fs);
        if (!sig_crit(rw, to, basis, ss, e)) {
            SigPoly b = sig_trd(to, basis, poly_of_pair(to, e, basis, fs));
            if (b.poly.is_zero()) {
                ss.insert(ss.begin(), b.sig);
                ++zero_reductions;
            } else {
                std::vector<PairEntry> tail(std::make_move_iterator(ps.begin() +
                                                                    static_cast<std::ptrdiff_t>(head)),
                                            std::make_move_iterator(ps.end()));
                ps = add_spairs(to, std::move(tail), basis, b);
                head = 0;
                basis.push_back(std::move(b));
            }
        }
        ++iterations;
        if (hook) {
            RBState state{std::span<const SigPoly>(basis), std::span<const Term>(ss),
                          std::span<const PairEntry>(ps).subspan(head), zero_reductions};
            hook(state);
        }
    }
    return RBResult{std::move(basis), zero_reductions, iterations};
}

std::pair<std::vector<Polynomial>, unsigned long> gb_sig(std::span<const Polynomial> fs,
                                                         const TermOrder& to, RewriteOrder rw) {
    RBResult r = rb(fs, to, rw);
    std::vector<Polynomial> out;
    out.reserve(r.basis.size());
    for (auto& g : r.basis) out.push_back(std::move(g.poly));
    return {std::move(out), r.zero_reductions};
}

std::vector<std::string> check_rb_invariant(const RBState& state, const TermOrder& to) {
    std::vector<std::string> violations;
    const auto& gs = state.basis;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].poly.is_zero()) {
            violations.push_back("basis[" + std::to_string(i) + "] is a syzygy (zero polynomial)");
        }
        if (i > 0 && to.compare(gs[i - 1].sig, gs[i].sig) != std::strong_ordering::less) {
            violations.push_back("basis signatures not strictly increasing at " + std::to_string(i));
        }
        if (is_sig_red(SigRel::lt, TopRel::leq, to, gs.subspan(0, i), gs[i])) {
            violations.push_back("basis[" + std::to_string(i) +
                                 "] regular s-reducible modulo its predecessors");
        }
    }
    const auto& ps = state.pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i > 0 && !pair_entry_less(to, ps[i - 1], ps[i])) {
            violations.push_back("pair queue not sorted at " + std::to_string(i));
        }
        if (ps[i].kind == PairEntry::Kind::unit) {
            if (!(ps[i].sig == unit_term(static_cast<std::uint32_t>(ps[i].i)))) {
                violations.push_back("unit entry " + std::to_string(i) + " has wrong signature");
            }
        } else {
            if (ps[i].i >= gs.size() || ps[i].j >= gs.size()) {
                violations.push_back("pair entry " + std::to_string(i) + " references missing element");
            } else {
                SPairParts parts = spair_parts(to, gs[ps[i].j], gs[ps[i].i]);
                if (!parts.regular || !(parts.sig() == ps[i].sig)) {
                    violations.push_back("pair entry " + std::to_string(i) + " has stale signature");
                }
            }
        }
        if (!gs.empty() && to.less(ps[i].sig, gs.back().sig)) {
            violations.push_back("pair entry " + std::to_string(i) +
                                 " has signature below the basis");
        }
    }
    return violations;
}

}  // namespace sgb
