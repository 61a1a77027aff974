#include "sgb/verify.hpp"

#include "sgb/buchberger.hpp"

namespace sgb {

bool is_groebner_basis(const MonomialOrder& mo, std::span<const Polynomial> G) {
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[j].is_zero()) continue;
            if (!normal_form(mo, G, spoly(mo, G[i], G[j])).is_zero()) return false;
        }
    }
    return true;
}

bool check_containment(const MonomialOrder& mo, std::span<const Polynomial> fs,
                       std::span<const Polynomial> G) {
    for (const Polynomial& f : fs) {
        if (!normal_form(mo, G, f).is_zero()) return false;
    }
    return true;
}

bool is_min_sig_gb(const TermOrder& to, std::span<const SigPoly> B) {
    std::vector<SigPoly> others;
    for (std::size_t i = 0; i < B.size(); ++i) {
        others.clear();
        others.reserve(B.size() - 1);
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (j != i) others.push_back(B[j]);
        }
        if (is_sig_red(SigRel::leq, TopRel::eq, to, others, B[i])) return false;
    }
    return true;
}

CrossCheckReport cross_check(std::span<const Polynomial> fs, const TermOrder& to,
                             RewriteOrder rw) {
    const MonomialOrder& mo = to.mono;
    CrossCheckReport report;

    auto [sig_basis, sig_zeros] = gb_sig(fs, to, rw);
    BuchbergerResult buch = buchberger(mo, fs);

    report.sig_basis_size = sig_basis.size();
    report.buch_basis_size = buch.basis.size();
    report.sig_zero_reductions = sig_zeros;
    report.buch_zero_reductions = buch.zero_reductions;

    std::vector<Polynomial> sig_reduced = autoreduce(mo, sig_basis);
    std::vector<Polynomial> buch_reduced = autoreduce(mo, buch.basis);
    report.reduced_bases_equal = (sig_reduced == buch_reduced);

    report.sig_is_gb = is_groebner_basis(mo, sig_basis);
    report.buch_is_gb = is_groebner_basis(mo, buch.basis);
    report.inputs_reduce_in_sig = check_containment(mo, fs, sig_basis);
    report.inputs_reduce_in_buch = check_containment(mo, fs, buch.basis);

    if (report.reduced_bases_equal) report.reduced_basis = std::move(sig_reduced);
    return report;
}

}  // namespace sgb
