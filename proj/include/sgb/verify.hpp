#ifndef SGB_VERIFY_HPP
#define SGB_VERIFY_HPP

#include <span>
#include <vector>

#include "sgb/polynomial.hpp"
#include "sgb/sigcore.hpp"

namespace sgb {

/// Buchberger criterion, executed literally: every S-polynomial of two basis
/// elements reduces to zero.
bool is_groebner_basis(const MonomialOrder& mo, std::span<const Polynomial> G);

/// <fs> is contained in <G>, checked by reduction (G must be a Groebner basis).
bool check_containment(const MonomialOrder& mo, std::span<const Polynomial> fs,
                       std::span<const Polynomial> G);

/// No element is top s-reducible modulo the others.
bool is_min_sig_gb(const TermOrder& to, std::span<const SigPoly> B);

struct CrossCheckReport {
    std::size_t sig_basis_size = 0;
    std::size_t buch_basis_size = 0;
    unsigned long sig_zero_reductions = 0;
    unsigned long buch_zero_reductions = 0;
    bool reduced_bases_equal = false;
    bool sig_is_gb = false;
    bool buch_is_gb = false;
    bool inputs_reduce_in_sig = false;
    bool inputs_reduce_in_buch = false;
    std::vector<Polynomial> reduced_basis;  // the shared reduced basis when equal

    bool passed() const {
        return reduced_bases_equal && sig_is_gb && buch_is_gb && inputs_reduce_in_sig &&
               inputs_reduce_in_buch;
    }
};

/// Runs the signature algorithm and the Buchberger baseline on fs and checks
/// the outputs against each other: equal reduced bases, both pass the
/// Groebner test, and every input reduces to zero modulo both.
CrossCheckReport cross_check(std::span<const Polynomial> fs, const TermOrder& to, RewriteOrder rw);

}  // namespace sgb

#endif
