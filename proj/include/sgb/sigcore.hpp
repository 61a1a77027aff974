#ifndef SGB_SIGCORE_HPP
#define SGB_SIGCORE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgb/order.hpp"
#include "sgb/polynomial.hpp"

namespace sgb {

/// A sig-poly-pair: the signature and the polynomial part of a module
/// element, which is all the data the signature algorithms need.
struct SigPoly {
    Term sig;
    Polynomial poly;

    friend bool operator==(const SigPoly& a, const SigPoly& b) {
        return a.sig == b.sig && a.poly == b.poly;
    }
};

enum class RewriteOrder { rat, add };

/// Compares two sig-poly-pairs under the selected rewrite order.
///
/// rat: the pair with the larger lp(other)·own-signature cross product is the
/// larger one, signatures breaking ties; requires nonzero polynomial parts.
/// add: plain signature comparison.
std::strong_ordering spp_compare(RewriteOrder rw, const TermOrder& to, const SigPoly& a,
                                 const SigPoly& b);

/// Whether a (drawn from basis) is the rewrite-order-maximal element of basis
/// whose signature divides u.
bool is_canon_rewriter(RewriteOrder rw, const TermOrder& to, std::span<const SigPoly> basis,
                       const Term& u, const SigPoly& a);

/// Reduces a's polynomial part with regular s-reduction steps until none
/// applies: the cancelled power-product is always the largest reducible one,
/// ties going to the earliest basis element. The signature is preserved.
SigPoly sig_trd(const TermOrder& to, std::span<const SigPoly> basis, const SigPoly& a);

enum class SigRel { lt, leq, eq };  // relation imposed on t·sig(g) vs sig(a)
enum class TopRel { lt, leq, eq };  // relation imposed on t·lp(g) vs lp(a)

/// Whether a single s-reduction step of the given flavor applies to a.
bool is_sig_red(SigRel r1, TopRel r2, const TermOrder& to, std::span<const SigPoly> basis,
                const SigPoly& a);

/// The data of the S-pair of a and b: multiplied signatures u_a and u_b,
/// regularity (u_a != u_b), the pair's signature (max; regular pairs only),
/// and the S-polynomial of the parts. Both polynomial parts must be nonzero.
struct SPairParts {
    bool regular = false;
    Term u_a;
    Term u_b;
    Polynomial poly;

    const Term& sig() const;  // throws for singular pairs

    std::optional<Term> sig_opt;
};

SPairParts spair_parts(const TermOrder& to, const SigPoly& a, const SigPoly& b);

/// Queue entry of the main loop: either an S-pair of two basis elements
/// (referenced by index, i older than j) or an input basis vector.
struct PairEntry {
    enum class Kind { unit, spair };
    Kind kind = Kind::unit;
    std::size_t i = 0;  // unit: the component; spair: older element
    std::size_t j = 0;  // spair: newer element
    Term sig;           // cached pair signature, used for queue ordering

    static PairEntry unit(std::size_t component) {
        return PairEntry{Kind::unit, component, 0, unit_term(static_cast<std::uint32_t>(component))};
    }
    static PairEntry spair(std::size_t i, std::size_t j, Term sig) {
        return PairEntry{Kind::spair, i, j, std::move(sig)};
    }
};

/// Total queue order: ascending signature, units before S-pairs, then indices.
bool pair_entry_less(const TermOrder& to, const PairEntry& a, const PairEntry& b);

/// Signatures of the Koszul syzygies of fs, pruned to divisibility-minimal.
std::vector<Term> koszul_syz_sigs(const TermOrder& to, std::span<const Polynomial> fs);

/// When e is an input basis vector, enlarges ss with the signatures of the
/// syzygies it spans against the current basis (candidates with colliding
/// lead terms are skipped; the result is pruned to divisibility-minimal
/// elements). S-pair entries leave ss unchanged.
std::vector<Term> new_syz_sigs(const TermOrder& to, std::vector<Term> ss,
                               std::span<const SigPoly> basis, const PairEntry& e,
                               std::span<const Polynomial> fs);

/// True when the entry need not be reduced: its signature is covered by a
/// known syzygy signature, or a constituent is not the canonical rewriter of
/// its multiplied signature. S-pair entries must be regular.
bool sig_crit(RewriteOrder rw, const TermOrder& to, std::span<const SigPoly> basis,
              std::span<const Term> ss, const PairEntry& e);

/// Materializes a queue entry as a sig-poly-pair. S-pairs are built with the
/// newer element first, which fixes the sign of the S-polynomial.
SigPoly poly_of_pair(const TermOrder& to, const PairEntry& e, std::span<const SigPoly> basis,
                     std::span<const Polynomial> fs);

/// Inserts the regular S-pairs of b (about to be appended at index
/// basis.size()) against every basis element, keeping ps sorted.
std::vector<PairEntry> add_spairs(const TermOrder& to, std::vector<PairEntry> ps,
                                  std::span<const SigPoly> basis, const SigPoly& b);

/// Snapshot of the main-loop state, passed to the per-iteration hook.
struct RBState {
    std::span<const SigPoly> basis;
    std::span<const Term> syz_sigs;
    std::span<const PairEntry> pairs;
    unsigned long zero_reductions = 0;
};

struct RBResult {
    std::vector<SigPoly> basis;
    unsigned long zero_reductions = 0;
    unsigned long iterations = 0;
};

using RBHook = std::function<void(const RBState&)>;

/// The main loop: computes a rewrite basis of fs. Returns the basis (in
/// insertion order, signatures strictly increasing) and the number of
/// reductions to zero. The hook, when given, runs once per loop iteration.
RBResult rb(std::span<const Polynomial> fs, const TermOrder& to, RewriteOrder rw,
            const RBHook& hook = nullptr);

/// Projection of rb onto polynomial parts: a Groebner basis of <fs>.
std::pair<std::vector<Polynomial>, unsigned long> gb_sig(std::span<const Polynomial> fs,
                                                         const TermOrder& to, RewriteOrder rw);

/// Checks the machine-checkable main-loop invariants; returns one description
/// per violation, empty when all hold.
std::vector<std::string> check_rb_invariant(const RBState& state, const TermOrder& to);

}  // namespace sgb

#endif
