#ifndef SGB_BUCHBERGER_HPP
#define SGB_BUCHBERGER_HPP

#include <span>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgb {

struct BuchbergerResult {
    std::vector<Polynomial> basis;
    unsigned long zero_reductions = 0;
};

/// Classical Buchberger algorithm with the product and chain criteria.
///
/// Pair selection is the normal strategy: minimal lcm degree, then lex on the
/// lcm, then the index pair. The chain criterion scans middle elements in
/// index order and requires both supporting pairs to be already treated and
/// to have lcms different from the pair's own. Basis elements are stored in
/// integer-primitive form with positive leading coefficient.
BuchbergerResult buchberger(const MonomialOrder& mo, std::span<const Polynomial> fs);

}  // namespace sgb

#endif
