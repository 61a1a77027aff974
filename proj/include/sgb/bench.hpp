#ifndef SGB_BENCH_HPP
#define SGB_BENCH_HPP

#include <string>
#include <vector>

#include "sgb/polynomial.hpp"
#include "sgb/sigcore.hpp"

namespace sgb {

enum class BenchFamily { cyclic, katsura, eco, noon };

std::string family_name(BenchFamily family);

struct BenchSpec {
    BenchFamily family = BenchFamily::cyclic;
    unsigned n = 2;
    TermOrder to;
    RewriteOrder rw = RewriteOrder::rat;
    enum class Algorithm { sig, buchberger };
    Algorithm algorithm = Algorithm::sig;
};

struct GeneratedSystem {
    unsigned variables = 0;
    std::vector<Polynomial> polynomials;
};

/// The standard benchmark systems.
///
/// cyclic-n  over x0..x_{n-1} (n >= 2)
/// katsura-n over u0..u_n, i.e. n+1 variables (n >= 1)
/// eco-n     over x1..xn (n >= 3)
/// noon-n    over x1..xn (n >= 1)
GeneratedSystem gen_system(BenchFamily family, unsigned n, const MonomialOrder& mo);

struct BenchResult {
    std::size_t basis_size = 0;
    unsigned long zero_reductions = 0;
    unsigned long time_ms = 0;
};

BenchResult run_bench(const BenchSpec& spec);

}  // namespace sgb

#endif
