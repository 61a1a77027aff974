#include "sgb/bench.hpp"

#include <chrono>
#include <stdexcept>

#include "sgb/buchberger.hpp"

namespace sgb {

std::string family_name(BenchFamily family) {
    switch (family) {
        case BenchFamily::cyclic: return "cyclic";
        case BenchFamily::katsura: return "katsura";
        case BenchFamily::eco: return "eco";
        case BenchFamily::noon: return "noon";
    }
    return "?";
}

namespace {

GeneratedSystem gen_cyclic(unsigned n, const MonomialOrder& mo) {
    GeneratedSystem sys{n, {}};
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Monomial> terms;
        for (unsigned i = 0; i < n; ++i) {
            PowerProduct pp;
            for (unsigned j = 0; j < k; ++j) pp = pp * PowerProduct::variable((i + j) % n);
            terms.push_back(Monomial{std::move(pp), Rational(1)});
        }
        sys.polynomials.push_back(Polynomial::from_monomials(mo, std::move(terms)));
    }
    PowerProduct all;
    for (unsigned i = 0; i < n; ++i) all = all * PowerProduct::variable(i);
    sys.polynomials.push_back(Polynomial::from_monomials(
        mo, {Monomial{std::move(all), Rational(1)}, Monomial{PowerProduct{}, Rational(-1)}}));
    return sys;
}

// Variables u0..un; u_j reads as 0 for j > n.
GeneratedSystem gen_katsura(unsigned n, const MonomialOrder& mo) {
    GeneratedSystem sys{n + 1, {}};
    std::vector<Monomial> linear;
    linear.push_back(Monomial{PowerProduct::variable(0), Rational(1)});
    for (unsigned l = 1; l <= n; ++l) {
        linear.push_back(Monomial{PowerProduct::variable(l), Rational(2)});
    }
    linear.push_back(Monomial{PowerProduct{}, Rational(-1)});
    sys.polynomials.push_back(Polynomial::from_monomials(mo, std::move(linear)));
    for (unsigned m = 0; m < n; ++m) {
        std::vector<Monomial> terms;
        for (int l = -static_cast<int>(n); l <= static_cast<int>(n); ++l) {
            unsigned a = static_cast<unsigned>(l < 0 ? -l : l);
            int diff = static_cast<int>(m) - l;
            unsigned b = static_cast<unsigned>(diff < 0 ? -diff : diff);
            if (a > n || b > n) continue;
            terms.push_back(Monomial{PowerProduct::variable(a) * PowerProduct::variable(b),
                                     Rational(1)});
        }
        terms.push_back(Monomial{PowerProduct::variable(m), Rational(-1)});
        sys.polynomials.push_back(Polynomial::from_monomials(mo, std::move(terms)));
    }
    return sys;
}

// Variables x1..xn mapped to indices 0..n-1.
GeneratedSystem gen_eco(unsigned n, const MonomialOrder& mo) {
    GeneratedSystem sys{n, {}};
    auto x = [](unsigned i) { return PowerProduct::variable(i - 1); };
    for (unsigned k = 1; k + 2 <= n; ++k) {
        std::vector<Monomial> terms;
        terms.push_back(Monomial{x(n) * x(k), Rational(1)});
        for (unsigned i = 1; i + k + 1 <= n; ++i) {
            terms.push_back(Monomial{x(n) * x(i) * x(i + k), Rational(1)});
        }
        terms.push_back(Monomial{PowerProduct{}, Rational(-static_cast<long>(k))});
        sys.polynomials.push_back(Polynomial::from_monomials(mo, std::move(terms)));
    }
    std::vector<Monomial> last;
    for (unsigned i = 1; i < n; ++i) last.push_back(Monomial{x(i), Rational(1)});
    last.push_back(Monomial{PowerProduct{}, Rational(1)});
    sys.polynomials.push_back(Polynomial::from_monomials(mo, std::move(last)));
    return sys;
}

GeneratedSystem gen_noon(unsigned n, const MonomialOrder& mo) {
    GeneratedSystem sys{n, {}};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Monomial> terms;
        for (unsigned j = 0; j < n; ++j) {
            if (j == i) continue;
            terms.push_back(Monomial{
                PowerProduct::variable(i) * PowerProduct::variable(j, 2), Rational(10)});
        }
        terms.push_back(Monomial{PowerProduct::variable(i), Rational(-11)});
        terms.push_back(Monomial{PowerProduct{}, Rational(10)});
        sys.polynomials.push_back(Polynomial::from_monomials(mo, std::move(terms)));
    }
    return sys;
}

}  // namespace

GeneratedSystem gen_system(BenchFamily family, unsigned n, const MonomialOrder& mo) {
    switch (family) {
        case BenchFamily::cyclic:
            if (n < 2) throw std::invalid_argument("cyclic requires n >= 2");
            return gen_cyclic(n, mo);
        case BenchFamily::katsura:
            if (n < 1) throw std::invalid_argument("katsura requires n >= 1");
            return gen_katsura(n, mo);
        case BenchFamily::eco:
            if (n < 3) throw std::invalid_argument("eco requires n >= 3");
            return gen_eco(n, mo);
        case BenchFamily::noon:
            if (n < 1) throw std::invalid_argument("noon requires n >= 1");
            return gen_noon(n, mo);
    }
    throw std::invalid_argument("unknown benchmark family");
}

BenchResult run_bench(const BenchSpec& spec) {
    GeneratedSystem sys = gen_system(spec.family, spec.n, spec.to.mono);
    BenchResult result;
    auto start = std::chrono::steady_clock::now();
    if (spec.algorithm == BenchSpec::Algorithm::sig) {
        auto [basis, zeros] = gb_sig(sys.polynomials, spec.to, spec.rw);
        result.basis_size = basis.size();
        result.zero_reductions = zeros;
    } else {
        BuchbergerResult r = buchberger(spec.to.mono, sys.polynomials);
        result.basis_size = r.basis.size();
        result.zero_reductions = r.zero_reductions;
    }
    auto end = std::chrono::steady_clock::now();
    result.time_ms = static_cast<unsigned long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
    return result;
}

}  // namespace sgb
