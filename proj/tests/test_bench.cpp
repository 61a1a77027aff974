#include <doctest.h>

#include "sgb/bench.hpp"
#include "test_util.hpp"

using namespace sgb;
using sgbt::P;

namespace {
const MonomialOrder DRL{MonomialOrder::Kind::degrevlex};
}

TEST_CASE("gen_system cyclic") {
    GeneratedSystem sys = gen_system(BenchFamily::cyclic, 3, DRL);
    CHECK(sys.variables == 3);
    REQUIRE(sys.polynomials.size() == 3);
    CHECK(sys.polynomials[0] == P(DRL, "x + y + z"));
    CHECK(sys.polynomials[1] == P(DRL, "x*y + y*z + z*x"));
    CHECK(sys.polynomials[2] == P(DRL, "x*y*z - 1"));
}

TEST_CASE("gen_system katsura") {
    GeneratedSystem sys = gen_system(BenchFamily::katsura, 1, DRL);
    CHECK(sys.variables == 2);
    REQUIRE(sys.polynomials.size() == 2);
    CHECK(sys.polynomials[0] == P(DRL, "x + 2*y - 1"));       // u0 + 2 u1 - 1
    CHECK(sys.polynomials[1] == P(DRL, "x^2 + 2*y^2 - x"));   // u0^2 + 2 u1^2 - u0
}

TEST_CASE("gen_system eco") {
    GeneratedSystem sys = gen_system(BenchFamily::eco, 3, DRL);
    CHECK(sys.variables == 3);
    REQUIRE(sys.polynomials.size() == 2);
    // x3*(x1 + x1*x2) - 1 and x1 + x2 + 1, with x1,x2,x3 as x,y,z
    CHECK(sys.polynomials[0] == P(DRL, "x*z + x*y*z - 1"));
    CHECK(sys.polynomials[1] == P(DRL, "x + y + 1"));

    GeneratedSystem sys4 = gen_system(BenchFamily::eco, 4, DRL);
    REQUIRE(sys4.polynomials.size() == 3);
    std::vector<std::string> v4{"a", "b", "c", "d"};  // x1..x4
    CHECK(sys4.polynomials[0] == P(DRL, "a*d + a*b*d + b*c*d - 1", v4));
    CHECK(sys4.polynomials[1] == P(DRL, "b*d + a*c*d - 2", v4));
    CHECK(sys4.polynomials[2] == P(DRL, "a + b + c + 1", v4));
}

TEST_CASE("gen_system noon") {
    GeneratedSystem sys = gen_system(BenchFamily::noon, 1, DRL);
    CHECK(sys.variables == 1);
    REQUIRE(sys.polynomials.size() == 1);
    CHECK(sys.polynomials[0] == P(DRL, "-11*x + 10"));

    GeneratedSystem sys2 = gen_system(BenchFamily::noon, 2, DRL);
    CHECK(sys2.polynomials[0] == P(DRL, "10*x*y^2 - 11*x + 10"));
    CHECK(sys2.polynomials[1] == P(DRL, "10*y*x^2 - 11*y + 10"));
}

TEST_CASE("gen_system minimum sizes") {
    CHECK_THROWS_AS(gen_system(BenchFamily::cyclic, 1, DRL), std::invalid_argument);
    CHECK_THROWS_AS(gen_system(BenchFamily::eco, 2, DRL), std::invalid_argument);
    CHECK_THROWS_AS(gen_system(BenchFamily::katsura, 0, DRL), std::invalid_argument);
    CHECK_THROWS_AS(gen_system(BenchFamily::noon, 0, DRL), std::invalid_argument);
}

TEST_CASE("run_bench") {
    BenchSpec spec;
    spec.family = BenchFamily::noon;
    spec.n = 1;
    spec.to = pot(DRL);
    spec.rw = RewriteOrder::rat;
    spec.algorithm = BenchSpec::Algorithm::sig;
    BenchResult r = run_bench(spec);
    CHECK(r.basis_size == 1);
    CHECK(r.zero_reductions == 0);

    // deterministic apart from the time field
    BenchSpec spec2 = spec;
    spec2.family = BenchFamily::cyclic;
    spec2.n = 4;
    BenchResult a = run_bench(spec2);
    BenchResult b = run_bench(spec2);
    CHECK(a.basis_size == b.basis_size);
    CHECK(a.zero_reductions == b.zero_reductions);

    spec2.algorithm = BenchSpec::Algorithm::buchberger;
    BenchResult c = run_bench(spec2);
    CHECK(c.basis_size > 0);
}
