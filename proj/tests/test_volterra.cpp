#include <catch_amalgamated.hpp>

#include "mrb/checks.hpp"
#include "mrb/volterra.hpp"

using namespace mrb;

namespace {

const DecorationSet OMEGA(std::vector<std::string>{"a", "b", "c"});

PolyFunction X(int j = 1) { return Polynomial::var("x", j); }

} // namespace

TEST_CASE("exact integration") {
    KernelFamily k = KernelFamily::ones(OMEGA);
    CHECK(integrate_op("a", Polynomial::one(), k) == X());
    CHECK(integrate_op("a", X(), k) == X(2).scaled(Rational(1, 2)));
    CHECK(integrate_op("a", PolyFunction{}, k).is_zero());
    CHECK_THROWS_AS(integrate_op("zzz", X(), k), std::invalid_argument);
    CHECK_THROWS_AS(integrate_simple(Polynomial::var("y")), std::invalid_argument);
    // zero constant term, degree rises by deg(kernel)+1 on monomials
    KernelFamily kq;
    for (auto& w : OMEGA.names())
        kq.kernels[w] = X(2);
    auto r = integrate_op("b", X(3), kq);
    CHECK(r == X(6).scaled(Rational(1, 6)));
    CHECK(r.coeff(Monomial{}) == 0);
}

TEST_CASE("worked Rota-Baxter instance") {
    // k_a = 2, k_b = 3x, f = g = 1: both sides equal 3x^3
    KernelFamily k = KernelFamily::ones(OMEGA);
    k.kernels["a"] = Polynomial::constant(2);
    k.kernels["b"] = X().scaled(3);
    auto f = Polynomial::one(), g = Polynomial::one();
    auto lhs = integrate_op("a", f, k) * integrate_op("b", g, k);
    auto rhs = integrate_op("a", f * integrate_op("b", g, k), k) +
               integrate_op("b", integrate_op("a", f, k) * g, k);
    CHECK(lhs == X(3).scaled(3));
    CHECK(rhs == X(3).scaled(3));
    CHECK(vol_rb_defect("a", "b", f, g, k).is_zero());
}

TEST_CASE("Rota-Baxter identity on random kernels") {
    auto rep = suites::volterra_rb(CheckOptions{OMEGA, 200, 14, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
}

TEST_CASE("Zinbiel product of the model") {
    KernelFamily k = KernelFamily::ones(OMEGA);
    CHECK(volterra_zinbiel("a", Polynomial::one(), Polynomial::one(), k) == X());
    CHECK(volterra_zinbiel("a", X(), PolyFunction{}, k).is_zero());
    RandomGen g(71);
    for (int t = 0; t < 100; ++t) {
        auto kernels = suites::random_kernels(g, OMEGA);
        auto alpha = g.pick(OMEGA.names());
        auto beta = g.pick(OMEGA.names());
        auto x = g.polynomial({"x"}, 3);
        auto y = g.polynomial({"x"}, 3);
        auto z = g.polynomial({"x"}, 3);
        auto pr = [&](const std::string& w, const PolyFunction& u, const PolyFunction& v) {
            return volterra_zinbiel(w, u, v, kernels);
        };
        auto d = pr(beta, pr(alpha, x, y), z) - pr(alpha, x, pr(beta, y, z)) -
                 pr(beta, x, pr(alpha, z, y));
        CHECK(d.is_zero());
    }
}

TEST_CASE("Picard iteration") {
    KernelFamily k = KernelFamily::ones(OMEGA);
    std::map<std::string, Rational> c{{"a", 1}};
    // u = 1 + I(u), cap 5 -> truncated exponential
    auto u = picard_solve(Polynomial::one(), c, k, 5, 20);
    PolyFunction expect = Polynomial::one() + X() + X(2).scaled(Rational(1, 2)) +
                          X(3).scaled(Rational(1, 6)) + X(4).scaled(Rational(1, 24)) +
                          X(5).scaled(Rational(1, 120));
    CHECK(u == expect);
    // residual is zero up to the cap
    auto residual = truncate_above(Polynomial::one() + integrate_op("a", u, k), 5) - u;
    CHECK(residual.is_zero());

    CHECK(picard_solve(PolyFunction{}, c, k, 5, 20).is_zero());
    CHECK(picard_solve(X(2), {}, k, 5, 20) == X(2));
    CHECK_THROWS_AS(picard_solve(X(2), c, k, 1, 20), std::invalid_argument);
    CHECK_THROWS_AS(picard_solve(Polynomial::one(), c, k, 5, 2), std::runtime_error);
}

TEST_CASE("model satisfies the canonical-basis contract") {
    VolterraAlgebra F(OMEGA, KernelFamily::ones(OMEGA));
    CHECK(VolterraAlgebra::unit_term() == 0);
    CHECK(VolterraAlgebra::term_element(3) == X(3));
    CHECK(VolterraAlgebra::term_name(2) == "x^2");
    auto d = VolterraAlgebra::decompose(X(2).scaled(Rational(1, 3)) + Polynomial::one());
    REQUIRE(d.size() == 2);
    CHECK(F.mul_terms(1, 2) == X(3));
    CHECK(F.kappa_term("a", 1) == X(2).scaled(Rational(1, 2)));
    CHECK(F.fromBase(X(2)) == X(2));
}
