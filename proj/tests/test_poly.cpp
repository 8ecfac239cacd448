#include <catch_amalgamated.hpp>

#include <random>

#include "mrb/polynomial.hpp"

using namespace mrb;

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("5/10")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("monomial ordering is graded lexicographic") {
    Monomial one;
    Monomial x = Monomial::var("x");
    Monomial y = Monomial::var("y");
    Monomial x2 = Monomial::var("x", 2);
    CHECK(one < x);
    CHECK(x < y);
    CHECK(y < x2);
    CHECK((x * y).str() == "x*y");
    CHECK(x2.str() == "x^2");
    CHECK(one.is_one());
}

TEST_CASE("polynomial addition") {
    auto x = Polynomial::var("x");
    CHECK((x + Polynomial::one()) + x.scaled(-1) == Polynomial::one());
    CHECK(x + Polynomial{} == x);
    // exact rational arithmetic: (1/2)x + (1/3)x = (5/6)x
    CHECK(x.scaled(Rational(1, 2)) + x.scaled(Rational(1, 3)) == x.scaled(Rational(5, 6)));
}

TEST_CASE("polynomial multiplication") {
    auto x = Polynomial::var("x");
    auto y = Polynomial::var("y");
    CHECK((x * y).str() == "x*y");
    CHECK((x + Polynomial::one()) * (x - Polynomial::one()) ==
          Polynomial::var("x", 2) - Polynomial::one());
    CHECK(x * Polynomial::one() == x);
}

TEST_CASE("augmentation split") {
    auto p = Polynomial::constant(3) + Polynomial::var("x").scaled(2);
    auto [c, plus] = p.aug_split();
    CHECK(c == 3);
    CHECK(plus == Polynomial::var("x").scaled(2));
    CHECK(Polynomial::constant(c) + plus == p);

    auto [c0, p0] = Polynomial{}.aug_split();
    CHECK(c0 == 0);
    CHECK(p0.is_zero());

    auto q = Polynomial::monomial(Monomial::var("x", 2) * Monomial::var("y")) -
             Polynomial::constant(Rational(1, 2));
    auto [cq, pq] = q.aug_split();
    CHECK(cq == Rational(-1, 2));
    CHECK(pq == Polynomial::monomial(Monomial::var("x", 2) * Monomial::var("y")));
}

TEST_CASE("substitution") {
    PolynomialAlgebra alg;
    std::map<std::string, Polynomial> to_x{{"y", Polynomial::var("x")}};
    std::map<std::string, Polynomial> to_x2{{"y", Polynomial::var("x", 2)}};

    CHECK(Polynomial::var("y", 2).substitute(alg, to_x) == Polynomial::var("x", 2));
    CHECK(Polynomial::one().substitute(alg, {}) == Polynomial::one());
    // 2y + 3 with y -> x^2
    auto p = Polynomial::var("y").scaled(2) + Polynomial::constant(3);
    CHECK(p.substitute(alg, to_x2) == Polynomial::var("x", 2).scaled(2) + Polynomial::constant(3));
    CHECK_THROWS_WITH(Polynomial::var("z").substitute(alg, to_x),
                      "unassigned variable: z");
}

TEST_CASE("substitution is a ring homomorphism on random pairs") {
    std::mt19937_64 rng(7);
    PolynomialAlgebra alg;
    std::map<std::string, Polynomial> f{{"u", Polynomial::var("x") + Polynomial::one()},
                                        {"v", Polynomial::var("x", 2).scaled(Rational(1, 3))}};
    auto rnd = [&] {
        Polynomial p;
        for (int i = 0; i < 3; ++i) {
            Monomial m = Monomial::var("u", static_cast<int>(rng() % 3)) *
                         Monomial::var("v", static_cast<int>(rng() % 3));
            p += Polynomial::monomial(m, Rational(static_cast<int>(rng() % 7) - 3));
        }
        return p;
    };
    for (int t = 0; t < 50; ++t) {
        auto p = rnd(), q = rnd();
        CHECK((p * q).substitute(alg, f) == p.substitute(alg, f) * q.substitute(alg, f));
        CHECK((p + q).substitute(alg, f) == p.substitute(alg, f) + q.substitute(alg, f));
        CHECK(p * q == q * p);
        CHECK((p * q) * p == p * (q * p));
        CHECK(p * (q + p) == p * q + p * p);
    }
}

TEST_CASE("canonical text form") {
    auto p = Polynomial::monomial(Monomial::var("x", 2) * Monomial::var("y"), 2) -
             Polynomial::constant(Rational(1, 3));
    CHECK(p.str() == "2*x^2*y - 1/3");
    CHECK(Polynomial{}.str() == "0");
}
