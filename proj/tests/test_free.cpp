#include <catch_amalgamated.hpp>

#include "mrb/checks.hpp"
#include "mrb/free_mrba.hpp"
#include "mrb/json_io.hpp"

using namespace mrb;

namespace {

const DecorationSet OMEGA(std::vector<std::string>{"a", "b", "c"});

DecoratedWord w(const Monomial& head, std::vector<std::pair<std::string, Monomial>> tail = {}) {
    return DecoratedWord{head, std::move(tail)};
}

const Monomial X = Monomial::var("x");
const Monomial Y = Monomial::var("y");

} // namespace

TEST_CASE("decoration set validation") {
    CHECK_THROWS_AS(DecorationSet(std::vector<std::string>{}), std::invalid_argument);
    CHECK_THROWS_AS(DecorationSet(std::vector<std::string>{"a", "a"}), std::invalid_argument);
    CHECK_THROWS_WITH(OMEGA.require("zzz"), "unknown decoration: zzz");
}

TEST_CASE("embedding of polynomials") {
    CHECK(embed_j(Polynomial::one()) == FreeElement::single(w(Monomial{})));
    auto p = Polynomial::var("x").scaled(2) + Polynomial::constant(3);
    FreeElement expect;
    expect.add_term(w(X), 2);
    expect.add_term(w(Monomial{}), 3);
    CHECK(embed_j(p) == expect);
    CHECK(embed_j(Polynomial{}).is_zero());
}

TEST_CASE("diamond product") {
    CHECK(diamond(embed_j(Polynomial::var("x")), embed_j(Polynomial::var("y"))) ==
          FreeElement::single(w(X * Y)));
    // heads multiply, tail carried along
    auto lhs = diamond(FreeElement::single(w(X, {{"a", Y}})), FreeElement::single(w(Y)));
    CHECK(lhs == FreeElement::single(w(X * Y, {{"a", Y}})));
    // two-letter tails shuffle
    auto s = diamond(FreeElement::single(w(Monomial{}, {{"a", X}})),
                     FreeElement::single(w(Monomial{}, {{"b", Y}})));
    FreeElement expect;
    expect.add_term(w(Monomial{}, {{"a", X}, {"b", Y}}), 1);
    expect.add_term(w(Monomial{}, {{"b", Y}, {"a", X}}), 1);
    CHECK(s == expect);
}

TEST_CASE("diamond is commutative associative unital") {
    RandomGen g(11);
    auto unit = embed_j(Polynomial::one());
    for (int t = 0; t < 30; ++t) {
        auto a = g.free_element(OMEGA, {"x", "y"}, 2);
        auto b = g.free_element(OMEGA, {"x", "y"}, 2);
        auto c = g.free_element(OMEGA, {"x", "y"}, 2);
        CHECK(diamond(a, b) == diamond(b, a));
        CHECK(diamond(diamond(a, b), c) == diamond(a, diamond(b, c)));
        CHECK(diamond(a, unit) == a);
    }
}

TEST_CASE("operator pushes head into tail") {
    CHECK(apply_P(OMEGA, "a", embed_j(Polynomial::var("x"))) ==
          FreeElement::single(w(Monomial{}, {{"a", X}})));
    CHECK(apply_P(OMEGA, "b", FreeElement::single(w(X, {{"a", Y}}))) ==
          FreeElement::single(w(Monomial{}, {{"b", X}, {"a", Y}})));
    CHECK(apply_P(OMEGA, "a", FreeElement{}).is_zero());
    CHECK_THROWS_AS(apply_P(OMEGA, "zzz", FreeElement{}), std::invalid_argument);
}

TEST_CASE("matching Rota-Baxter identity") {
    auto x = embed_j(Polynomial::var("x"));
    CHECK(rb_defect(OMEGA, "a", "a", x, x).is_zero());
    CHECK(rb_defect(OMEGA, "a", "b", x, FreeElement{}).is_zero());
    auto rep = suites::rb(CheckOptions{OMEGA, 200, 1, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
}

TEST_CASE("P1(x)*P1(x) expands to twice the nested word") {
    auto px = apply_P(OMEGA, "a", embed_j(Polynomial::var("x")));
    CHECK(diamond(px, px) ==
          FreeElement::single(w(Monomial{}, {{"a", X}, {"a", X}}), 2));
}

TEST_CASE("combined operator family") {
    RandomGen g(3);
    auto a = g.free_element(OMEGA, {"x", "y"}, 2);
    auto b = g.free_element(OMEGA, {"x", "y"}, 2);
    CHECK(combined_operator_defect(OMEGA, {}, a, b).is_zero());
    CHECK(combined_operator_defect(OMEGA, {{"a", 1}}, a, b) == rb_defect(OMEGA, "a", "a", a, b));
    auto rep = suites::combined(CheckOptions{OMEGA, 100, 2, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
}

TEST_CASE("nested closed form reproduces each word") {
    CHECK(nested_form(OMEGA, w(X)) == FreeElement::single(w(X)));
    CHECK(nested_form(OMEGA, w(X, {{"a", Y}})) == FreeElement::single(w(X, {{"a", Y}})));
    CHECK(nested_form(OMEGA, w(Monomial{}, {{"a", X}, {"b", Y}})) ==
          FreeElement::single(w(Monomial{}, {{"a", X}, {"b", Y}})));
    auto rep = suites::nested(CheckOptions{OMEGA, 200, 4, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
}

TEST_CASE("universal lift examples") {
    VolterraAlgebra vol(OMEGA, KernelFamily::ones(OMEGA));
    std::map<std::string, PolyFunction> f{{"y", Polynomial::var("x")}};
    // word(1,[(w,1)]) -> I_w(1) = x
    CHECK(universal_lift(vol, f, FreeElement::single(w(Monomial{}, {{"a", Monomial{}}}))) ==
          Polynomial::var("x"));
    // word(y,[(w,y)]) -> x * I_w(x) = x^3/2
    CHECK(universal_lift(vol, f, FreeElement::single(w(Y, {{"a", Y}}))) ==
          Polynomial::var("x", 3).scaled(Rational(1, 2)));
    CHECK_THROWS_WITH(
        universal_lift(vol, {}, FreeElement::single(w(Y))), "unassigned variable: y");
    auto rep = suites::lift_free(CheckOptions{OMEGA, 100, 5, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
}

TEST_CASE("free element text and JSON round trip") {
    FreeElement e;
    e.add_term(w(X, {{"a", Y}}), Rational(-1, 2));
    e.add_term(w(Monomial{}), 3);
    CHECK(to_string(e) == "3 * 1 - 1/2 * x (x) (a:y)");
    CHECK(free_from_json(free_to_json(e)) == e);
    CHECK(to_string(FreeElement{}) == "0");
}
